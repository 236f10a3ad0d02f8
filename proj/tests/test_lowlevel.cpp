#include <doctest.h>

#include "momapf/lowlevel.hpp"
#include "momapf/oracle.hpp"
#include "momapf/rng.hpp"
#include "support/test_util.hpp"

using namespace momapf;
using namespace momapf::test;

namespace {

// All-pairs shortest path oracle per objective over directed action costs.
std::vector<std::vector<Cost>> floyd_warshall(const GridGraph& g,
                                              const EdgeCostTable& costs,
                                              int objective) {
  const int n = g.num_cells();
  std::vector<std::vector<Cost>> d(n, std::vector<Cost>(n, kCostInf));
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < n; ++v) {
    if (!g.passable(v)) continue;
    d[v][v] = 0;
    const int cnt = g.neighbors(v, nb);
    for (int k = 0; k < cnt; ++k)
      d[v][nb[k]] = costs.cost(v, nb[k])[objective];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] >= kCostInf) continue;
      for (int j = 0; j < n; ++j)
        if (d[k][j] < kCostInf && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

std::vector<Constraint> random_constraints(const GridGraph& g, SplitMix64& rng,
                                           int agent, int count, Vertex start) {
  std::vector<Constraint> out;
  std::array<Vertex, 4> nb{};
  while (static_cast<int>(out.size()) < count) {
    Vertex v = static_cast<Vertex>(rng.uniform(0, g.num_cells() - 1));
    if (!g.passable(v)) continue;
    const TimeStep t = static_cast<TimeStep>(rng.uniform(0, 6));
    if (rng.next() % 2 == 0) {
      if (v == start && t == 0) continue;
      out.push_back({agent, v, v, t});
    } else {
      const int n = g.neighbors(v, nb);
      if (n == 0) continue;
      out.push_back({agent, v, nb[rng.uniform(0, n - 1)], t});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("heuristic is zero at the goal") {
  const GridGraph g = make_grid({"...", "..."});
  const EdgeCostTable costs = unit_costs(g, 2);
  const HeuristicTable h = build_heuristic(g, costs, 4);
  CHECK(h.at(4) == CostVector{0, 0});
}

TEST_CASE("heuristic on a chain counts edges") {
  const GridGraph g = make_grid({"..."});
  const EdgeCostTable costs = unit_costs(g, 2);
  const HeuristicTable h = build_heuristic(g, costs, 2);
  CHECK(h.at(0) == CostVector{2, 2});
  CHECK(h.at(1) == CostVector{1, 1});
}

TEST_CASE("heuristic marks unreachable vertices") {
  const GridGraph g = make_grid({".@."});
  const EdgeCostTable costs = unit_costs(g, 1);
  const HeuristicTable h = build_heuristic(g, costs, 2);
  CHECK_FALSE(h.reachable(0));
  CHECK(h.reachable(2));
}

TEST_CASE("heuristic components match an all-pairs oracle") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Instance inst = random_instance(seed, 4, 4, {}, 1, 2, 9);
    const HeuristicTable h =
        build_heuristic(inst.grid, inst.costs, inst.goals[0]);
    for (int m = 0; m < 2; ++m) {
      const auto d = floyd_warshall(inst.grid, inst.costs, m);
      for (Vertex v = 0; v < inst.grid.num_cells(); ++v)
        CHECK(h.at(v)[m] == d[v][inst.goals[0]]);
    }
  }
}

TEST_CASE("empty constraint sets allow every move") {
  const ConstraintSet cs(0, {});
  CHECK(consistent(3, 5, 4, cs));
  CHECK(consistent(3, 5, 3, cs));
}

TEST_CASE("vertex constraints block the arrival time only") {
  const ConstraintSet cs(0, {{0, 7, 7, 4}});
  CHECK_FALSE(consistent(6, 3, 7, cs));  // arrive at 7 at t=4
  CHECK(consistent(6, 2, 7, cs));        // arrive at t=3
  CHECK(consistent(7, 4, 6, cs));        // leaving is fine
}

TEST_CASE("edge constraints are directional") {
  const ConstraintSet cs(1, {{1, 2, 3, 5}});
  CHECK_FALSE(consistent(2, 5, 3, cs));
  CHECK(consistent(3, 5, 2, cs));  // opposite direction stays open
  CHECK(consistent(2, 4, 3, cs));  // other times stay open
}

TEST_CASE("constraints of other agents are ignored") {
  const ConstraintSet cs(0, {{1, 2, 2, 3}});
  CHECK(cs.size() == 0);
  CHECK(consistent(1, 2, 2, cs));
}

TEST_CASE("single objective unconstrained search is plain shortest path") {
  const GridGraph g = make_grid({"....", "....", "....", "...."});
  const EdgeCostTable costs = unit_costs(g, 1);
  const Vertex start = g.cell(0, 0), goal = g.cell(3, 3);
  const HeuristicTable h = build_heuristic(g, costs, goal);
  const auto front = namoa_dr_st(g, costs, start, goal, {}, h, 24);
  REQUIRE(front.size() == 1);
  CHECK(front[0].cost == CostVector{6});
  CHECK(front[0].path.size() == 7);
}

TEST_CASE("a vertex constraint on the straight line costs at most one wait") {
  const GridGraph g = make_grid({"....", "....", "...."});
  const EdgeCostTable costs = unit_costs(g, 1);
  const Vertex start = g.cell(0, 0), goal = g.cell(3, 0);
  const HeuristicTable h = build_heuristic(g, costs, goal);
  const auto base = namoa_dr_st(g, costs, start, goal, {}, h, 12);
  REQUIRE(base.size() == 1);

  const std::vector<Constraint> all = {{0, g.cell(1, 0), g.cell(1, 0), 1}};
  const ConstraintSet cs(0, all);
  const auto constrained = namoa_dr_st(g, costs, start, goal, cs, h, 12);
  REQUIRE(constrained.size() == 1);
  CHECK(constrained[0].cost[0] - base[0].cost[0] <= 1);
  CHECK(constrained[0].cost[0] >= base[0].cost[0]);

  const auto truth = single_agent_front_bruteforce(g, costs, start, goal, all,
                                                   0, 12);
  CHECK(cost_set(constrained) == cost_set(truth));
}

TEST_CASE("random constrained instances match the brute-force front") {
  SplitMix64 rng(5150);
  const TimeStep horizon = 12;
  for (int it = 0; it < 40; ++it) {
    const int m = 1 + it % 3;
    const Instance inst = random_instance(
        3000 + it, 4, 4,
        it % 3 == 0 ? std::vector<Vertex>{6} : std::vector<Vertex>{}, 1, m, 3);
    const auto all = random_constraints(inst.grid, rng, 0, 1 + it % 3,
                                        inst.starts[0]);
    const ConstraintSet cs(0, all);
    const HeuristicTable h =
        build_heuristic(inst.grid, inst.costs, inst.goals[0]);

    LowLevelStats stats;
    const auto front = namoa_dr_st(inst.grid, inst.costs, inst.starts[0],
                                   inst.goals[0], cs, h, horizon, &stats);
    const auto truth = single_agent_front_bruteforce(
        inst.grid, inst.costs, inst.starts[0], inst.goals[0], all, 0, horizon);
    REQUIRE(cost_set(front) == cost_set(truth));
    CHECK(is_antichain(cost_set(front)));

    for (const auto& sol : front) {
      // Consistency replay and admissibility along the path.
      CHECK(path_consistent(sol.path, cs));
      CHECK(path_cost(sol.path, inst.costs) == sol.cost);
      CostVector suffix(static_cast<std::size_t>(m));
      for (std::size_t k = sol.path.size(); k-- > 0;) {
        if (k + 1 < sol.path.size())
          suffix += inst.costs.cost(sol.path[k], sol.path[k + 1]);
        CHECK(dominates_or_equal(h.at(sol.path[k]), suffix));
      }
    }

    // Expanded-cost records per timed vertex, in expansion order: no stored
    // truncated cost may dominate or equal a later one (the later label
    // would have been pruned). The reverse can hold because the dropped
    // component grows along the extraction order.
    for (const auto& [state, vecs] : stats.closed)
      for (std::size_t x = 0; x < vecs.size(); ++x)
        for (std::size_t y = x + 1; y < vecs.size(); ++y)
          CHECK_FALSE(dominates_or_equal(vecs[x], vecs[y]));

    if (m == 2) {
      const auto boa = boa_st(inst.grid, inst.costs, inst.starts[0],
                              inst.goals[0], cs, h, horizon);
      CHECK(cost_set(boa) == cost_set(front));
      for (const auto& sol : boa) CHECK(path_consistent(sol.path, cs));
    }
  }
}

TEST_CASE("two corridors trade the two objectives") {
  const GridGraph g = make_grid({"..", ".."});
  EdgeCostTable costs(g, 2);
  for (Vertex v : {0, 1, 2, 3}) costs.set_undirected(v, v, CostVector{5, 5});
  costs.set_undirected(0, 1, CostVector{1, 5});
  costs.set_undirected(1, 3, CostVector{1, 5});
  costs.set_undirected(0, 2, CostVector{5, 1});
  costs.set_undirected(2, 3, CostVector{5, 1});
  const HeuristicTable h = build_heuristic(g, costs, 3);

  const auto namoa = namoa_dr_st(g, costs, 0, 3, {}, h, 8);
  const auto boa = boa_st(g, costs, 0, 3, {}, h, 8);
  const std::vector<CostVector> expected = {{2, 10}, {10, 2}};
  CHECK(cost_set(namoa) == expected);
  CHECK(cost_set(boa) == expected);
}

TEST_CASE("uniform costs leave a single front point") {
  const GridGraph g = make_grid({"...", "..."});
  const EdgeCostTable costs = uniform_costs(g, CostVector{1, 1});
  const HeuristicTable h = build_heuristic(g, costs, 5);
  CHECK(boa_st(g, costs, 0, 5, {}, h, 12).size() == 1);
}

TEST_CASE("goal labels wait out future goal constraints") {
  const GridGraph g = make_grid({"..."});
  const EdgeCostTable costs = unit_costs(g, 1);
  const Vertex start = 0, goal = 2;
  const HeuristicTable h = build_heuristic(g, costs, goal);
  // The goal is forbidden at t=3; an arrival at t=2 cannot simply stop.
  const std::vector<Constraint> all = {{0, goal, goal, 3}};
  const ConstraintSet cs(0, all);
  const auto front = namoa_dr_st(g, costs, start, goal, cs, h, 12);
  REQUIRE(front.size() == 1);
  CHECK(front[0].cost[0] >= 4);
  CHECK(static_cast<TimeStep>(front[0].path.size()) - 1 >= 4);
  const auto truth =
      single_agent_front_bruteforce(g, costs, start, goal, all, 0, 12);
  CHECK(cost_set(front) == cost_set(truth));
}

TEST_CASE("no consistent path within the horizon yields an empty front") {
  const GridGraph g = make_grid({".."});
  const EdgeCostTable costs = unit_costs(g, 1);
  const HeuristicTable h = build_heuristic(g, costs, 1);
  // Start boxed in: waiting and entering the neighbor both forbidden at t=1.
  const std::vector<Constraint> all = {{0, 0, 0, 1}, {0, 1, 1, 1}};
  const ConstraintSet cs(0, all);
  CHECK(namoa_dr_st(g, costs, 0, 1, cs, h, 1).empty());
}

TEST_CASE("boa rejects other objective counts") {
  const GridGraph g = make_grid({".."});
  const EdgeCostTable costs = unit_costs(g, 3);
  const HeuristicTable h = build_heuristic(g, costs, 1);
  CHECK_THROWS_AS(boa_st(g, costs, 0, 1, {}, h, 4), std::invalid_argument);
}

TEST_CASE("fronts do not depend on the heuristic") {
  for (std::uint64_t seed = 600; seed < 610; ++seed) {
    const Instance inst = random_instance(seed, 4, 4, {}, 1, 2, 3);
    const HeuristicTable built =
        build_heuristic(inst.grid, inst.costs, inst.goals[0]);
    const HeuristicTable zero = zero_heuristic(inst.grid, 2);
    const std::vector<Constraint> all = {{0, inst.goals[0], inst.goals[0], 2}};
    const ConstraintSet cs(0, all);
    const auto a = namoa_dr_st(inst.grid, inst.costs, inst.starts[0],
                               inst.goals[0], cs, built, 12);
    const auto b = namoa_dr_st(inst.grid, inst.costs, inst.starts[0],
                               inst.goals[0], cs, zero, 12);
    const auto c = boa_st(inst.grid, inst.costs, inst.starts[0],
                          inst.goals[0], cs, zero, 12);
    CHECK(cost_set(a) == cost_set(b));
    CHECK(cost_set(a) == cost_set(c));
  }
}

TEST_CASE("three objective fronts match the oracle") {
  SplitMix64 rng(787);
  for (int it = 0; it < 10; ++it) {
    const Instance inst = random_instance(4000 + it, 4, 4, {}, 1, 3, 3);
    const auto all =
        random_constraints(inst.grid, rng, 0, 3, inst.starts[0]);
    const ConstraintSet cs(0, all);
    const HeuristicTable h =
        build_heuristic(inst.grid, inst.costs, inst.goals[0]);
    const auto front = namoa_dr_st(inst.grid, inst.costs, inst.starts[0],
                                   inst.goals[0], cs, h, 12);
    const auto truth = single_agent_front_bruteforce(
        inst.grid, inst.costs, inst.starts[0], inst.goals[0], all, 0, 12);
    CHECK(cost_set(front) == cost_set(truth));
  }
}
