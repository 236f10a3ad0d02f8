#include "momapf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>

namespace momapf {

namespace {

constexpr int kShift = 21;

std::uint64_t vt_key(Vertex v, TimeStep t) {
  return (static_cast<std::uint64_t>(v) << kShift) |
         static_cast<std::uint64_t>(t);
}

// Unit-step distance to the target over the static grid, kTimeInf when
// unreachable. Lower bound on the remaining steps of any timed walk.
std::vector<TimeStep> steps_to(const GridGraph& g, Vertex target) {
  std::vector<TimeStep> dist(g.num_cells(), kTimeInf);
  std::queue<Vertex> open;
  dist[target] = 0;
  open.push(target);
  std::array<Vertex, 4> nb{};
  while (!open.empty()) {
    const Vertex v = open.front();
    open.pop();
    const int n = g.neighbors(v, nb);
    for (int k = 0; k < n; ++k)
      if (dist[nb[k]] == kTimeInf) {
        dist[nb[k]] = dist[v] + 1;
        open.push(nb[k]);
      }
  }
  return dist;
}

// Componentwise minimum over every action in the table. Any step of any
// agent costs at least this much, which makes g + steps * cmin a valid
// bound on every completion of a partial walk.
CostVector min_action_cost(const GridGraph& g, const EdgeCostTable& costs) {
  CostVector cmin(costs.objectives(), kCostInf);
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    if (!g.passable(v)) continue;
    const int n = g.neighbors(v, nb);
    for (int k = -1; k < n; ++k) {
      const CostVector& c = costs.cost(v, k < 0 ? v : nb[k]);
      for (std::size_t m = 0; m < c.size(); ++m)
        cmin[m] = std::min(cmin[m], c[m]);
    }
  }
  return cmin;
}

// Keep-first cost-unique front update, local to the oracle.
template <typename Sol>
void front_insert(std::vector<Sol>& front, Sol candidate) {
  for (const Sol& s : front)
    if (dominates_or_equal(s.cost, candidate.cost)) return;
  std::erase_if(front,
                [&](const Sol& s) { return dominates(candidate.cost, s.cost); });
  front.push_back(std::move(candidate));
}

// True iff some front cost stays at or below g + steps * cmin everywhere.
template <typename Sol>
bool front_covers(const std::vector<Sol>& front, const CostVector& g,
                  long long steps, const CostVector& cmin) {
  for (const Sol& s : front) {
    bool covered = true;
    for (std::size_t m = 0; m < g.size() && covered; ++m)
      covered = s.cost[m] <= g[m] + steps * cmin[m];
    if (covered) return true;
  }
  return false;
}

struct Budget {
  long long remaining;
  long long initial;
  void spend() {
    if (--remaining < 0) throw OracleBudgetExceeded(initial);
  }
};

// Moves out of v ordered greedily by remaining distance, waits last among
// equal distances. Ordering only affects how fast the front fills up.
std::vector<Vertex> ordered_moves(const GridGraph& g,
                                  const std::vector<TimeStep>& dist,
                                  Vertex v) {
  std::array<Vertex, 4> nb{};
  const int n = g.neighbors(v, nb);
  std::vector<Vertex> moves(nb.begin(), nb.begin() + n);
  moves.push_back(v);
  std::stable_sort(moves.begin(), moves.end(),
                   [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  return moves;
}

struct SingleDfs {
  const GridGraph& g;
  const EdgeCostTable& costs;
  Vertex goal;
  TimeStep horizon;
  std::vector<TimeStep> dist;
  CostVector cmin;
  Budget budget;

  // blocked(u, t, w): the step (u, t) -> (w, t+1) is forbidden.
  std::function<bool(Vertex, TimeStep, Vertex)> blocked;
  // may_end(t): a walk standing at the goal at time t may stop there.
  std::function<bool(TimeStep)> may_end;

  // completable[t * cells + v]: some feasible walk continues from (v, t) to
  // an accepted end at the goal. Exact timed reachability, so branches
  // without any feasible completion are never entered.
  std::vector<char> completable;

  Path walk;
  CostVector acc;
  std::vector<PathSolution> front;

  bool can_finish(Vertex v, TimeStep t) const {
    return completable[static_cast<std::size_t>(t) * g.num_cells() + v] != 0;
  }

  void build_completable() {
    completable.assign(static_cast<std::size_t>(horizon + 1) * g.num_cells(),
                       0);
    std::array<Vertex, 4> nb{};
    for (TimeStep t = horizon; t >= 0; --t)
      for (Vertex v = 0; v < g.num_cells(); ++v) {
        if (!g.passable(v)) continue;
        char ok = v == goal && may_end(t) ? 1 : 0;
        if (!ok && t < horizon) {
          const int n = g.neighbors(v, nb);
          for (int k = -1; k < n && !ok; ++k) {
            const Vertex w = k < 0 ? v : nb[k];
            ok = !blocked(v, t, w) && can_finish(w, t + 1);
          }
        }
        completable[static_cast<std::size_t>(t) * g.num_cells() + v] = ok;
      }
  }

  void run(Vertex start) {
    build_completable();
    if (!can_finish(start, 0)) return;
    walk.assign(1, start);
    acc = CostVector(costs.objectives());
    dfs(start, 0);
  }

  void dfs(Vertex v, TimeStep t) {
    budget.spend();
    if (front_covers(front, acc, dist[v], cmin)) return;
    if (v == goal && may_end(t)) front_insert(front, PathSolution{walk, acc});
    if (t == horizon) return;
    for (Vertex w : ordered_moves(g, dist, v)) {
      if (blocked(v, t, w) || !can_finish(w, t + 1)) continue;
      const CostVector& step = costs.cost(v, w);
      acc += step;
      walk.push_back(w);
      dfs(w, t + 1);
      walk.pop_back();
      for (std::size_t i = 0; i < step.size(); ++i) acc[i] -= step[i];
    }
  }
};

}  // namespace

OracleBudgetExceeded::OracleBudgetExceeded(long long budget)
    : std::runtime_error("oracle node budget of " + std::to_string(budget) +
                         " exceeded; shrink the instance") {}

std::vector<PathSolution> single_agent_front_bruteforce(
    const GridGraph& g, const EdgeCostTable& costs, Vertex start, Vertex goal,
    const std::vector<ObstacleTrajectory>& obstacles, TimeStep horizon,
    const OracleLimits& limits) {
  if (!g.passable(start) || !g.passable(goal)) return {};
  std::unordered_set<std::uint64_t> occupied;
  std::vector<std::pair<Vertex, TimeStep>> stays;
  for (const ObstacleTrajectory& o : obstacles) {
    for (const auto& [v, t] : o.occupancy)
      if (t <= horizon) occupied.insert(vt_key(v, t));
    if (o.stays && !o.occupancy.empty()) stays.push_back(o.occupancy.back());
  }
  for (const auto& [v, from] : stays)
    for (TimeStep t = from; t <= horizon; ++t) occupied.insert(vt_key(v, t));

  if (occupied.count(vt_key(start, 0))) return {};

  SingleDfs dfs{g,
                costs,
                goal,
                horizon,
                steps_to(g, goal),
                min_action_cost(g, costs),
                {limits.node_budget, limits.node_budget},
                [&](Vertex, TimeStep t, Vertex w) {
                  return occupied.count(vt_key(w, t + 1)) > 0;
                },
                [](TimeStep) { return true; },
                {},
                {},
                {},
                {}};
  dfs.run(start);
  return std::move(dfs.front);
}

std::vector<PathSolution> single_agent_front_bruteforce(
    const GridGraph& g, const EdgeCostTable& costs, Vertex start, Vertex goal,
    const std::vector<Constraint>& constraints, int agent, TimeStep horizon,
    const OracleLimits& limits) {
  if (!g.passable(start) || !g.passable(goal)) return {};
  std::vector<Constraint> mine;
  for (const Constraint& c : constraints)
    if (c.agent == agent) mine.push_back(c);
  for (const Constraint& c : mine)
    if (c.is_vertex() && c.from == start && c.t == 0) return {};
  TimeStep latest_goal = -1;
  for (const Constraint& c : mine)
    if (c.is_vertex() && c.from == goal)
      latest_goal = std::max(latest_goal, c.t);

  SingleDfs dfs{g,
                costs,
                goal,
                horizon,
                steps_to(g, goal),
                min_action_cost(g, costs),
                {limits.node_budget, limits.node_budget},
                [&](Vertex u, TimeStep t, Vertex w) {
                  for (const Constraint& c : mine) {
                    if (c.is_vertex() && c.from == w && c.t == t + 1)
                      return true;
                    if (!c.is_vertex() && c.from == u && c.to == w && c.t == t)
                      return true;
                  }
                  return false;
                },
                [latest_goal](TimeStep t) { return t > latest_goal; },
                {},
                {},
                {},
                {}};
  dfs.run(start);
  return std::move(dfs.front);
}

namespace {

struct JointDfs {
  const Instance& inst;
  TimeStep horizon;
  Budget budget;
  CostVector cmin;
  std::vector<std::vector<TimeStep>> dist;  // per agent, to its goal

  static constexpr Vertex kDone = -2;

  struct Level {
    std::vector<std::vector<Vertex>> options;  // per agent
    std::vector<std::size_t> pick;
    std::vector<Vertex> to;
    std::vector<int> finished;
    std::vector<int> moved;
  };
  std::vector<Level> scratch;  // one per depth

  std::vector<Path> walks;
  std::vector<char> done;
  CostVector acc;
  std::vector<JointSolution> front;

  void run() {
    const int n = inst.num_agents();
    walks.assign(n, {});
    done.assign(n, 0);
    for (int i = 0; i < n; ++i) walks[i].assign(1, inst.starts[i]);
    acc = CostVector(inst.objectives());
    scratch.resize(horizon + 1);
    for (Level& level : scratch) {
      level.options.assign(n, {});
      level.pick.assign(n, 0);
      level.to.assign(n, -1);
    }
    step(0);
  }

  void step(TimeStep t) {
    budget.spend();
    const int n = inst.num_agents();
    long long remaining = 0;
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      all_done = false;
      const TimeStep d = dist[i][walks[i].back()];
      if (t + d > horizon) return;
      remaining += d;
    }
    if (front_covers(front, acc, remaining, cmin)) return;
    if (all_done) {
      front_insert(front, JointSolution{walks, acc});
      return;
    }
    if (t == horizon) {
      // The distance bound above passed with zero slack, so every active
      // agent stands on its goal; their walks end here.
      front_insert(front, JointSolution{walks, acc});
      return;
    }

    // Per-agent choices: finish at the goal, or step somewhere. kDone makes
    // the agent hold its goal for free from now on.
    Level& level = scratch[t];
    for (int i = 0; i < n; ++i) {
      level.options[i].clear();
      level.pick[i] = 0;
      if (done[i]) {
        level.options[i].push_back(walks[i].back());
        continue;
      }
      const Vertex at = walks[i].back();
      if (at == inst.goals[i]) level.options[i].push_back(kDone);
      for (Vertex w : ordered_moves(inst.grid, dist[i], at))
        level.options[i].push_back(w);
    }

    while (true) {
      bool feasible = true;
      for (int i = 0; i < n; ++i) {
        const Vertex choice = level.options[i][level.pick[i]];
        level.to[i] = choice == kDone ? walks[i].back() : choice;
      }
      // Inline collision rejection with goal-stay padding: done and
      // finishing agents keep their goal position.
      for (int i = 0; i < n && feasible; ++i)
        for (int j = i + 1; j < n && feasible; ++j) {
          if (level.to[i] == level.to[j]) feasible = false;
          const Vertex fi = walks[i].back(), fj = walks[j].back();
          if (fi != fj && level.to[i] == fj && level.to[j] == fi)
            feasible = false;
        }
      if (feasible) apply(t, level);

      int d = n - 1;
      while (d >= 0 && ++level.pick[d] == level.options[d].size())
        level.pick[d--] = 0;
      if (d < 0) break;
    }
  }

  void apply(TimeStep t, Level& level) {
    const int n = inst.num_agents();
    level.finished.clear();
    level.moved.clear();
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (level.options[i][level.pick[i]] == kDone) {
        done[i] = 1;
        level.finished.push_back(i);
      } else {
        acc += inst.costs.cost(walks[i].back(), level.to[i]);
        walks[i].push_back(level.to[i]);
        level.moved.push_back(i);
      }
    }
    step(t + 1);
    for (int i : level.moved) {
      const Vertex to = walks[i].back();
      walks[i].pop_back();
      const CostVector& c = inst.costs.cost(walks[i].back(), to);
      for (std::size_t m = 0; m < c.size(); ++m) acc[m] -= c[m];
    }
    for (int i : level.finished) done[i] = 0;
  }
};

}  // namespace

std::vector<JointSolution> joint_front_bruteforce(const Instance& inst,
                                                  TimeStep horizon,
                                                  const OracleLimits& limits) {
  JointDfs dfs{inst,
               horizon,
               {limits.node_budget, limits.node_budget},
               min_action_cost(inst.grid, inst.costs),
               {},
               {},
               {},
               {},
               {},
               {}};
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (!inst.grid.passable(inst.starts[i]) ||
        !inst.grid.passable(inst.goals[i]))
      return {};
    dfs.dist.push_back(steps_to(inst.grid, inst.goals[i]));
  }
  dfs.run();
  return std::move(dfs.front);
}

}  // namespace momapf
