#include <benchmark/benchmark.h>

#include "momapf/heuristic.hpp"
#include "momapf/instance.hpp"
#include "momapf/lowlevel.hpp"
#include "momapf/mocbs.hpp"
#include "momapf/rng.hpp"
#include "momapf/sipp.hpp"

namespace {

using namespace momapf;

GridGraph open_grid(int w, int h) {
  return GridGraph(w, h, std::vector<std::uint8_t>(
                             static_cast<std::size_t>(w) * h, 1));
}

EdgeCostTable random_costs(const GridGraph& g, int m, Cost cmax,
                           std::uint64_t seed) {
  CostModelSpec spec;
  spec.objectives = m;
  spec.cmax = cmax;
  spec.seed = seed;
  return assign_random_costs(g, spec);
}

void BM_dominance_front_insert(benchmark::State& state) {
  SplitMix64 rng(1);
  std::vector<CostVector> pool;
  for (int i = 0; i < 4096; ++i) {
    CostVector c(3);
    for (int m = 0; m < 3; ++m) c[m] = rng.uniform(1, 1000);
    pool.push_back(std::move(c));
  }
  for (auto _ : state) {
    std::vector<CostVector> front;
    for (const CostVector& c : pool) {
      bool covered = false;
      for (const CostVector& f : front)
        if (dominates_or_equal(f, c)) {
          covered = true;
          break;
        }
      if (covered) continue;
      std::erase_if(front,
                    [&](const CostVector& f) { return dominates(c, f); });
      front.push_back(c);
    }
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_dominance_front_insert);

void BM_lowlevel(benchmark::State& state) {
  const bool use_boa = state.range(0) != 0;
  const GridGraph g = open_grid(16, 16);
  const EdgeCostTable costs = random_costs(g, 2, 5, 7);
  const Vertex start = g.cell(0, 0), goal = g.cell(15, 15);
  const HeuristicTable h = build_heuristic(g, costs, goal);
  const ConstraintSet cs;
  for (auto _ : state) {
    auto front = use_boa ? boa_st(g, costs, start, goal, cs, h, 128)
                         : namoa_dr_st(g, costs, start, goal, cs, h, 128);
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_lowlevel)->Arg(0)->Arg(1);

void BM_mosipp(benchmark::State& state) {
  const GridGraph g = open_grid(16, 16);
  const EdgeCostTable costs = random_costs(g, 2, 5, 9);
  const Vertex start = g.cell(0, 0), goal = g.cell(15, 15);
  const HeuristicTable h = build_heuristic(g, costs, goal);
  std::vector<ObstacleTrajectory> obstacles(1);
  for (int k = 0; k < 8; ++k)
    obstacles[0].occupancy.emplace_back(g.cell(k, 7), k + 2);
  obstacles[0].stays = true;
  for (auto _ : state) {
    auto front = mosipp_solve(g, costs, obstacles, start, goal, h, 128);
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_mosipp);

void BM_mocbs(benchmark::State& state) {
  const int agents = static_cast<int>(state.range(0));
  const GridGraph g = open_grid(8, 8);
  Instance inst;
  inst.grid = g;
  inst.costs = random_costs(g, 2, 2, 3);
  const Vertex corners[] = {g.cell(0, 0), g.cell(7, 7), g.cell(0, 7),
                            g.cell(7, 0)};
  const Vertex anti[] = {g.cell(7, 7), g.cell(0, 0), g.cell(7, 0),
                         g.cell(0, 7)};
  for (int i = 0; i < agents; ++i) {
    inst.starts.push_back(corners[i]);
    inst.goals.push_back(anti[i]);
  }
  MocbsOptions opt;
  opt.horizon = 48;
  for (auto _ : state) {
    auto r = mocbs_solve(inst, opt);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_mocbs)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
