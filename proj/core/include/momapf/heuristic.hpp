#pragma once

#include <vector>

#include "momapf/cost_vector.hpp"
#include "momapf/edge_costs.hpp"
#include "momapf/grid_graph.hpp"

namespace momapf {

// Time-invariant per-vertex lower bounds on the cost-to-goal, one component
// per objective. Components of unreachable vertices are kCostInf.
struct HeuristicTable {
  int objectives = 0;
  std::vector<CostVector> h;  // per cell

  const CostVector& at(Vertex v) const { return h[v]; }
  bool reachable(Vertex v) const {
    return !h[v].size() || h[v][0] < kCostInf;
  }
};

// One exhaustive backward Dijkstra per objective, relaxing move edges only
// (waiting never improves a lower bound). Direction-dependent costs are
// handled by relaxing the cost of moving toward the goal.
HeuristicTable build_heuristic(const GridGraph& g, const EdgeCostTable& costs,
                               Vertex goal);

HeuristicTable zero_heuristic(const GridGraph& g, int objectives);

}  // namespace momapf
