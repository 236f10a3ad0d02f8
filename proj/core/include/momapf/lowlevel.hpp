#pragma once

#include <vector>

#include "momapf/constraints.hpp"
#include "momapf/edge_costs.hpp"
#include "momapf/grid_graph.hpp"
#include "momapf/heuristic.hpp"
#include "momapf/path.hpp"

namespace momapf {

struct LowLevelStats {
  long long expanded = 0;
  long long generated = 0;
  // Expanded-label cost records per timed vertex, truncated to components
  // 1..M-1 (empty vectors when M == 1).
  std::vector<std::pair<std::pair<Vertex, TimeStep>, std::vector<CostVector>>>
      closed;
};

// All cost-unique Pareto-optimal paths start -> goal over the time-expanded
// grid that are consistent with cs, any number of objectives. Extraction is
// lexicographic on f = g + h, so per-state pruning compares costs truncated
// to components 1..M-1 against expanded labels at the same (vertex, time)
// and truncated f against the goal front. A goal label is terminal only
// when no vertex constraint on the goal exists at a later time. Returns the
// empty set when no consistent path exists within the horizon.
std::vector<PathSolution> namoa_dr_st(const GridGraph& g,
                                      const EdgeCostTable& costs, Vertex start,
                                      Vertex goal, const ConstraintSet& cs,
                                      const HeuristicTable& h,
                                      TimeStep horizon,
                                      LowLevelStats* stats = nullptr);

// Bi-objective specialization: one scalar per timed vertex (minimum
// second-objective g expanded there) and one at the goal (minimum
// second-objective f accepted); a label is skipped iff g2 >= g2_min(v, t)
// or f2 >= g2_min(goal). Throws std::invalid_argument unless M == 2.
std::vector<PathSolution> boa_st(const GridGraph& g,
                                 const EdgeCostTable& costs, Vertex start,
                                 Vertex goal, const ConstraintSet& cs,
                                 const HeuristicTable& h, TimeStep horizon,
                                 LowLevelStats* stats = nullptr);

}  // namespace momapf
