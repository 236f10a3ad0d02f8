#pragma once

#include <string>
#include <utility>
#include <vector>

#include "momapf/edge_costs.hpp"
#include "momapf/grid_graph.hpp"
#include "momapf/heuristic.hpp"
#include "momapf/path.hpp"

namespace momapf {

// Maximal contiguous time range in which a vertex is unoccupied. end is
// inclusive; kTimeInf marks an unbounded interval.
struct SafeInterval {
  TimeStep begin = 0;
  TimeStep end = kTimeInf;
  bool operator==(const SafeInterval&) const = default;
};

// Two states are equal only if vertex and both interval endpoints match;
// the same vertex with different intervals is a different state.
struct SippState {
  Vertex v = -1;
  SafeInterval interval;
  bool operator==(const SippState&) const = default;
};

// One candidate trajectory prefix: arrival at state with cost g at time t_r.
struct SippLabel {
  SippState state;
  CostVector g;
  TimeStep t_r = 0;
  int parent = -1;  // arena index inside the solver, -1 for the root
};

// Known trajectory of a dynamic obstacle: consecutively occupied (vertex,
// time) pairs, times increasing by 1; stays keeps the last vertex occupied
// forever after.
struct ObstacleTrajectory {
  std::vector<std::pair<Vertex, TimeStep>> occupancy;
  bool stays = false;
  void validate() const;  // throws std::invalid_argument
};

// Per-vertex sorted disjoint safe intervals plus the search horizon.
class SafeIntervalSet {
 public:
  SafeIntervalSet() = default;
  SafeIntervalSet(std::vector<std::vector<SafeInterval>> per_vertex,
                  TimeStep horizon)
      : per_vertex_(std::move(per_vertex)), horizon_(horizon) {}

  const std::vector<SafeInterval>& at(Vertex v) const { return per_vertex_[v]; }
  TimeStep horizon() const { return horizon_; }
  // Index of the interval containing t at v, or -1 when t is occupied.
  int interval_index(Vertex v, TimeStep t) const;

 private:
  std::vector<std::vector<SafeInterval>> per_vertex_;
  TimeStep horizon_ = 0;
};

SafeIntervalSet compute_safe_intervals(
    const GridGraph& g, const std::vector<ObstacleTrajectory>& obstacles,
    TimeStep horizon);

// l label-dominates l2: same state, componentwise g(l) <= g(l2) and
// t_r(l) <= t_r(l2). Throws when the states differ.
bool label_dominates(const SippLabel& l, const SippLabel& l2);

// Wait-cost-adjusted dominance between labels of one state: l covers l2 iff
// after paying the state's wait cost to synchronize arrivals, l strictly
// dominates l2's cost, or the two labels are exact duplicates. Unlike plain
// label dominance this stays sound when waiting is priced per vertex: an
// earlier label only supersedes a later one if replaying the wait really
// costs no more in every objective.
bool label_dominates_adjusted(const SippLabel& l, const SippLabel& l2,
                              const CostVector& wait_cost);

// Non-dominated labels at one state. Entries carry an opaque tag so the
// caller can drop evicted labels from its open list.
class LabelFrontier {
 public:
  // Returns true when some stored label dominates l (l is discarded).
  // Otherwise removes every stored label that l dominates (their tags are
  // appended to evicted_tags), inserts l, and returns false.
  bool check_and_insert(const SippLabel& l, int tag,
                        std::vector<int>* evicted_tags = nullptr);

  // Same shape with the wait-cost-adjusted order; the form the solver uses.
  bool check_and_insert_adjusted(const SippLabel& l,
                                 const CostVector& wait_cost, int tag,
                                 std::vector<int>* evicted_tags = nullptr);

  const std::vector<std::pair<SippLabel, int>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<SippLabel, int>> entries_;
};

// Wait-and-move expansion: for each neighbor u of the label's vertex and
// each safe interval at u overlapping [t_r + 1, end + 1], one label with
// the earliest feasible arrival t' = max(t_r + 1, interval begin) and cost
// g + (t' - t_r - 1) * cost(v, v) + cost(v, u). Arrivals beyond the horizon
// are dropped.
std::vector<SippLabel> sipp_successors(const SippLabel& l,
                                       const SafeIntervalSet& intervals,
                                       const EdgeCostTable& costs,
                                       const GridGraph& g);

struct MosippStats {
  long long expanded = 0;
  long long generated = 0;
  long long pruned = 0;
  long long filtered = 0;
  // Final per-state frontier: (state, [(g, t_r), ...]).
  std::vector<std::pair<SippState,
                        std::vector<std::pair<CostVector, TimeStep>>>>
      frontier;
};

// All cost-unique Pareto-optimal collision-free trajectories start -> goal
// within the horizon. Empty when the start is occupied at time 0 or the
// goal is unreachable.
//
// Expansion pairs the wait-and-move successors above with one explicit
// one-step wait label per expansion. Delaying a departure can be strictly
// better when the current vertex waits cheaper than the next one, so
// earliest arrivals alone do not cover the Pareto set; pruning uses the
// wait-cost-adjusted label order, which keeps exactly the delayed labels
// that can still pay off.
std::vector<PathSolution> mosipp_solve(
    const GridGraph& g, const EdgeCostTable& costs,
    const std::vector<ObstacleTrajectory>& obstacles, Vertex start,
    Vertex goal, const HeuristicTable& h, TimeStep horizon,
    MosippStats* stats = nullptr);

// JSON list of {vertex, start_time, path: [vertices], stays}. `path` is the
// full occupied sequence and must begin at `vertex`.
std::vector<ObstacleTrajectory> obstacles_from_json(const std::string& text);

}  // namespace momapf
