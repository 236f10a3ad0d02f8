#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "momapf/conflicts.hpp"
#include "momapf/constraints.hpp"
#include "momapf/instance.hpp"
#include "momapf/path.hpp"

namespace momapf {

enum class Strategy { Global, TreeByTree };
enum class LowLevelAlgo { Boa, NamoaDr };
enum class SolveStatus { Complete, Timeout, NoSolution };

// One node of the high-level search forest.
struct HighLevelNode {
  JointPath paths;
  CostVector cost;
  std::vector<Constraint> constraints;
  long long tree = 0;  // root index this node descends from
};

// Mutually non-dominated solution cost vectors with one witness joint path
// each (cost-unique semantics).
class SolutionFront {
 public:
  // True iff some stored cost dominates or equals g (the node is discarded).
  bool filters(const CostVector& g) const;
  // Pre: !filters(cost). Evicts entries strictly dominated by cost, inserts.
  void update_insert(const CostVector& cost, JointPath paths);

  const std::vector<JointSolution>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<JointSolution> entries_;
};

// Lazy mixed-radix enumeration over per-agent individual Pareto path lists
// (each sorted by lex cost), agent 0 the slowest digit. Total root count is
// the product of the list sizes.
class RootEnumerator {
 public:
  explicit RootEnumerator(std::vector<std::vector<PathSolution>> fronts);

  // Product of per-agent front sizes, saturated at 2^63 - 1.
  unsigned long long total() const { return total_; }
  unsigned long long materialized() const { return materialized_; }
  bool done() const;
  HighLevelNode next();

 private:
  std::vector<std::vector<PathSolution>> fronts_;
  std::vector<std::size_t> digits_;
  unsigned long long total_ = 0;
  unsigned long long materialized_ = 0;
  bool exhausted_ = false;
};

struct MocbsMetrics {
  long long n_root = 0;
  long long n_conflict = 0;
  long long n_filter = 0;      // n_filter_pop + n_filter_gen
  long long n_filter_pop = 0;  // discarded right after popping
  long long n_filter_gen = 0;  // discarded at child generation
  long long n_sol = 0;
  double ms = 0.0;
};

struct MocbsOptions {
  Strategy strategy = Strategy::Global;
  LowLevelAlgo lowlevel = LowLevelAlgo::Boa;
  TimeStep horizon = 0;        // 0: 4 * (width + height)
  double time_limit_s = 300.0;
};

struct MocbsResult {
  SolveStatus status = SolveStatus::Complete;
  std::vector<JointSolution> front;  // sorted by lex cost
  MocbsMetrics metrics;
};

using LowLevelFn = std::function<std::vector<PathSolution>(
    int agent, const std::vector<Constraint>& constraints)>;

bool filter_node(const HighLevelNode& node, const SolutionFront& front);

// Eager root materialization: every combination of per-agent unconstrained
// Pareto paths, empty constraint sets. Throws std::runtime_error when an
// agent has no path within the horizon.
std::vector<HighLevelNode> init_roots(const Instance& inst,
                                      const MocbsOptions& opt);

// Splits the node's first conflict, replans the constrained agent under
// each new constraint set and emits one child per returned path, dropping
// children the front filters (counted in metrics->n_filter_gen). The
// conflict may be passed in when the caller already detected it.
std::vector<HighLevelNode> expand_node(
    const Instance& inst, const HighLevelNode& node, const SolutionFront& front,
    const LowLevelFn& low_level, MocbsMetrics* metrics = nullptr,
    const std::optional<Conflict>& known_conflict = std::nullopt);

MocbsResult mocbs_solve(const Instance& inst, const MocbsOptions& opt);

// {status, front: [{cost, paths}], metrics: {...}} with the front sorted by
// lex cost; deterministic except for metrics.ms.
std::string result_to_json(const MocbsResult& r);

// One row per front point: cost_0,...,cost_{M-1}, lex-sorted, with header.
std::string front_to_csv(const MocbsResult& r, int objectives);

}  // namespace momapf
