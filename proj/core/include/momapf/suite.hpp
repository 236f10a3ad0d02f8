#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momapf/instance.hpp"
#include "momapf/mocbs.hpp"

namespace momapf {

struct SuiteAlgo {
  Strategy strategy = Strategy::Global;
  LowLevelAlgo lowlevel = LowLevelAlgo::Boa;
};

struct SuiteConfig {
  struct MapEntry {
    std::string map;
    std::string scen;
  };
  std::vector<MapEntry> maps;
  std::vector<int> agent_counts;
  int objectives = 2;
  CostModelKind cost_model = CostModelKind::Random;
  std::vector<Cost> cmax_values;
  std::vector<std::uint64_t> seeds;
  std::vector<SuiteAlgo> algos;
  TimeStep horizon = 0;  // 0: per-map default 4 * (width + height)
  double time_limit_s = 300.0;
  bool oracle = false;
  int jobs = 1;
};

SuiteConfig suite_config_from_json(const std::string& text);

// One cell per (map, N, algo, cmax); instances enumerate the seed list.
struct SuiteCell {
  std::string map;
  int agents = 0;
  SuiteAlgo algo;
  Cost cmax = 0;
  int total = 0;
  int succeeded = 0;  // status complete
  int failed = 0;     // exceptions (bad instance, oracle too big)
  int oracle_mismatches = 0;
  // min/median/max over all runs of the cell, in that order.
  long long root_agg[3] = {0, 0, 0};
  long long conflict_agg[3] = {0, 0, 0};
  long long filter_agg[3] = {0, 0, 0};
  long long sol_agg[3] = {0, 0, 0};
  double success_rate() const {
    return total ? static_cast<double>(succeeded) / total : 0.0;
  }
};

struct SuiteSummary {
  std::vector<SuiteCell> cells;
};

// Runs every (cell, seed) instance, dispatching to config.jobs workers;
// per-instance failures are recorded and the suite continues. Results are
// merged in instance-index order regardless of worker scheduling.
SuiteSummary run_suite(const SuiteConfig& config);

std::string suite_summary_to_csv(const SuiteSummary& s);

}  // namespace momapf
