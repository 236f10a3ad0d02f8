#include "momapf/suite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "momapf/oracle.hpp"

namespace momapf {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SuiteAlgo parse_algo(const nlohmann::json& j) {
  SuiteAlgo a;
  const std::string algo = j.at("algo").get<std::string>();
  if (algo == "mocbs")
    a.strategy = Strategy::Global;
  else if (algo == "mocbs-t")
    a.strategy = Strategy::TreeByTree;
  else
    throw std::invalid_argument("unknown algo: " + algo);
  const std::string ll = j.at("lowlevel").get<std::string>();
  if (ll == "boa")
    a.lowlevel = LowLevelAlgo::Boa;
  else if (ll == "namoa-dr")
    a.lowlevel = LowLevelAlgo::NamoaDr;
  else
    throw std::invalid_argument("unknown lowlevel: " + ll);
  return a;
}

struct RunOutcome {
  bool ran = false;       // no exception
  bool complete = false;  // status complete
  bool mismatch = false;
  MocbsMetrics metrics;
};

void fill_agg(std::vector<long long> values, long long out[3]) {
  if (values.empty()) return;
  std::sort(values.begin(), values.end());
  out[0] = values.front();
  out[1] = values[(values.size() - 1) / 2];  // lower median
  out[2] = values.back();
}

}  // namespace

SuiteConfig suite_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SuiteConfig c;
  for (const auto& m : j.at("maps"))
    c.maps.push_back({m.at("map").get<std::string>(),
                      m.at("scen").get<std::string>()});
  c.agent_counts = j.at("agents").get<std::vector<int>>();
  c.objectives = j.value("objectives", 2);
  const std::string model = j.value("cost_model", std::string("random"));
  if (model == "random")
    c.cost_model = CostModelKind::Random;
  else if (model == "time-risk")
    c.cost_model = CostModelKind::TimeRisk;
  else
    throw std::invalid_argument("unknown cost_model: " + model);
  c.cmax_values = j.value("cmax", std::vector<Cost>{2});
  c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  for (const auto& a : j.at("algos")) c.algos.push_back(parse_algo(a));
  c.horizon = j.value("horizon", 0);
  c.time_limit_s = j.value("time_limit", 300.0);
  c.oracle = j.value("oracle", false);
  c.jobs = j.value("jobs", 1);
  if (c.maps.empty() || c.agent_counts.empty() || c.seeds.empty() ||
      c.algos.empty())
    throw std::invalid_argument("suite config must list maps, agents, seeds "
                                "and algos");
  return c;
}

SuiteSummary run_suite(const SuiteConfig& config) {
  struct Job {
    std::size_t cell;
    std::uint64_t seed;
  };

  SuiteSummary summary;
  std::vector<Job> jobs;
  for (const auto& map : config.maps)
    for (int n : config.agent_counts)
      for (const SuiteAlgo& algo : config.algos)
        for (Cost cmax : config.cmax_values) {
          SuiteCell cell;
          cell.map = map.map;
          cell.agents = n;
          cell.algo = algo;
          cell.cmax = cmax;
          const std::size_t cell_idx = summary.cells.size();
          summary.cells.push_back(cell);
          for (std::uint64_t seed : config.seeds)
            jobs.push_back({cell_idx, seed});
        }

  // Map/scen membership per cell is recoverable from the cell index.
  const std::size_t cells_per_map = config.agent_counts.size() *
                                    config.algos.size() *
                                    config.cmax_values.size();

  std::vector<RunOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= jobs.size()) return;
      const Job& job = jobs[k];
      const SuiteCell& cell = summary.cells[job.cell];
      RunOutcome& out = outcomes[k];
      try {
        const auto& map_entry = config.maps[job.cell / cells_per_map];
        const GridGraph grid = parse_map(read_file(map_entry.map));
        const Scenario scen = parse_scen(read_file(map_entry.scen), grid);
        CostModelSpec spec;
        spec.kind = config.cost_model;
        spec.objectives = config.objectives;
        spec.cmax = cell.cmax;
        spec.seed = job.seed;
        const Instance inst = make_instance(grid, scen, cell.agents, spec);
        MocbsOptions opt;
        opt.strategy = cell.algo.strategy;
        opt.lowlevel = cell.algo.lowlevel;
        opt.horizon = config.horizon;
        opt.time_limit_s = config.time_limit_s;
        const MocbsResult r = mocbs_solve(inst, opt);
        out.ran = true;
        out.complete = r.status == SolveStatus::Complete;
        out.metrics = r.metrics;
        if (config.oracle && out.complete) {
          const TimeStep horizon = opt.horizon > 0
                                       ? opt.horizon
                                       : 4 * (grid.width() + grid.height());
          const auto truth = joint_front_bruteforce(inst, horizon);
          std::vector<CostVector> a, b;
          for (const auto& s : r.front) a.push_back(s.cost);
          for (const auto& s : truth) b.push_back(s.cost);
          auto lex = [](const CostVector& x, const CostVector& y) {
            return lex_less(x, y);
          };
          std::sort(a.begin(), a.end(), lex);
          std::sort(b.begin(), b.end(), lex);
          out.mismatch = a != b;
        }
      } catch (const std::exception&) {
        out.ran = false;
      }
    }
  };

  const int n_workers =
      std::max(1, std::min<int>(config.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Deterministic merge in job order.
  std::vector<std::vector<long long>> roots(summary.cells.size()),
      conflicts(summary.cells.size()), filters(summary.cells.size()),
      sols(summary.cells.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    SuiteCell& cell = summary.cells[jobs[k].cell];
    const RunOutcome& out = outcomes[k];
    ++cell.total;
    if (!out.ran) {
      ++cell.failed;
      continue;
    }
    if (out.complete) ++cell.succeeded;
    if (out.mismatch) ++cell.oracle_mismatches;
    roots[jobs[k].cell].push_back(out.metrics.n_root);
    conflicts[jobs[k].cell].push_back(out.metrics.n_conflict);
    filters[jobs[k].cell].push_back(out.metrics.n_filter);
    sols[jobs[k].cell].push_back(out.metrics.n_sol);
  }
  for (std::size_t c = 0; c < summary.cells.size(); ++c) {
    fill_agg(roots[c], summary.cells[c].root_agg);
    fill_agg(conflicts[c], summary.cells[c].conflict_agg);
    fill_agg(filters[c], summary.cells[c].filter_agg);
    fill_agg(sols[c], summary.cells[c].sol_agg);
  }
  return summary;
}

std::string suite_summary_to_csv(const SuiteSummary& s) {
  std::ostringstream os;
  os << "map,agents,algo,lowlevel,cmax,total,succeeded,failed,success_rate,"
        "root_min,root_median,root_max,"
        "conflict_min,conflict_median,conflict_max,"
        "filter_min,filter_median,filter_max,"
        "sol_min,sol_median,sol_max,oracle_mismatches\n";
  for (const SuiteCell& c : s.cells) {
    os << c.map << ',' << c.agents << ','
       << (c.algo.strategy == Strategy::Global ? "mocbs" : "mocbs-t") << ','
       << (c.algo.lowlevel == LowLevelAlgo::Boa ? "boa" : "namoa-dr") << ','
       << c.cmax << ',' << c.total << ',' << c.succeeded << ',' << c.failed
       << ',' << c.success_rate();
    for (const auto* agg :
         {c.root_agg, c.conflict_agg, c.filter_agg, c.sol_agg})
      os << ',' << agg[0] << ',' << agg[1] << ',' << agg[2];
    os << ',' << c.oracle_mismatches << '\n';
  }
  return os.str();
}

}  // namespace momapf
