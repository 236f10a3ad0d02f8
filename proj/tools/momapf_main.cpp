#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "momapf/instance.hpp"
#include "momapf/mocbs.hpp"
#include "momapf/oracle.hpp"
#include "momapf/suite.hpp"

namespace {

using namespace momapf;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

struct RunFlags {
  std::string map, scen, out, csv;
  int agents = 1;
  int objectives = 2;
  std::string cost_model = "random";
  long long cmax = 2;
  std::uint64_t seed = 0;
  std::string algo = "mocbs";
  std::string lowlevel = "boa";
  int horizon = 0;
  double time_limit = 300.0;
  bool oracle = false;
  std::string export_instance;
};

CostModelSpec to_spec(const RunFlags& f) {
  CostModelSpec spec;
  spec.kind = f.cost_model == "time-risk" ? CostModelKind::TimeRisk
                                          : CostModelKind::Random;
  spec.objectives = f.objectives;
  spec.cmax = f.cmax;
  spec.seed = f.seed;
  spec.validate();
  return spec;
}

int do_run(const RunFlags& f) {
  const GridGraph grid = parse_map(read_file(f.map));
  const Scenario scen = parse_scen(read_file(f.scen), grid);
  const CostModelSpec spec = to_spec(f);
  const Instance inst = make_instance(grid, scen, f.agents, spec);

  if (!f.export_instance.empty())
    write_file(f.export_instance, instance_to_json(inst, scen.map_name, spec));

  MocbsOptions opt;
  opt.strategy = f.algo == "mocbs-t" ? Strategy::TreeByTree : Strategy::Global;
  opt.lowlevel =
      f.lowlevel == "namoa-dr" ? LowLevelAlgo::NamoaDr : LowLevelAlgo::Boa;
  opt.horizon = f.horizon;
  opt.time_limit_s = f.time_limit;

  const MocbsResult result = mocbs_solve(inst, opt);
  const std::string json = result_to_json(result);
  if (f.out.empty())
    std::cout << json << "\n";
  else
    write_file(f.out, json);
  if (!f.csv.empty()) write_file(f.csv, front_to_csv(result, f.objectives));

  std::cerr << "status=" << (result.status == SolveStatus::Complete
                                 ? "complete"
                                 : result.status == SolveStatus::Timeout
                                       ? "timeout"
                                       : "no_solution")
            << " n_sol=" << result.metrics.n_sol
            << " n_root=" << result.metrics.n_root
            << " n_conflict=" << result.metrics.n_conflict
            << " n_filter=" << result.metrics.n_filter
            << " ms=" << result.metrics.ms << "\n";

  if (result.status == SolveStatus::Timeout) return 2;
  if (result.status == SolveStatus::NoSolution) return 3;

  if (f.oracle) {
    const TimeStep horizon =
        opt.horizon > 0 ? opt.horizon : 4 * (grid.width() + grid.height());
    const auto truth = joint_front_bruteforce(inst, horizon);
    std::vector<CostVector> got, want;
    for (const auto& s : result.front) got.push_back(s.cost);
    for (const auto& s : truth) want.push_back(s.cost);
    auto lex = [](const CostVector& a, const CostVector& b) {
      return lex_less(a, b);
    };
    std::sort(got.begin(), got.end(), lex);
    std::sort(want.begin(), want.end(), lex);
    if (got == want) {
      std::cout << "oracle: MATCH (" << want.size() << " points)\n";
    } else {
      std::cout << "oracle: MISMATCH (solver " << got.size() << " points, "
                << "oracle " << want.size() << " points)\n";
      return 4;
    }
  }
  return 0;
}

int do_suite(const std::string& config_path, const std::string& out_csv,
             int jobs_override) {
  SuiteConfig config = suite_config_from_json(read_file(config_path));
  if (jobs_override > 0) config.jobs = jobs_override;
  const SuiteSummary summary = run_suite(config);
  const std::string csv = suite_summary_to_csv(summary);
  if (out_csv.empty())
    std::cout << csv;
  else
    write_file(out_csv, csv);
  return 0;
}

int do_export(const RunFlags& f) {
  const GridGraph grid = parse_map(read_file(f.map));
  const Scenario scen = parse_scen(read_file(f.scen), grid);
  const CostModelSpec spec = to_spec(f);
  const Instance inst = make_instance(grid, scen, f.agents, spec);
  const std::string json = instance_to_json(inst, scen.map_name, spec);
  if (f.out.empty())
    std::cout << json << "\n";
  else
    write_file(f.out, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective multi-agent path finding solver"};
  app.require_subcommand(1);

  RunFlags f;
  CLI::App* run = app.add_subcommand("run", "solve one instance");
  run->add_option("--map", f.map, "MovingAI .map file")->required();
  run->add_option("--scen", f.scen, "MovingAI .scen file")->required();
  run->add_option("--agents", f.agents, "number of agents")->required();
  run->add_option("--objectives", f.objectives, "number of objectives");
  run->add_option("--cost-model", f.cost_model, "random|time-risk")
      ->check(CLI::IsMember({"random", "time-risk"}));
  run->add_option("--cmax", f.cmax, "max sampled edge cost (random model)");
  run->add_option("--seed", f.seed, "cost sampling seed");
  run->add_option("--algo", f.algo, "mocbs|mocbs-t")
      ->check(CLI::IsMember({"mocbs", "mocbs-t"}));
  run->add_option("--lowlevel", f.lowlevel, "boa|namoa-dr")
      ->check(CLI::IsMember({"boa", "namoa-dr"}));
  run->add_option("--horizon", f.horizon,
                  "time horizon (0: 4 * (width + height))");
  run->add_option("--time-limit", f.time_limit, "seconds");
  run->add_option("--out", f.out, "result JSON file (stdout when omitted)");
  run->add_option("--csv", f.csv, "front CSV file");
  run->add_flag("--oracle", f.oracle,
                "cross-check against the brute-force joint front");
  run->add_option("--export-instance", f.export_instance,
                  "also write the instance JSON here");

  std::string suite_config, suite_out;
  int suite_jobs = 0;
  CLI::App* suite = app.add_subcommand("suite", "run a benchmark suite");
  suite->add_option("--config", suite_config, "suite config JSON")->required();
  suite->add_option("--out", suite_out, "summary CSV file (stdout when omitted)");
  suite->add_option("--jobs", suite_jobs, "worker pool size override");

  CLI::App* exp = app.add_subcommand("export", "write an instance JSON");
  exp->add_option("--map", f.map, "MovingAI .map file")->required();
  exp->add_option("--scen", f.scen, "MovingAI .scen file")->required();
  exp->add_option("--agents", f.agents, "number of agents")->required();
  exp->add_option("--objectives", f.objectives, "number of objectives");
  exp->add_option("--cost-model", f.cost_model, "random|time-risk")
      ->check(CLI::IsMember({"random", "time-risk"}));
  exp->add_option("--cmax", f.cmax, "max sampled edge cost");
  exp->add_option("--seed", f.seed, "cost sampling seed");
  exp->add_option("--out", f.out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return do_run(f);
    if (suite->parsed()) return do_suite(suite_config, suite_out, suite_jobs);
    if (exp->parsed()) return do_export(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
