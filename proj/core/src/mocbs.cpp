#include "momapf/mocbs.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "momapf/heuristic.hpp"
#include "momapf/lowlevel.hpp"

namespace momapf {

namespace {

// Eager materialization above this is refused; use the tree-by-tree
// strategy for instances with that many roots.
constexpr unsigned long long kMaxEagerRoots = 10'000'000ULL;

TimeStep effective_horizon(const Instance& inst, const MocbsOptions& opt) {
  if (opt.horizon > 0) return opt.horizon;
  return 4 * (inst.grid.width() + inst.grid.height());
}

struct LowLevelRunner {
  const Instance& inst;
  LowLevelAlgo algo;
  TimeStep horizon;
  std::vector<HeuristicTable> h;  // per agent, toward its goal

  explicit LowLevelRunner(const Instance& instance, const MocbsOptions& opt)
      : inst(instance), algo(opt.lowlevel),
        horizon(effective_horizon(instance, opt)) {
    for (int i = 0; i < inst.num_agents(); ++i)
      h.push_back(build_heuristic(inst.grid, inst.costs, inst.goals[i]));
  }

  std::vector<PathSolution> operator()(
      int agent, const std::vector<Constraint>& constraints) const {
    const ConstraintSet cs(agent, constraints);
    if (algo == LowLevelAlgo::Boa)
      return boa_st(inst.grid, inst.costs, inst.starts[agent],
                    inst.goals[agent], cs, h[agent], horizon);
    return namoa_dr_st(inst.grid, inst.costs, inst.starts[agent],
                       inst.goals[agent], cs, h[agent], horizon);
  }
};

struct OpenEntry {
  CostVector g;
  long long seq;
  std::size_t idx;
};

struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.g != b.g) return lex_less(b.g, a.g);
    return a.seq > b.seq;
  }
};

using OpenQueue =
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder>;

}  // namespace

bool SolutionFront::filters(const CostVector& g) const {
  for (const JointSolution& s : entries_)
    if (dominates_or_equal(s.cost, g)) return true;
  return false;
}

void SolutionFront::update_insert(const CostVector& cost, JointPath paths) {
  std::erase_if(entries_, [&](const JointSolution& s) {
    return dominates(cost, s.cost);
  });
  entries_.push_back({std::move(paths), cost});
}

RootEnumerator::RootEnumerator(std::vector<std::vector<PathSolution>> fronts)
    : fronts_(std::move(fronts)) {
  total_ = 1;
  for (auto& f : fronts_) {
    if (f.empty()) throw std::runtime_error("agent with an empty path front");
    std::sort(f.begin(), f.end(), [](const PathSolution& a,
                                     const PathSolution& b) {
      return lex_less(a.cost, b.cost);
    });
    const unsigned long long size = f.size();
    if (total_ > (0x7fffffffffffffffULL / size))
      total_ = 0x7fffffffffffffffULL;  // saturate
    else
      total_ *= size;
  }
  digits_.assign(fronts_.size(), 0);
}

bool RootEnumerator::done() const { return exhausted_; }

HighLevelNode RootEnumerator::next() {
  if (exhausted_) throw std::logic_error("root enumeration exhausted");
  HighLevelNode node;
  node.tree = static_cast<long long>(materialized_);
  CostVector cost;
  for (std::size_t i = 0; i < fronts_.size(); ++i) {
    const PathSolution& p = fronts_[i][digits_[i]];
    node.paths.push_back(p.path);
    if (i == 0)
      cost = p.cost;
    else
      cost += p.cost;
  }
  node.cost = std::move(cost);
  ++materialized_;
  // Agent 0 is the slowest digit.
  int d = static_cast<int>(fronts_.size()) - 1;
  while (d >= 0 && ++digits_[d] == fronts_[d].size()) digits_[d--] = 0;
  if (d < 0) exhausted_ = true;
  return node;
}

bool filter_node(const HighLevelNode& node, const SolutionFront& front) {
  return front.filters(node.cost);
}

std::vector<HighLevelNode> init_roots(const Instance& inst,
                                      const MocbsOptions& opt) {
  const LowLevelRunner runner(inst, opt);
  std::vector<std::vector<PathSolution>> fronts;
  for (int i = 0; i < inst.num_agents(); ++i) {
    fronts.push_back(runner(i, {}));
    if (fronts.back().empty())
      throw std::runtime_error("agent " + std::to_string(i) +
                               " has no path within the horizon");
  }
  RootEnumerator roots(std::move(fronts));
  if (roots.total() > kMaxEagerRoots)
    throw std::runtime_error("too many roots to materialize eagerly");
  std::vector<HighLevelNode> out;
  while (!roots.done()) out.push_back(roots.next());
  return out;
}

std::vector<HighLevelNode> expand_node(const Instance& inst,
                                       const HighLevelNode& node,
                                       const SolutionFront& front,
                                       const LowLevelFn& low_level,
                                       MocbsMetrics* metrics,
                                       const std::optional<Conflict>& known) {
  const std::optional<Conflict> conflict =
      known ? known : detect_first_conflict(node.paths);
  if (!conflict)
    throw std::invalid_argument("expand_node requires a conflicted node");

  std::vector<HighLevelNode> children;
  const auto [wi, wj] = split_conflict(*conflict);
  for (const Constraint& w : {wi, wj}) {
    std::vector<Constraint> constraints = node.constraints;
    constraints.push_back(w);
    // A failed replan on one side contributes no children.
    for (PathSolution& replanned : low_level(w.agent, constraints)) {
      HighLevelNode child;
      child.paths = node.paths;
      child.paths[w.agent] = std::move(replanned.path);
      child.cost = joint_path_cost(child.paths, inst.costs);
      child.constraints = constraints;
      child.tree = node.tree;
      children.push_back(std::move(child));
    }
  }

  std::vector<HighLevelNode> kept;
  for (HighLevelNode& child : children) {
    if (front.filters(child.cost)) {
      if (metrics) ++metrics->n_filter_gen;
      continue;
    }
    kept.push_back(std::move(child));
  }
  return kept;
}

MocbsResult mocbs_solve(const Instance& inst, const MocbsOptions& opt) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const auto deadline =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(opt.time_limit_s));

  MocbsResult result;
  MocbsMetrics& met = result.metrics;
  auto finish = [&](SolveStatus status, const SolutionFront& front) {
    result.status = status;
    result.front = front.entries();
    std::sort(result.front.begin(), result.front.end(),
              [](const JointSolution& a, const JointSolution& b) {
                return lex_less(a.cost, b.cost);
              });
    met.n_sol = static_cast<long long>(result.front.size());
    met.n_filter = met.n_filter_pop + met.n_filter_gen;
    met.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                 .count();
    return result;
  };

  const LowLevelRunner runner(inst, opt);
  const LowLevelFn low_level = [&](int agent,
                                   const std::vector<Constraint>& cs) {
    return runner(agent, cs);
  };

  SolutionFront front;
  std::vector<std::vector<PathSolution>> agent_fronts;
  for (int i = 0; i < inst.num_agents(); ++i) {
    agent_fronts.push_back(runner(i, {}));
    if (agent_fronts.back().empty()) return finish(SolveStatus::NoSolution, front);
  }
  RootEnumerator roots(std::move(agent_fronts));

  std::deque<HighLevelNode> arena;  // stable references while OPEN grows
  OpenQueue open;
  long long seq = 0;
  auto push_node = [&](HighLevelNode node) {
    open.push({node.cost, seq++, arena.size()});
    arena.push_back(std::move(node));
  };

  if (opt.strategy == Strategy::Global) {
    if (roots.total() > kMaxEagerRoots)
      throw std::runtime_error(
          "too many roots to materialize eagerly; use the tree-by-tree "
          "strategy");
    while (!roots.done()) {
      push_node(roots.next());
      ++met.n_root;
    }
  }

  while (true) {
    if (open.empty()) {
      // Tree-by-tree: only materialize the next root once the current
      // tree's open list depletes.
      if (opt.strategy == Strategy::TreeByTree && !roots.done()) {
        push_node(roots.next());
        ++met.n_root;
      } else {
        break;
      }
    }
    if (Clock::now() >= deadline) return finish(SolveStatus::Timeout, front);

    const OpenEntry top = open.top();
    open.pop();
    {
      const HighLevelNode& node = arena[top.idx];
      if (front.filters(node.cost)) {
        ++met.n_filter_pop;
      } else if (const auto conflict = detect_first_conflict(node.paths);
                 !conflict) {
        front.update_insert(node.cost, node.paths);
      } else {
        ++met.n_conflict;
        for (HighLevelNode& child :
             expand_node(inst, node, front, low_level, &met, conflict))
          push_node(std::move(child));
      }
    }
    // Popped nodes are never read again; drop their payload.
    arena[top.idx] = HighLevelNode{};
  }

  return finish(front.size() ? SolveStatus::Complete : SolveStatus::NoSolution,
                front);
}

namespace {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Complete: return "complete";
    case SolveStatus::Timeout: return "timeout";
    case SolveStatus::NoSolution: return "no_solution";
  }
  return "unknown";
}

}  // namespace

std::string result_to_json(const MocbsResult& r) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  auto front = nlohmann::ordered_json::array();
  for (const JointSolution& s : r.front) {
    nlohmann::ordered_json entry;
    entry["cost"] = std::vector<Cost>(s.cost.begin(), s.cost.end());
    auto paths = nlohmann::ordered_json::array();
    for (const Path& p : s.paths) paths.push_back(p);
    entry["paths"] = std::move(paths);
    front.push_back(std::move(entry));
  }
  j["front"] = std::move(front);
  j["metrics"] = {{"n_root", r.metrics.n_root},
                  {"n_conflict", r.metrics.n_conflict},
                  {"n_filter", r.metrics.n_filter},
                  {"n_filter_pop", r.metrics.n_filter_pop},
                  {"n_filter_gen", r.metrics.n_filter_gen},
                  {"n_sol", r.metrics.n_sol},
                  {"ms", r.metrics.ms}};
  return j.dump(2);
}

std::string front_to_csv(const MocbsResult& r, int objectives) {
  std::ostringstream os;
  for (int m = 0; m < objectives; ++m) os << (m ? "," : "") << "cost_" << m;
  os << "\n";
  for (const JointSolution& s : r.front) {
    for (int m = 0; m < objectives; ++m)
      os << (m ? "," : "") << s.cost[static_cast<std::size_t>(m)];
    os << "\n";
  }
  return os.str();
}

}  // namespace momapf
