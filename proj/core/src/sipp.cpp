#include "momapf/sipp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include <json.hpp>

namespace momapf {

void ObstacleTrajectory::validate() const {
  for (std::size_t i = 0; i + 1 < occupancy.size(); ++i)
    if (occupancy[i + 1].second != occupancy[i].second + 1)
      throw std::invalid_argument(
          "obstacle occupancy times must increase by 1");
}

SafeIntervalSet compute_safe_intervals(
    const GridGraph& g, const std::vector<ObstacleTrajectory>& obstacles,
    TimeStep horizon) {
  std::map<Vertex, std::vector<TimeStep>> finite;
  std::map<Vertex, TimeStep> stay_from;
  for (const ObstacleTrajectory& o : obstacles) {
    o.validate();
    for (const auto& [v, t] : o.occupancy) finite[v].push_back(t);
    if (o.stays && !o.occupancy.empty()) {
      const auto& [v, t] = o.occupancy.back();
      auto it = stay_from.find(v);
      if (it == stay_from.end() || t < it->second) stay_from[v] = t;
    }
  }

  std::vector<std::vector<SafeInterval>> per_vertex(g.num_cells());
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    if (!g.passable(v)) continue;
    auto it = stay_from.find(v);
    const TimeStep forever = it == stay_from.end() ? kTimeInf : it->second;
    std::vector<TimeStep> occ;
    if (auto fit = finite.find(v); fit != finite.end()) occ = fit->second;
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());

    std::vector<SafeInterval>& out = per_vertex[v];
    TimeStep cur = 0;
    for (TimeStep t : occ) {
      if (t >= forever) break;
      if (cur < t) out.push_back({cur, t - 1});
      cur = t + 1;
    }
    if (forever == kTimeInf)
      out.push_back({cur, kTimeInf});
    else if (cur < forever)
      out.push_back({cur, forever - 1});
  }
  return SafeIntervalSet(std::move(per_vertex), horizon);
}

int SafeIntervalSet::interval_index(Vertex v, TimeStep t) const {
  const auto& ivs = per_vertex_[v];
  for (std::size_t k = 0; k < ivs.size(); ++k)
    if (ivs[k].begin <= t && t <= ivs[k].end) return static_cast<int>(k);
  return -1;
}

bool label_dominates(const SippLabel& l, const SippLabel& l2) {
  if (!(l.state == l2.state))
    throw std::invalid_argument("label dominance needs equal states");
  return dominates_or_equal(l.g, l2.g) && l.t_r <= l2.t_r;
}

bool label_dominates_adjusted(const SippLabel& l, const SippLabel& l2,
                              const CostVector& wait_cost) {
  if (!(l.state == l2.state))
    throw std::invalid_argument("label dominance needs equal states");
  if (l.t_r > l2.t_r) return false;
  CostVector synced = l.g;
  synced.add_scaled(l2.t_r - l.t_r, wait_cost);
  if (dominates(synced, l2.g)) return true;
  return l.t_r == l2.t_r && synced == l2.g;
}

bool LabelFrontier::check_and_insert(const SippLabel& l, int tag,
                                     std::vector<int>* evicted_tags) {
  for (const auto& [stored, _] : entries_)
    if (label_dominates(stored, l)) return true;
  std::erase_if(entries_, [&](const auto& entry) {
    if (!label_dominates(l, entry.first)) return false;
    if (evicted_tags) evicted_tags->push_back(entry.second);
    return true;
  });
  entries_.emplace_back(l, tag);
  return false;
}

bool LabelFrontier::check_and_insert_adjusted(const SippLabel& l,
                                              const CostVector& wait_cost,
                                              int tag,
                                              std::vector<int>* evicted_tags) {
  for (const auto& [stored, _] : entries_)
    if (label_dominates_adjusted(stored, l, wait_cost)) return true;
  std::erase_if(entries_, [&](const auto& entry) {
    if (!label_dominates_adjusted(l, entry.first, wait_cost)) return false;
    if (evicted_tags) evicted_tags->push_back(entry.second);
    return true;
  });
  entries_.emplace_back(l, tag);
  return false;
}

std::vector<SippLabel> sipp_successors(const SippLabel& l,
                                       const SafeIntervalSet& intervals,
                                       const EdgeCostTable& costs,
                                       const GridGraph& g) {
  std::vector<SippLabel> out;
  const Vertex v = l.state.v;
  const TimeStep depart_by = l.state.interval.end;  // last step inside v
  std::array<Vertex, 4> nb{};
  const int n = g.neighbors(v, nb);
  for (int k = 0; k < n; ++k) {
    const Vertex u = nb[k];
    for (const SafeInterval& iv : intervals.at(u)) {
      if (iv.begin > depart_by + 1) break;        // cannot wait that long
      if (iv.end < l.t_r + 1) continue;           // interval already over
      const TimeStep arrive = std::max(l.t_r + 1, iv.begin);
      if (arrive > intervals.horizon()) continue;
      const TimeStep waits = arrive - l.t_r - 1;
      CostVector cost = l.g;
      if (waits > 0) cost.add_scaled(waits, costs.cost(v, v));
      cost += costs.cost(v, u);
      out.push_back(SippLabel{SippState{u, iv}, std::move(cost), arrive, -1});
    }
  }
  return out;
}

namespace {

struct OpenEntry {
  CostVector f;
  TimeStep t_r;
  long long seq;
  int id;
};

struct OpenOrder {
  // std::priority_queue is a max-heap; invert to pop the lexicographic
  // minimum, earliest arrival first, then insertion order.
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return lex_less(b.f, a.f);
    if (a.t_r != b.t_r) return a.t_r > b.t_r;
    return a.seq > b.seq;
  }
};

struct ArenaRec {
  SippLabel label;
  int interval_idx;
  bool pruned = false;
};

Path reconstruct_sipp(const std::vector<ArenaRec>& arena, int id) {
  std::vector<std::pair<Vertex, TimeStep>> hops;
  for (int cur = id; cur != -1; cur = arena[cur].label.parent)
    hops.emplace_back(arena[cur].label.state.v, arena[cur].label.t_r);
  std::reverse(hops.begin(), hops.end());
  Path path;
  path.push_back(hops[0].first);
  for (std::size_t i = 1; i < hops.size(); ++i) {
    // Wait at the previous vertex until one step before this arrival.
    for (TimeStep t = hops[i - 1].second + 1; t < hops[i].second; ++t)
      path.push_back(hops[i - 1].first);
    path.push_back(hops[i].first);
  }
  return path;
}

}  // namespace

std::vector<PathSolution> mosipp_solve(
    const GridGraph& g, const EdgeCostTable& costs,
    const std::vector<ObstacleTrajectory>& obstacles, Vertex start,
    Vertex goal, const HeuristicTable& h, TimeStep horizon,
    MosippStats* stats) {
  std::vector<PathSolution> solutions;
  if (!g.passable(start) || !g.passable(goal)) return solutions;
  if (!h.reachable(start)) return solutions;

  const SafeIntervalSet intervals =
      compute_safe_intervals(g, obstacles, horizon);
  const int start_iv = intervals.interval_index(start, 0);
  if (start_iv < 0) return solutions;  // start occupied at time 0

  std::vector<ArenaRec> arena;
  // frontier[v][interval index] is the non-dominated label set of one state.
  std::vector<std::vector<LabelFrontier>> frontier(g.num_cells());
  for (Vertex v = 0; v < g.num_cells(); ++v)
    frontier[v].resize(intervals.at(v).size());

  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
  long long seq = 0;
  std::vector<int> evicted;

  arena.push_back(
      {SippLabel{SippState{start, intervals.at(start)[start_iv]},
                 CostVector(costs.objectives()), 0, -1},
       start_iv});
  frontier[start][start_iv].check_and_insert_adjusted(
      arena[0].label, costs.cost(start, start), 0, nullptr);
  open.push({arena[0].label.g + h.at(start), 0, seq++, 0});

  std::vector<CostVector> sol_costs;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (arena[top.id].pruned) continue;
    const SippLabel label = arena[top.id].label;

    // Open-list filtering against found solutions: anything dominated by or
    // equal to a goal cost cannot extend a new Pareto-optimal trajectory.
    bool filtered = false;
    for (const CostVector& c : sol_costs)
      if (dominates_or_equal(c, label.g)) {
        filtered = true;
        break;
      }
    if (filtered) {
      if (stats) ++stats->filtered;
      continue;
    }

    if (label.state.v == goal) {
      solutions.push_back({reconstruct_sipp(arena, top.id), label.g});
      sol_costs.push_back(label.g);
      continue;
    }

    if (stats) ++stats->expanded;
    std::vector<SippLabel> succs = sipp_successors(label, intervals, costs, g);
    // One-step wait successor: departing later can beat the earliest
    // arrival when this vertex waits cheaper than the next one.
    if (label.t_r + 1 <= std::min(label.state.interval.end,
                                  intervals.horizon()))
      succs.push_back(SippLabel{label.state,
                                label.g + costs.cost(label.state.v,
                                                     label.state.v),
                                label.t_r + 1, -1});
    for (SippLabel& succ : succs) {
      if (!h.reachable(succ.state.v)) continue;
      succ.parent = top.id;
      const int iv = intervals.interval_index(succ.state.v, succ.t_r);
      const int id = static_cast<int>(arena.size());
      if (stats) ++stats->generated;
      evicted.clear();
      if (frontier[succ.state.v][iv].check_and_insert_adjusted(
              succ, costs.cost(succ.state.v, succ.state.v), id, &evicted)) {
        if (stats) ++stats->pruned;
        continue;
      }
      for (int tag : evicted) arena[tag].pruned = true;
      const CostVector f = succ.g + h.at(succ.state.v);
      arena.push_back({std::move(succ), iv});
      open.push({f, arena.back().label.t_r, seq++, id});
    }
  }

  if (stats) {
    for (Vertex v = 0; v < g.num_cells(); ++v)
      for (std::size_t k = 0; k < frontier[v].size(); ++k) {
        const auto& entries = frontier[v][k].entries();
        if (entries.empty()) continue;
        std::vector<std::pair<CostVector, TimeStep>> dump;
        for (const auto& [l, _] : entries) dump.emplace_back(l.g, l.t_r);
        stats->frontier.emplace_back(SippState{v, intervals.at(v)[k]},
                                     std::move(dump));
      }
  }
  return solutions;
}

std::vector<ObstacleTrajectory> obstacles_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_array())
    throw std::invalid_argument("obstacle document must be a JSON array");
  std::vector<ObstacleTrajectory> out;
  for (const auto& item : doc) {
    const Vertex entry = item.at("vertex").get<Vertex>();
    const TimeStep t0 = item.at("start_time").get<TimeStep>();
    const auto path = item.at("path").get<std::vector<Vertex>>();
    if (path.empty() || path.front() != entry)
      throw std::invalid_argument(
          "obstacle path must begin at its entry vertex");
    ObstacleTrajectory traj;
    traj.stays = item.at("stays").get<bool>();
    for (std::size_t k = 0; k < path.size(); ++k)
      traj.occupancy.emplace_back(path[k], t0 + static_cast<TimeStep>(k));
    traj.validate();
    out.push_back(std::move(traj));
  }
  return out;
}

}  // namespace momapf
