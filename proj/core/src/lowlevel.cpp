#include "momapf/lowlevel.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace momapf {

namespace {

constexpr int kShift = 21;

std::uint64_t state_key(Vertex v, TimeStep t) {
  return (static_cast<std::uint64_t>(v) << kShift) |
         static_cast<std::uint64_t>(t);
}

// Componentwise <= over components 1..M-1; vacuously true when M == 1.
bool trunc_dom_or_eq(const CostVector& a, const CostVector& b) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct NodeRec {
  Vertex v;
  TimeStep t;
  CostVector g;
  int parent;
};

struct OpenEntry {
  CostVector f;
  TimeStep t;
  long long seq;
  int id;
};

struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return lex_less(b.f, a.f);
    if (a.t != b.t) return a.t > b.t;
    return a.seq > b.seq;
  }
};

Path reconstruct(const std::vector<NodeRec>& arena, int id) {
  Path path;
  for (int cur = id; cur != -1; cur = arena[cur].parent)
    path.push_back(arena[cur].v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Successor enumeration shared by both planners: neighbors E, S, W, N then
// wait, each checked against the horizon and the constraint set.
template <typename Emit>
void for_each_move(const GridGraph& g, const ConstraintSet& cs, Vertex v,
                   TimeStep t, TimeStep horizon, Emit&& emit) {
  if (t + 1 > horizon) return;
  std::array<Vertex, 4> nb{};
  const int n = g.neighbors(v, nb);
  for (int k = 0; k < n; ++k)
    if (cs.allows_move(v, t, nb[k])) emit(nb[k]);
  if (cs.allows_move(v, t, v)) emit(v);
}

}  // namespace

std::vector<PathSolution> namoa_dr_st(const GridGraph& g,
                                      const EdgeCostTable& costs, Vertex start,
                                      Vertex goal, const ConstraintSet& cs,
                                      const HeuristicTable& h,
                                      TimeStep horizon, LowLevelStats* stats) {
  std::vector<PathSolution> sols;
  if (!g.passable(start) || !g.passable(goal)) return sols;
  if (!h.reachable(start) || cs.vertex_blocked(start, 0)) return sols;
  const TimeStep latest_goal_ct = cs.latest_vertex_constraint(goal);

  std::vector<NodeRec> arena;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
  long long seq = 0;
  // Truncated costs of expanded labels per timed vertex.
  std::unordered_map<std::uint64_t, std::vector<CostVector>> closed;
  std::vector<CostVector> sol_costs;

  auto closed_prunes = [&](Vertex v, TimeStep t, const CostVector& gvec) {
    auto it = closed.find(state_key(v, t));
    if (it == closed.end()) return false;
    for (const CostVector& c : it->second)
      if (trunc_dom_or_eq(c, gvec)) return true;
    return false;
  };
  auto front_prunes = [&](const CostVector& fvec) {
    for (const CostVector& c : sol_costs)
      if (trunc_dom_or_eq(c, fvec)) return true;
    return false;
  };

  arena.push_back({start, 0, CostVector(costs.objectives()), -1});
  open.push({arena[0].g + h.at(start), 0, seq++, 0});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const NodeRec& rec = arena[top.id];
    if (closed_prunes(rec.v, rec.t, rec.g)) continue;
    if (front_prunes(top.f)) continue;

    if (rec.v == goal && rec.t > latest_goal_ct) {
      sols.push_back({reconstruct(arena, top.id), rec.g});
      sol_costs.push_back(rec.g);
      continue;
    }

    closed[state_key(rec.v, rec.t)].push_back(rec.g);
    if (stats) ++stats->expanded;

    for_each_move(g, cs, rec.v, rec.t, horizon, [&](Vertex w) {
      if (!h.reachable(w)) return;
      CostVector gw = arena[top.id].g + costs.cost(arena[top.id].v, w);
      const TimeStep tw = arena[top.id].t + 1;
      if (closed_prunes(w, tw, gw)) return;
      CostVector fw = gw + h.at(w);
      if (front_prunes(fw)) return;
      if (stats) ++stats->generated;
      const int id = static_cast<int>(arena.size());
      arena.push_back({w, tw, std::move(gw), top.id});
      open.push({std::move(fw), tw, seq++, id});
    });
  }

  if (stats)
    for (auto& [key, vecs] : closed) {
      std::vector<CostVector> trunc;
      for (const CostVector& c : vecs) {
        CostVector t(c.size() ? c.size() - 1 : 0);
        for (std::size_t i = 1; i < c.size(); ++i) t[i - 1] = c[i];
        trunc.push_back(std::move(t));
      }
      stats->closed.emplace_back(
          std::make_pair(static_cast<Vertex>(key >> kShift),
                         static_cast<TimeStep>(key & ((1u << kShift) - 1))),
          std::move(trunc));
    }
  return sols;
}

std::vector<PathSolution> boa_st(const GridGraph& g,
                                 const EdgeCostTable& costs, Vertex start,
                                 Vertex goal, const ConstraintSet& cs,
                                 const HeuristicTable& h, TimeStep horizon,
                                 LowLevelStats* stats) {
  if (costs.objectives() != 2)
    throw std::invalid_argument("boa_st requires exactly two objectives");
  std::vector<PathSolution> sols;
  if (!g.passable(start) || !g.passable(goal)) return sols;
  if (!h.reachable(start) || cs.vertex_blocked(start, 0)) return sols;
  const TimeStep latest_goal_ct = cs.latest_vertex_constraint(goal);

  std::vector<NodeRec> arena;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
  long long seq = 0;
  std::unordered_map<std::uint64_t, Cost> g2_min;
  Cost goal_f2_min = kCostInf;

  auto g2_at = [&](Vertex v, TimeStep t) {
    auto it = g2_min.find(state_key(v, t));
    return it == g2_min.end() ? kCostInf : it->second;
  };

  arena.push_back({start, 0, CostVector(2), -1});
  open.push({arena[0].g + h.at(start), 0, seq++, 0});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const NodeRec& rec = arena[top.id];
    if (rec.g[1] >= g2_at(rec.v, rec.t)) continue;
    if (rec.g[1] + h.at(rec.v)[1] >= goal_f2_min) continue;
    g2_min[state_key(rec.v, rec.t)] = rec.g[1];

    if (rec.v == goal && rec.t > latest_goal_ct) {
      sols.push_back({reconstruct(arena, top.id), rec.g});
      goal_f2_min = rec.g[1];
      continue;
    }
    if (stats) ++stats->expanded;

    for_each_move(g, cs, rec.v, rec.t, horizon, [&](Vertex w) {
      if (!h.reachable(w)) return;
      CostVector gw = arena[top.id].g + costs.cost(arena[top.id].v, w);
      const TimeStep tw = arena[top.id].t + 1;
      if (gw[1] >= g2_at(w, tw)) return;
      if (gw[1] + h.at(w)[1] >= goal_f2_min) return;
      if (stats) ++stats->generated;
      CostVector fw = gw + h.at(w);
      const int id = static_cast<int>(arena.size());
      arena.push_back({w, tw, std::move(gw), top.id});
      open.push({std::move(fw), tw, seq++, id});
    });
  }
  return sols;
}

}  // namespace momapf
