#include "momapf/heuristic.hpp"

#include <queue>
#include <stdexcept>

namespace momapf {

HeuristicTable build_heuristic(const GridGraph& g, const EdgeCostTable& costs,
                               Vertex goal) {
  if (!g.passable(goal)) throw std::invalid_argument("goal is not passable");
  const int m = costs.objectives();
  HeuristicTable table;
  table.objectives = m;
  table.h.assign(g.num_cells(), CostVector(m, kCostInf));

  std::array<Vertex, 4> nb{};
  for (int obj = 0; obj < m; ++obj) {
    std::vector<Cost> dist(g.num_cells(), kCostInf);
    using Entry = std::pair<Cost, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    dist[goal] = 0;
    open.emplace(0, goal);
    while (!open.empty()) {
      const auto [d, v] = open.top();
      open.pop();
      if (d > dist[v]) continue;
      const int n = g.neighbors(v, nb);
      for (int k = 0; k < n; ++k) {
        const Vertex u = nb[k];
        // Moving u -> v heads toward the goal, so relax that direction.
        const Cost nd = d + costs.cost(u, v)[obj];
        if (nd < dist[u]) {
          dist[u] = nd;
          open.emplace(nd, u);
        }
      }
    }
    for (Vertex v = 0; v < g.num_cells(); ++v) table.h[v][obj] = dist[v];
  }
  return table;
}

HeuristicTable zero_heuristic(const GridGraph& g, int objectives) {
  HeuristicTable table;
  table.objectives = objectives;
  table.h.assign(g.num_cells(), CostVector(objectives, 0));
  return table;
}

}  // namespace momapf
