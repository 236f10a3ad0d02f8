#include "momapf/edge_costs.hpp"

#include <stdexcept>
#include <utility>

namespace momapf {

EdgeCostTable::EdgeCostTable(const GridGraph& g, int objectives)
    : w_(g.width()), h_(g.height()), m_(objectives) {
  if (objectives < 1) throw std::invalid_argument("objectives must be >= 1");
  tab_.resize(static_cast<std::size_t>(w_) * h_ * kNumDirs);
}

int EdgeCostTable::dir_index(Vertex from, Vertex to) const {
  if (from < 0 || from >= w_ * h_ || to < 0 || to >= w_ * h_) return -1;
  if (from == to) return static_cast<int>(Dir::Wait);
  const int fx = from % w_, fy = from / w_;
  const int tx = to % w_, ty = to / w_;
  if (fy == ty && tx == fx + 1) return static_cast<int>(Dir::East);
  if (fx == tx && ty == fy + 1) return static_cast<int>(Dir::South);
  if (fy == ty && tx == fx - 1) return static_cast<int>(Dir::West);
  if (fx == tx && ty == fy - 1) return static_cast<int>(Dir::North);
  return -1;
}

bool EdgeCostTable::has(Vertex from, Vertex to) const {
  const int d = dir_index(from, to);
  if (d < 0) return false;
  return tab_[static_cast<std::size_t>(from) * kNumDirs + d].size() > 0;
}

const CostVector& EdgeCostTable::cost(Vertex from, Vertex to) const {
  const int d = dir_index(from, to);
  if (d < 0)
    throw std::invalid_argument("cost lookup on a non-adjacent vertex pair");
  const CostVector& c = tab_[static_cast<std::size_t>(from) * kNumDirs + d];
  if (c.size() == 0)
    throw std::invalid_argument("cost lookup on a missing action");
  return c;
}

void EdgeCostTable::set_directed(Vertex from, Vertex to, CostVector c) {
  const int d = dir_index(from, to);
  if (d < 0)
    throw std::invalid_argument("cost assignment on a non-adjacent pair");
  if (c.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("cost vector length does not match objectives");
  tab_[static_cast<std::size_t>(from) * kNumDirs + d] = std::move(c);
}

void EdgeCostTable::set_undirected(Vertex u, Vertex v, const CostVector& c) {
  set_directed(u, v, c);
  if (u != v) set_directed(v, u, c);
}

}  // namespace momapf
