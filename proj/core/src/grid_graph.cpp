#include "momapf/grid_graph.hpp"

#include <stdexcept>
#include <utility>

namespace momapf {

GridGraph::GridGraph(int width, int height, std::vector<std::uint8_t> passable)
    : w_(width), h_(height), passable_(std::move(passable)) {
  if (w_ <= 0 || h_ <= 0)
    throw std::invalid_argument("grid dimensions must be positive");
  if (passable_.size() != static_cast<std::size_t>(w_) * h_)
    throw std::invalid_argument("passable vector does not match dimensions");
}

int GridGraph::num_vertices() const {
  int n = 0;
  for (auto p : passable_) n += p != 0;
  return n;
}

int GridGraph::num_move_edges() const {
  int n = 0;
  for (int y = 0; y < h_; ++y)
    for (int x = 0; x < w_; ++x) {
      if (!passable_[cell(x, y)]) continue;
      if (x + 1 < w_ && passable_[cell(x + 1, y)]) ++n;
      if (y + 1 < h_ && passable_[cell(x, y + 1)]) ++n;
    }
  return n;
}

int GridGraph::neighbors(Vertex v, std::array<Vertex, 4>& out) const {
  const int x = cell_x(v), y = cell_y(v);
  int n = 0;
  // E, S, W, N
  if (x + 1 < w_ && passable_[cell(x + 1, y)]) out[n++] = cell(x + 1, y);
  if (y + 1 < h_ && passable_[cell(x, y + 1)]) out[n++] = cell(x, y + 1);
  if (x - 1 >= 0 && passable_[cell(x - 1, y)]) out[n++] = cell(x - 1, y);
  if (y - 1 >= 0 && passable_[cell(x, y - 1)]) out[n++] = cell(x, y - 1);
  return n;
}

bool GridGraph::adjacent(Vertex u, Vertex v) const {
  if (!passable(u) || !passable(v) || u == v) return false;
  const int ux = cell_x(u), uy = cell_y(u);
  const int vx = cell_x(v), vy = cell_y(v);
  return (ux == vx && (uy == vy + 1 || uy == vy - 1)) ||
         (uy == vy && (ux == vx + 1 || ux == vx - 1));
}

}  // namespace momapf
