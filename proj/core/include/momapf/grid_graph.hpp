#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace momapf {

// Row-major cell id: v = y * width + x.
using Vertex = int;

// Undirected 4-connected grid. Every passable cell is a vertex and carries
// an implicit self-loop (waiting in place is an action like any move).
class GridGraph {
 public:
  GridGraph() = default;
  GridGraph(int width, int height, std::vector<std::uint8_t> passable);

  int width() const { return w_; }
  int height() const { return h_; }
  int num_cells() const { return w_ * h_; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < w_ && y >= 0 && y < h_;
  }
  Vertex cell(int x, int y) const { return y * w_ + x; }
  int cell_x(Vertex v) const { return v % w_; }
  int cell_y(Vertex v) const { return v / w_; }
  bool passable(Vertex v) const {
    return v >= 0 && v < num_cells() && passable_[v] != 0;
  }

  int num_vertices() const;    // passable cells
  int num_move_edges() const;  // undirected 4-connected edges

  // Passable 4-neighbors in the fixed order E, S, W, N; returns the count.
  int neighbors(Vertex v, std::array<Vertex, 4>& out) const;
  // True iff u and v are distinct adjacent passable cells.
  bool adjacent(Vertex u, Vertex v) const;

  bool operator==(const GridGraph&) const = default;

 private:
  int w_ = 0, h_ = 0;
  std::vector<std::uint8_t> passable_;
};

}  // namespace momapf
