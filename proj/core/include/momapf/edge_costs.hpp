#pragma once

#include "momapf/cost_vector.hpp"
#include "momapf/grid_graph.hpp"

namespace momapf {

// Actions out of a cell; Wait is the self-loop.
enum class Dir : int { Wait = 0, East = 1, South = 2, West = 3, North = 4 };
inline constexpr int kNumDirs = 5;

// Cost vectors for every action on a grid, looked up by (from, to) where
// to is either from (wait) or a 4-neighbor. The random model fills both
// directions of an edge with one sampled vector; the time-risk model is
// direction-dependent because the cost is attributed to the arrival cell.
class EdgeCostTable {
 public:
  EdgeCostTable() = default;
  EdgeCostTable(const GridGraph& g, int objectives);

  int objectives() const { return m_; }
  bool has(Vertex from, Vertex to) const;
  // Throws std::invalid_argument when (from, to) is not a wait or move edge.
  const CostVector& cost(Vertex from, Vertex to) const;

  void set_directed(Vertex from, Vertex to, CostVector c);
  // One vector shared by both directions; u == v sets the self-loop.
  void set_undirected(Vertex u, Vertex v, const CostVector& c);

 private:
  int dir_index(Vertex from, Vertex to) const;  // -1 when not an action

  int w_ = 0, h_ = 0, m_ = 0;
  std::vector<CostVector> tab_;  // [cell * kNumDirs + dir]; empty = absent
};

}  // namespace momapf
