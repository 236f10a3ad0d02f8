#pragma once

#include <vector>

#include "momapf/grid_graph.hpp"
#include "momapf/path.hpp"

namespace momapf {

// (agent, from, to, t). from == to forbids the agent from being at `from`
// at time t; from != to forbids the directed move from -> to between t and
// t + 1 (the opposite direction stays allowed).
struct Constraint {
  int agent = -1;
  Vertex from = -1;
  Vertex to = -1;
  TimeStep t = 0;

  bool is_vertex() const { return from == to; }
  bool operator==(const Constraint&) const = default;
};

// One agent's view of a constraint set, hashed for O(1) move checks.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(int agent, const std::vector<Constraint>& all);

  int agent() const { return agent_; }
  std::size_t size() const { return n_; }

  // Move (u, t) -> (w, t+1); u == w is a wait.
  bool allows_move(Vertex u, TimeStep t, Vertex w) const;
  bool vertex_blocked(Vertex v, TimeStep t) const;
  // Latest t with a vertex constraint on v, or -1.
  TimeStep latest_vertex_constraint(Vertex v) const;

 private:
  int agent_ = -1;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> vertex_keys_;  // sorted (v, t) keys
  std::vector<std::uint64_t> edge_keys_;    // sorted (u, v, t) keys
  std::vector<std::pair<Vertex, TimeStep>> latest_vertex_;  // sorted by vertex
};

// True iff the move (u, t) -> (w, t+1) violates no constraint in cs.
bool consistent(Vertex u, TimeStep t, Vertex w, const ConstraintSet& cs);

// Replays every step of p (including presence at t = 0) through the set.
bool path_consistent(const Path& p, const ConstraintSet& cs);

}  // namespace momapf
