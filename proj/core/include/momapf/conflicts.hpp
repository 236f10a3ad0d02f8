#pragma once

#include <optional>
#include <utility>

#include "momapf/constraints.hpp"
#include "momapf/path.hpp"

namespace momapf {

// (i, j, vi, vj, t) with i < j. vi == vj is a vertex conflict at time t;
// otherwise the agents swap the edge (vi, vj) between t and t + 1.
struct Conflict {
  int i = -1;
  int j = -1;
  Vertex vi = -1;
  Vertex vj = -1;
  TimeStep t = 0;

  bool is_vertex() const { return vi == vj; }
  bool operator==(const Conflict&) const = default;
};

// Position with goal-stay padding: agents hold their last vertex forever.
Vertex position_at(const Path& p, TimeStep t);

// Scans t = 0, 1, ...; per time step all vertex conflicts are checked over
// agent pairs (i, j), i < j, then all edge swaps into t + 1. Returns the
// first hit, or nullopt for a conflict-free joint path.
std::optional<Conflict> detect_first_conflict(const JointPath& jp);

// (i, vi, vj, t) and (j, vj, vi, t): two vertex constraints for a vertex
// conflict, two opposite-direction edge constraints for an edge conflict.
std::pair<Constraint, Constraint> split_conflict(const Conflict& c);

}  // namespace momapf
