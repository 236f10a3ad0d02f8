#pragma once

#include <limits>
#include <vector>

#include "momapf/cost_vector.hpp"
#include "momapf/edge_costs.hpp"

namespace momapf {

using TimeStep = int;
inline constexpr TimeStep kTimeInf = std::numeric_limits<TimeStep>::max() / 4;

// One vertex per time step starting at t = 0; consecutive entries are equal
// (wait) or adjacent. Cost accrues over the traversed edges only, nothing
// after the final entry.
using Path = std::vector<Vertex>;
using JointPath = std::vector<Path>;

struct PathSolution {
  Path path;
  CostVector cost;
};

struct JointSolution {
  JointPath paths;
  CostVector cost;
};

// Sum of edge costs along p, self-loops included. Throws on an empty path
// or on consecutive vertices that are neither equal nor adjacent.
CostVector path_cost(const Path& p, const EdgeCostTable& costs);

// Componentwise sum of the individual path costs.
CostVector joint_path_cost(const JointPath& jp, const EdgeCostTable& costs);

}  // namespace momapf
