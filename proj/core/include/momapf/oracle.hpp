#pragma once

#include <stdexcept>
#include <vector>

#include "momapf/constraints.hpp"
#include "momapf/instance.hpp"
#include "momapf/path.hpp"
#include "momapf/sipp.hpp"

namespace momapf {

// Brute-force references for the planners. They enumerate the timed search
// space depth-first and prune only against completed solutions plus a
// static-distance feasibility bound, so their correctness does not depend
// on any dominance or heuristic argument used by the planners. Collision
// and constraint checks are re-implemented here on purpose.

struct OracleLimits {
  long long node_budget = 200'000'000;
};

struct OracleBudgetExceeded : std::runtime_error {
  explicit OracleBudgetExceeded(long long budget);
};

// Exact cost-unique Pareto front of all trajectories start -> goal of
// arrival <= horizon that never stand on a vertex while a dynamic obstacle
// occupies it.
std::vector<PathSolution> single_agent_front_bruteforce(
    const GridGraph& g, const EdgeCostTable& costs, Vertex start, Vertex goal,
    const std::vector<ObstacleTrajectory>& obstacles, TimeStep horizon,
    const OracleLimits& limits = {});

// Same, with agent constraints as blockers. A trajectory may end at the
// goal only after the latest vertex constraint on the goal.
std::vector<PathSolution> single_agent_front_bruteforce(
    const GridGraph& g, const EdgeCostTable& costs, Vertex start, Vertex goal,
    const std::vector<Constraint>& constraints, int agent, TimeStep horizon,
    const OracleLimits& limits = {});

// Exact cost-unique Pareto front of conflict-free joint paths, enumerating
// per-step move combinations with inline vertex/edge collision rejection
// and goal-stay padding. Throws OracleBudgetExceeded when the node budget
// runs out; shrink the instance in that case.
std::vector<JointSolution> joint_front_bruteforce(
    const Instance& inst, TimeStep horizon, const OracleLimits& limits = {});

}  // namespace momapf
