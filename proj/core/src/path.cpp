#include "momapf/path.hpp"

#include <stdexcept>

namespace momapf {

CostVector path_cost(const Path& p, const EdgeCostTable& costs) {
  if (p.empty()) throw std::invalid_argument("path must not be empty");
  CostVector total(costs.objectives());
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    total += costs.cost(p[i], p[i + 1]);
  return total;
}

CostVector joint_path_cost(const JointPath& jp, const EdgeCostTable& costs) {
  CostVector total(costs.objectives());
  for (const Path& p : jp) total += path_cost(p, costs);
  return total;
}

}  // namespace momapf
