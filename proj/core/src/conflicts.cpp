#include "momapf/conflicts.hpp"

#include <algorithm>
#include <stdexcept>

namespace momapf {

Vertex position_at(const Path& p, TimeStep t) {
  if (p.empty()) throw std::invalid_argument("empty path has no position");
  const std::size_t i = std::min<std::size_t>(t, p.size() - 1);
  return p[i];
}

std::optional<Conflict> detect_first_conflict(const JointPath& jp) {
  const int n = static_cast<int>(jp.size());
  TimeStep makespan = 0;
  for (const Path& p : jp) {
    if (p.empty()) throw std::invalid_argument("joint path has an empty path");
    makespan = std::max<TimeStep>(makespan,
                                  static_cast<TimeStep>(p.size()) - 1);
  }
  for (TimeStep t = 0; t <= makespan; ++t) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (position_at(jp[i], t) == position_at(jp[j], t))
          return Conflict{i, j, position_at(jp[i], t), position_at(jp[j], t),
                          t};
    if (t == makespan) break;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Vertex ui = position_at(jp[i], t), wi = position_at(jp[i], t + 1);
        const Vertex uj = position_at(jp[j], t), wj = position_at(jp[j], t + 1);
        if (ui != uj && wi == uj && wj == ui)
          return Conflict{i, j, ui, uj, t};
      }
  }
  return std::nullopt;
}

std::pair<Constraint, Constraint> split_conflict(const Conflict& c) {
  return {Constraint{c.i, c.vi, c.vj, c.t}, Constraint{c.j, c.vj, c.vi, c.t}};
}

}  // namespace momapf
