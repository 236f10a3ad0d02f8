#include "momapf/constraints.hpp"

#include <algorithm>

namespace momapf {

namespace {

// Cell ids and times fit in 21 bits each on every map this library targets.
constexpr int kShift = 21;

std::uint64_t vkey(Vertex v, TimeStep t) {
  return (static_cast<std::uint64_t>(v) << kShift) |
         static_cast<std::uint64_t>(t);
}

std::uint64_t ekey(Vertex u, Vertex v, TimeStep t) {
  return (((static_cast<std::uint64_t>(u) << kShift) |
           static_cast<std::uint64_t>(v))
          << kShift) |
         static_cast<std::uint64_t>(t);
}

bool sorted_contains(const std::vector<std::uint64_t>& keys,
                     std::uint64_t key) {
  return std::binary_search(keys.begin(), keys.end(), key);
}

}  // namespace

ConstraintSet::ConstraintSet(int agent, const std::vector<Constraint>& all)
    : agent_(agent) {
  for (const Constraint& c : all) {
    if (c.agent != agent) continue;
    ++n_;
    if (c.is_vertex()) {
      vertex_keys_.push_back(vkey(c.from, c.t));
      auto it = std::find_if(latest_vertex_.begin(), latest_vertex_.end(),
                             [&](const auto& p) { return p.first == c.from; });
      if (it == latest_vertex_.end())
        latest_vertex_.emplace_back(c.from, c.t);
      else
        it->second = std::max(it->second, c.t);
    } else {
      edge_keys_.push_back(ekey(c.from, c.to, c.t));
    }
  }
  std::sort(vertex_keys_.begin(), vertex_keys_.end());
  std::sort(edge_keys_.begin(), edge_keys_.end());
}

bool ConstraintSet::allows_move(Vertex u, TimeStep t, Vertex w) const {
  if (sorted_contains(vertex_keys_, vkey(w, t + 1))) return false;
  if (u != w && sorted_contains(edge_keys_, ekey(u, w, t))) return false;
  return true;
}

bool ConstraintSet::vertex_blocked(Vertex v, TimeStep t) const {
  return sorted_contains(vertex_keys_, vkey(v, t));
}

TimeStep ConstraintSet::latest_vertex_constraint(Vertex v) const {
  for (const auto& [vertex, t] : latest_vertex_)
    if (vertex == v) return t;
  return -1;
}

bool consistent(Vertex u, TimeStep t, Vertex w, const ConstraintSet& cs) {
  return cs.allows_move(u, t, w);
}

bool path_consistent(const Path& p, const ConstraintSet& cs) {
  if (p.empty()) return false;
  if (cs.vertex_blocked(p[0], 0)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!cs.allows_move(p[i], static_cast<TimeStep>(i), p[i + 1])) return false;
  return true;
}

}  // namespace momapf
