#include "momapf/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "momapf/rng.hpp"

namespace momapf {

namespace {

std::string loc(const std::string& msg, int line, int col) {
  std::ostringstream os;
  os << msg << " (line " << line << ", column " << col << ")";
  return os.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error(loc(msg, line_, col_)), line(line_), col(col_) {}

void CostModelSpec::validate() const {
  if (kind == CostModelKind::Random) {
    if (objectives < 1)
      throw std::invalid_argument("random cost model requires objectives >= 1");
    if (cmax < 1)
      throw std::invalid_argument("random cost model requires cmax >= 1");
  } else {
    if (objectives != 2)
      throw std::invalid_argument("time-risk cost model requires objectives == 2");
  }
}

GridGraph parse_map(const std::string& text) {
  const auto lines = split_lines(text);
  int li = 0;
  auto next_line = [&]() -> const std::string& {
    if (li >= static_cast<int>(lines.size()))
      throw ParseError("unexpected end of map file", li + 1, 1);
    return lines[li++];
  };

  {
    std::istringstream is(next_line());
    std::string key, value;
    is >> key >> value;
    if (key != "type" || value != "octile")
      throw ParseError("expected header 'type octile'", li, 1);
  }

  int width = -1, height = -1;
  for (int k = 0; k < 2; ++k) {
    std::istringstream is(next_line());
    std::string key;
    int value = -1;
    is >> key >> value;
    if (key == "height" && value > 0)
      height = value;
    else if (key == "width" && value > 0)
      width = value;
    else
      throw ParseError("expected 'height H' or 'width W'", li, 1);
  }
  if (width <= 0 || height <= 0)
    throw ParseError("missing width or height header", li, 1);

  if (next_line() != "map") throw ParseError("expected 'map' header", li, 1);

  std::vector<std::uint8_t> passable(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const std::string& row = next_line();
    if (static_cast<int>(row.size()) != width)
      throw ParseError("map row has wrong length", li,
                       static_cast<int>(row.size()) + 1);
    for (int x = 0; x < width; ++x) {
      const char ch = row[x];
      if (ch == '.' || ch == 'G')
        passable[static_cast<std::size_t>(y) * width + x] = 1;
      else if (ch == '@' || ch == 'T' || ch == 'O')
        passable[static_cast<std::size_t>(y) * width + x] = 0;
      else
        throw ParseError(std::string("unknown map glyph '") + ch + "'", li,
                         x + 1);
    }
  }
  for (; li < static_cast<int>(lines.size()); ++li)
    if (!lines[li].empty())
      throw ParseError("unexpected content after the map grid", li + 1, 1);
  return GridGraph(width, height, std::move(passable));
}

std::string serialize_map(const GridGraph& g) {
  std::ostringstream os;
  os << "type octile\n"
     << "height " << g.height() << "\n"
     << "width " << g.width() << "\n"
     << "map\n";
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x)
      os << (g.passable(g.cell(x, y)) ? '.' : '@');
    os << '\n';
  }
  return os.str();
}

Scenario parse_scen(const std::string& text, const GridGraph& g) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty scenario file", 1, 1);
  {
    std::istringstream is(lines[0]);
    std::string key;
    int version = -1;
    is >> key >> version;
    if (key != "version" || version != 1)
      throw ParseError("expected header 'version 1'", 1, 1);
  }

  Scenario scen;
  for (int li = 1; li < static_cast<int>(lines.size()); ++li) {
    if (lines[li].empty()) continue;
    std::istringstream is(lines[li]);
    int bucket = 0, w = 0, h = 0, sx = 0, sy = 0, gx = 0, gy = 0;
    double optimal = 0.0;
    std::string map_name;
    if (!(is >> bucket >> map_name >> w >> h >> sx >> sy >> gx >> gy >>
          optimal))
      throw ParseError("malformed scenario entry", li + 1, 1);
    if (w != g.width() || h != g.height())
      throw ParseError("scenario entry dimensions do not match the map",
                       li + 1, 1);
    if (!g.in_bounds(sx, sy) || !g.in_bounds(gx, gy))
      throw ParseError("scenario coordinate outside the map", li + 1, 1);
    const Vertex s = g.cell(sx, sy), t = g.cell(gx, gy);
    if (!g.passable(s) || !g.passable(t))
      throw ParseError("scenario start or goal on a blocked cell", li + 1, 1);
    if (scen.map_name.empty()) scen.map_name = map_name;
    scen.agents.emplace_back(s, t);
  }
  return scen;
}

EdgeCostTable assign_random_costs(const GridGraph& g,
                                  const CostModelSpec& spec) {
  if (spec.kind != CostModelKind::Random)
    throw std::invalid_argument("assign_random_costs requires the random kind");
  spec.validate();
  EdgeCostTable t(g, spec.objectives);
  SplitMix64 rng(spec.seed);
  auto sample = [&]() {
    CostVector c(spec.objectives);
    for (int m = 0; m < spec.objectives; ++m) c[m] = rng.uniform(1, spec.cmax);
    return c;
  };
  // Pinned consumption order: row-major over passable cells; per cell the
  // self-loop, then the east edge, then the south edge.
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x) {
      const Vertex v = g.cell(x, y);
      if (!g.passable(v)) continue;
      t.set_undirected(v, v, sample());
      if (x + 1 < g.width() && g.passable(g.cell(x + 1, y)))
        t.set_undirected(v, g.cell(x + 1, y), sample());
      if (y + 1 < g.height() && g.passable(g.cell(x, y + 1)))
        t.set_undirected(v, g.cell(x, y + 1), sample());
    }
  return t;
}

Cost risk_score(const GridGraph& g, Vertex v) {
  const int x = g.cell_x(v), y = g.cell_y(v);
  Cost blocked = 0;
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      if (g.in_bounds(x + dx, y + dy) && !g.passable(g.cell(x + dx, y + dy)))
        ++blocked;
    }
  return 1 + blocked;
}

EdgeCostTable assign_time_risk_costs(const GridGraph& g) {
  EdgeCostTable t(g, 2);
  std::array<Vertex, 4> nb{};
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x) {
      const Vertex v = g.cell(x, y);
      if (!g.passable(v)) continue;
      t.set_directed(v, v, CostVector{1, risk_score(g, v)});
      const int n = g.neighbors(v, nb);
      for (int k = 0; k < n; ++k)
        t.set_directed(v, nb[k], CostVector{1, risk_score(g, nb[k])});
    }
  return t;
}

Instance make_instance(const GridGraph& g, const Scenario& scen, int n_agents,
                       const CostModelSpec& spec) {
  if (n_agents < 1)
    throw std::invalid_argument("instance needs at least one agent");
  if (n_agents > static_cast<int>(scen.agents.size()))
    throw std::invalid_argument("scenario has fewer entries than agents");
  Instance inst;
  inst.grid = g;
  inst.costs = spec.kind == CostModelKind::Random
                   ? assign_random_costs(g, spec)
                   : assign_time_risk_costs(g);
  std::set<Vertex> starts, goals;
  for (int i = 0; i < n_agents; ++i) {
    const auto [s, t] = scen.agents[i];
    if (!starts.insert(s).second)
      throw std::invalid_argument("two agents share a start cell");
    if (!goals.insert(t).second)
      throw std::invalid_argument("two agents share a goal cell");
    inst.starts.push_back(s);
    inst.goals.push_back(t);
  }
  return inst;
}

std::string instance_to_json(const Instance& inst, const std::string& map_name,
                             const CostModelSpec& spec) {
  nlohmann::ordered_json j;
  j["map"] = map_name;
  auto agents = nlohmann::ordered_json::array();
  for (int i = 0; i < inst.num_agents(); ++i)
    agents.push_back({{"start", inst.starts[i]}, {"goal", inst.goals[i]}});
  j["agents"] = std::move(agents);
  nlohmann::ordered_json model;
  model["kind"] =
      spec.kind == CostModelKind::Random ? "random" : "time-risk";
  model["objectives"] = spec.objectives;
  if (spec.kind == CostModelKind::Random) model["cmax"] = spec.cmax;
  j["cost_model"] = std::move(model);
  j["seed"] = spec.seed;
  return j.dump(2);
}

}  // namespace momapf
