#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "momapf/instance.hpp"
#include "momapf/rng.hpp"
#include "support/test_util.hpp"

using namespace momapf;
using namespace momapf::test;

namespace {

std::string map_text(std::initializer_list<std::string> rows) {
  std::ostringstream os;
  os << "type octile\nheight " << rows.size() << "\nwidth "
     << rows.begin()->size() << "\nmap\n";
  for (const auto& r : rows) os << r << "\n";
  return os.str();
}

bool tables_equal(const GridGraph& g, const EdgeCostTable& a,
                  const EdgeCostTable& b) {
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    if (!g.passable(v)) continue;
    if (!(a.cost(v, v) == b.cost(v, v))) return false;
    const int n = g.neighbors(v, nb);
    for (int k = 0; k < n; ++k)
      if (!(a.cost(v, nb[k]) == b.cost(v, nb[k]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("map parsing: single free cell") {
  const GridGraph g = parse_map(map_text({"."}));
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_move_edges() == 0);
}

TEST_CASE("map parsing: two cells in a row") {
  const GridGraph g = parse_map(map_text({".."}));
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_move_edges() == 1);
}

TEST_CASE("map parsing: blocked corner") {
  const GridGraph g = parse_map(map_text({".@", ".."}));
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_move_edges() == 2);
}

TEST_CASE("map parsing: every passable cell gets a wait action") {
  const GridGraph g = parse_map(map_text({".@.", "..."}));
  const EdgeCostTable costs = unit_costs(g, 1);
  for (Vertex v = 0; v < g.num_cells(); ++v)
    CHECK(costs.has(v, v) == g.passable(v));
}

TEST_CASE("map parsing errors carry line and column") {
  try {
    parse_map("type octile\nheight 1\nwidth 2\nmap\n.x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(e.col == 2);
  }
  CHECK_THROWS_AS(parse_map("type quad\nheight 1\nwidth 1\nmap\n.\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_map("type octile\nheight 2\nwidth 2\nmap\n..\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_map("type octile\nheight 1\nwidth 3\nmap\n..\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_map("type octile\nheight 1\nwidth 2\nmap\n..\n..\n"),
                  ParseError);
  CHECK_NOTHROW(parse_map("type octile\nheight 1\nwidth 2\nmap\n..\n\n"));
}

TEST_CASE("map round-trips through serialization") {
  SplitMix64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const int w = 1 + static_cast<int>(rng.next() % 6);
    const int h = 1 + static_cast<int>(rng.next() % 6);
    std::vector<std::uint8_t> passable;
    for (int i = 0; i < w * h; ++i)
      passable.push_back(rng.next() % 3 != 0 ? 1 : 0);
    const GridGraph g(w, h, passable);
    CHECK(parse_map(serialize_map(g)) == g);
  }
}

TEST_CASE("scen parsing: empty body yields no agents") {
  const GridGraph g = parse_map(map_text({".."}));
  const Scenario scen = parse_scen("version 1\n", g);
  CHECK(scen.agents.empty());
}

TEST_CASE("scen parsing: coordinates are (column, row)") {
  const GridGraph g = parse_map(map_text({".."}));
  const Scenario scen =
      parse_scen("version 1\n0\ttiny.map\t2\t1\t0\t0\t1\t0\t1.0\n", g);
  REQUIRE(scen.agents.size() == 1);
  CHECK(scen.agents[0].first == 0);
  CHECK(scen.agents[0].second == 1);
  CHECK(scen.map_name == "tiny.map");
}

TEST_CASE("scen parsing matches an independent line count") {
  const GridGraph g = make_grid({"....", "....", "....", "...."});
  std::ostringstream scen_text;
  scen_text << "version 1\n";
  SplitMix64 rng(9);
  int expected = 0;
  for (int i = 0; i < 20; ++i) {
    const int sx = static_cast<int>(rng.next() % 4);
    const int sy = static_cast<int>(rng.next() % 4);
    const int gx = static_cast<int>(rng.next() % 4);
    const int gy = static_cast<int>(rng.next() % 4);
    scen_text << i / 4 << "\tm.map\t4\t4\t" << sx << "\t" << sy << "\t" << gx
              << "\t" << gy << "\t" << (i + 0.5) << "\n";
    ++expected;
  }
  // Independent oracle: non-header non-empty line count.
  std::istringstream is(scen_text.str());
  std::string line;
  int lines = 0;
  while (std::getline(is, line))
    if (!line.empty()) ++lines;
  CHECK(lines - 1 == expected);

  const Scenario scen = parse_scen(scen_text.str(), g);
  CHECK(static_cast<int>(scen.agents.size()) == expected);
}

TEST_CASE("scen parsing validation errors") {
  const GridGraph g = parse_map(map_text({".@"}));
  CHECK_THROWS_AS(
      parse_scen("version 1\n0\tm\t2\t1\t0\t0\t5\t0\t1.0\n", g), ParseError);
  CHECK_THROWS_AS(
      parse_scen("version 1\n0\tm\t2\t1\t0\t0\t1\t0\t1.0\n", g), ParseError);
  CHECK_THROWS_AS(
      parse_scen("version 1\n0\tm\t3\t1\t0\t0\t0\t0\t1.0\n", g), ParseError);
  CHECK_THROWS_AS(parse_scen("no header\n", g), ParseError);
}

TEST_CASE("random costs: cmax 1 degenerates to all ones") {
  const GridGraph g = make_grid({"...", "..."});
  CostModelSpec spec;
  spec.objectives = 3;
  spec.cmax = 1;
  spec.seed = 77;
  const EdgeCostTable costs = assign_random_costs(g, spec);
  CHECK(tables_equal(g, costs, uniform_costs(g, CostVector{1, 1, 1})));
}

TEST_CASE("random costs: deterministic in the seed") {
  const GridGraph g = make_grid({"....", ".@..", "...."});
  CostModelSpec spec;
  spec.objectives = 2;
  spec.cmax = 7;
  spec.seed = 123;
  CHECK(tables_equal(g, assign_random_costs(g, spec),
                     assign_random_costs(g, spec)));
}

TEST_CASE("random costs: neighboring seeds differ") {
  const GridGraph g = make_grid({"....", "....", "....", "...."});
  CostModelSpec a, b;
  a.objectives = b.objectives = 2;
  a.cmax = b.cmax = 7;
  a.seed = 50;
  b.seed = 51;
  CHECK_FALSE(tables_equal(g, assign_random_costs(g, a),
                           assign_random_costs(g, b)));
}

TEST_CASE("random costs: one vector per undirected edge") {
  const GridGraph g = make_grid({"...", "...", "..."});
  CostModelSpec spec;
  spec.objectives = 2;
  spec.cmax = 9;
  spec.seed = 4;
  const EdgeCostTable costs = assign_random_costs(g, spec);
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    const int n = g.neighbors(v, nb);
    for (int k = 0; k < n; ++k)
      CHECK(costs.cost(v, nb[k]) == costs.cost(nb[k], v));
  }
}

TEST_CASE("random costs: components stay within [1, cmax]") {
  const GridGraph g = make_grid({"....", "...."});
  CostModelSpec spec;
  spec.objectives = 2;
  spec.cmax = 3;
  spec.seed = 6;
  const EdgeCostTable costs = assign_random_costs(g, spec);
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    if (!g.passable(v)) continue;
    for (Cost c : costs.cost(v, v)) {
      CHECK(c >= 1);
      CHECK(c <= 3);
    }
    const int n = g.neighbors(v, nb);
    for (int k = 0; k < n; ++k)
      for (Cost c : costs.cost(v, nb[k])) {
        CHECK(c >= 1);
        CHECK(c <= 3);
      }
  }
}

TEST_CASE("time-risk: risk scores count blocked 8-neighbors") {
  const GridGraph g = make_grid({".....",
                                 ".@@..",
                                 ".@...",
                                 "....."});
  CHECK(risk_score(g, g.cell(4, 3)) == 1);      // far from any block
  CHECK(risk_score(g, g.cell(3, 2)) == 1 + 1);  // one diagonal block
  CHECK(risk_score(g, g.cell(0, 1)) == 1 + 2);
  CHECK(risk_score(g, g.cell(2, 0)) == 1 + 2);
  CHECK(risk_score(g, g.cell(2, 2)) == 1 + 3);  // three blocked neighbors
}

TEST_CASE("time-risk: corner of an open map has risk 1") {
  const GridGraph g = make_grid({"...", "...", "..."});
  CHECK(risk_score(g, g.cell(0, 0)) == 1);
  const EdgeCostTable costs = assign_time_risk_costs(g);
  CHECK(costs.cost(g.cell(1, 1), g.cell(1, 1)) == CostVector{1, 1});
}

TEST_CASE("time-risk: cost is attributed to the arrival cell") {
  const GridGraph g = make_grid({"..@", "..."});
  const EdgeCostTable costs = assign_time_risk_costs(g);
  const Vertex a = g.cell(0, 0), b = g.cell(1, 0);
  CHECK(costs.cost(a, b) == CostVector{1, risk_score(g, b)});
  CHECK(costs.cost(b, a) == CostVector{1, risk_score(g, a)});
  CHECK(risk_score(g, b) != risk_score(g, a));
}

TEST_CASE("time-risk: time component is always exactly 1") {
  const GridGraph g = make_grid({"..@.", ".@..", "...."});
  const EdgeCostTable costs = assign_time_risk_costs(g);
  std::array<Vertex, 4> nb{};
  for (Vertex v = 0; v < g.num_cells(); ++v) {
    if (!g.passable(v)) continue;
    CHECK(costs.cost(v, v)[0] == 1);
    const int n = g.neighbors(v, nb);
    for (int k = 0; k < n; ++k) CHECK(costs.cost(v, nb[k])[0] == 1);
  }
}

TEST_CASE("cost model validation") {
  CostModelSpec bad;
  bad.objectives = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.objectives = 2;
  bad.cmax = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CostModelSpec risk;
  risk.kind = CostModelKind::TimeRisk;
  risk.objectives = 3;
  CHECK_THROWS_AS(risk.validate(), std::invalid_argument);
}

TEST_CASE("instance export schema") {
  const GridGraph g = make_grid({"...", "..."});
  Scenario scen;
  scen.map_name = "demo.map";
  scen.agents = {{0, 5}, {2, 3}};
  CostModelSpec spec;
  spec.objectives = 2;
  spec.cmax = 4;
  spec.seed = 99;
  const Instance inst = make_instance(g, scen, 2, spec);
  const auto doc =
      nlohmann::json::parse(instance_to_json(inst, scen.map_name, spec));
  CHECK(doc.at("map") == "demo.map");
  CHECK(doc.at("agents").size() == 2);
  CHECK(doc.at("agents")[0].at("start") == 0);
  CHECK(doc.at("agents")[1].at("goal") == 3);
  CHECK(doc.at("cost_model").at("kind") == "random");
  CHECK(doc.at("cost_model").at("cmax") == 4);
  CHECK(doc.at("seed") == 99);
}

TEST_CASE("make_instance validates agent counts and distinctness") {
  const GridGraph g = make_grid({"...."});
  Scenario scen;
  scen.agents = {{0, 3}, {0, 2}};
  CostModelSpec spec;
  CHECK_THROWS_AS(make_instance(g, scen, 3, spec), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(g, scen, 2, spec), std::invalid_argument);
  CHECK_NOTHROW(make_instance(g, scen, 1, spec));
}
