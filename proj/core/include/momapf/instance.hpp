#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "momapf/edge_costs.hpp"
#include "momapf/grid_graph.hpp"
#include "momapf/path.hpp"

namespace momapf {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_, int col_);
  int line;
  int col;
};

// Start/goal pairs in file order; indices are cell ids on the parsed map.
struct Scenario {
  std::string map_name;
  std::vector<std::pair<Vertex, Vertex>> agents;
};

enum class CostModelKind { Random, TimeRisk };

struct CostModelSpec {
  CostModelKind kind = CostModelKind::Random;
  int objectives = 2;
  Cost cmax = 2;             // random kind only
  std::uint64_t seed = 0;    // random kind only
  void validate() const;     // throws std::invalid_argument
};

// MovingAI .map grammar: "type octile", "height H", "width W", "map",
// then H rows of W glyphs. '.' and 'G' are passable; '@', 'T', 'O' blocked.
GridGraph parse_map(const std::string& text);
std::string serialize_map(const GridGraph& g);

// MovingAI .scen version 1: header "version 1", then per line
// bucket map width height sx sy gx gy optimal; (sx, sy) is (column, row).
Scenario parse_scen(const std::string& text, const GridGraph& g);

// Every action of every passable cell gets an M-vector of i.i.d. uniform
// integers in [1, cmax]. Deterministic in (seed, map shape, M, cmax): cells
// are visited in row-major order and per cell the self-loop, east edge and
// south edge are sampled in that order, one component at a time.
EdgeCostTable assign_random_costs(const GridGraph& g, const CostModelSpec& spec);

// Two objectives: every action into or within cell c costs (1, risk(c)).
EdgeCostTable assign_time_risk_costs(const GridGraph& g);

// 1 + number of blocked cells among the 8 neighbors; out-of-bounds cells
// count as free.
Cost risk_score(const GridGraph& g, Vertex v);

struct Instance {
  GridGraph grid;
  EdgeCostTable costs;
  std::vector<Vertex> starts;
  std::vector<Vertex> goals;

  int num_agents() const { return static_cast<int>(starts.size()); }
  int objectives() const { return costs.objectives(); }
};

// First n_agents entries of the scenario with costs attached.
Instance make_instance(const GridGraph& g, const Scenario& scen, int n_agents,
                       const CostModelSpec& spec);

// JSON document {map, agents, cost_model, seed}.
std::string instance_to_json(const Instance& inst, const std::string& map_name,
                             const CostModelSpec& spec);

}  // namespace momapf
