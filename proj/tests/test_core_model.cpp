#include <doctest.h>

#include "momapf/cost_vector.hpp"
#include "momapf/path.hpp"
#include "momapf/rng.hpp"
#include "support/test_util.hpp"

using namespace momapf;
using namespace momapf::test;

TEST_CASE("dominance basics") {
  CHECK(dominates({1, 2}, {2, 2}));
  CHECK_FALSE(dominates({3, 3}, {3, 3}));
  CHECK_FALSE(dominates({1, 2}, {2, 1}));
  CHECK_FALSE(dominates({2, 1}, {1, 2}));
  CHECK_THROWS_AS(dominates({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("dominates_or_equal basics") {
  CHECK(dominates_or_equal({3, 5}, {3, 5}));
  CHECK(dominates_or_equal({3, 5}, {4, 6}));
  CHECK_FALSE(dominates_or_equal({2, 7}, {3, 5}));
}

TEST_CASE("lex_less basics") {
  CHECK(lex_less({1, 9}, {2, 0}));
  CHECK(lex_less({2, 0}, {2, 1}));
  CHECK_FALSE(lex_less({2, 1}, {2, 1}));
}

TEST_CASE("dominance order laws on sampled vectors") {
  SplitMix64 rng(7);
  int checked = 0;
  for (int it = 0; it < 1500; ++it) {
    const int m = 1 + static_cast<int>(rng.next() % 4);
    const CostVector a = random_vector(rng, m, 4);
    const CostVector b = random_vector(rng, m, 4);
    const CostVector c = random_vector(rng, m, 4);

    CHECK_FALSE(dominates(a, a));  // irreflexive
    if (dominates(a, b)) {
      CHECK_FALSE(dominates(b, a));  // asymmetric
      CHECK(lex_less(a, b));         // dominance implies lex order
    }
    if (dominates(a, b) && dominates(b, c)) {
      CHECK(dominates(a, c));  // transitive
      ++checked;
    }
    CHECK(dominates(a, b) == (dominates_or_equal(a, b) && a != b));

    // lex_less is a strict total order.
    CHECK_FALSE(lex_less(a, a));
    if (a != b) CHECK(lex_less(a, b) != lex_less(b, a));
    if (lex_less(a, b) && lex_less(b, c)) CHECK(lex_less(a, c));
  }
  CHECK(checked > 0);
}

TEST_CASE("path cost sums traversed edges") {
  const GridGraph g = make_grid({".."});
  EdgeCostTable costs(g, 2);
  costs.set_undirected(0, 0, CostVector{1, 4});
  costs.set_undirected(1, 1, CostVector{2, 2});
  costs.set_undirected(0, 1, CostVector{1, 2});

  CHECK(path_cost({0}, costs) == CostVector{0, 0});
  CHECK(path_cost({0, 0, 1}, costs) == CostVector{2, 6});
}

TEST_CASE("path cost rejects malformed paths") {
  const GridGraph g = make_grid({"...", "..."});
  const EdgeCostTable costs = unit_costs(g, 1);
  CHECK_THROWS_AS(path_cost({0, 2}, costs), std::invalid_argument);
  CHECK_THROWS_AS(path_cost({}, costs), std::invalid_argument);
}

TEST_CASE("path cost matches direct edge enumeration on a random grid") {
  const GridGraph g = make_grid({"...", "...", "..."});
  CostModelSpec spec;
  spec.objectives = 2;
  spec.cmax = 9;
  spec.seed = 42;
  const EdgeCostTable costs = assign_random_costs(g, spec);

  const Path p = {0, 1, 1, 4};  // move, wait, move
  CostVector expect(2);
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    expect += costs.cost(p[i], p[i + 1]);
  CHECK(path_cost(p, costs) == expect);
}

TEST_CASE("path cost is additive over concatenation") {
  const GridGraph g = make_grid({"....", "....", "....", "...."});
  CostModelSpec spec;
  spec.objectives = 3;
  spec.cmax = 5;
  spec.seed = 3;
  const EdgeCostTable costs = assign_random_costs(g, spec);
  SplitMix64 rng(11);

  std::array<Vertex, 4> nb{};
  for (int it = 0; it < 300; ++it) {
    Path p1 = {static_cast<Vertex>(rng.uniform(0, g.num_cells() - 1))};
    for (int k = 0; k < 4; ++k) {
      const int n = g.neighbors(p1.back(), nb);
      p1.push_back(rng.uniform(0, n) == n ? p1.back()
                                          : nb[rng.uniform(0, n - 1)]);
    }
    Path p2 = {p1.back()};
    for (int k = 0; k < 3; ++k) {
      const int n = g.neighbors(p2.back(), nb);
      p2.push_back(nb[rng.uniform(0, n - 1)]);
    }
    Path joined = p1;
    joined.insert(joined.end(), p2.begin() + 1, p2.end());
    CHECK(path_cost(joined, costs) ==
          path_cost(p1, costs) + path_cost(p2, costs));
  }
}

TEST_CASE("joint path cost is the componentwise sum") {
  const GridGraph g = make_grid({"..", ".."});
  const EdgeCostTable costs = unit_costs(g, 2);
  const JointPath jp = {{0, 1}, {2, 3, 3}};
  CHECK(joint_path_cost(jp, costs) == CostVector{3, 3});
}
