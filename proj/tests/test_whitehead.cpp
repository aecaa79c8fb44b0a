#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "drtest/generate.hpp"
#include "drtest/linear.hpp"
#include "drtest/text.hpp"
#include "drtest/whitehead.hpp"

using namespace drtest;

TEST_CASE("Whitehead graph edges") {
  auto p = parse_presentation("x, y | x y x^-1 y^-1");
  auto g = whitehead_graph(p);
  CHECK(g.vertex_count == 4);
  REQUIRE(g.edges.size() == 4);
  // corner 0 joins x and y: (+x, -y)
  CHECK(g.edges[0].a == wh_vertex(pos(0)));
  CHECK(g.edges[0].b == wh_vertex(neg(1)));
  CHECK(wh_vertex_name(p, 1) == "-x");
  CHECK(wh_vertex_name(p, 2) == "y");
}

TEST_CASE("simple cycles") {
  WhiteheadGraph tri{3, {{0, 1, 0, 0}, {1, 2, 0, 1}, {2, 0, 0, 2}}};
  bool truncated = false;
  CHECK(simple_cycles(tri, 100, truncated).size() == 1);
  CHECK(!truncated);
  WhiteheadGraph multi{2, {{0, 1, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 2}, {1, 1, 0, 3}}};
  auto cycles = simple_cycles(multi, 100, truncated);
  CHECK(cycles.size() == 4);  // three 2-cycles and a loop
  simple_cycles(multi, 2, truncated);
  CHECK(truncated);
}

TEST_CASE("property: cycles are simple and distinct") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    WhiteheadGraph g{2 + uniform_below(rng, 4), {}};
    for (std::size_t e = 0, k = 1 + uniform_below(rng, 7); e < k; ++e) {
      g.edges.push_back({static_cast<std::size_t>(uniform_below(rng, g.vertex_count)),
                         static_cast<std::size_t>(uniform_below(rng, g.vertex_count)), 0, e});
    }
    bool truncated = false;
    auto cycles = simple_cycles(g, 100000, truncated);
    CHECK(!truncated);
    std::set<std::vector<std::size_t>> seen;
    for (auto c : cycles) {
      REQUIRE(!c.empty());
      // Consecutive edges share a vertex and every vertex has degree two.
      std::map<std::size_t, int> degree;
      for (auto e : c) {
        ++degree[g.edges[e].a];
        ++degree[g.edges[e].b];
      }
      for (const auto& [v, d] : degree) {
        CHECK(d == 2);
      }
      std::sort(c.begin(), c.end());
      CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
      CHECK(seen.insert(c).second);
    }
  }
}

TEST_CASE("weight test") {
  auto torus = parse_presentation("x, y | x y x^-1 y^-1");
  auto w = weight_test(torus);
  CHECK(w.status == WeightTestStatus::Feasible);
  CHECK(satisfies(w.system, w.assignment));

  auto bad = parse_presentation("x, y | x^3 y x y");
  auto b = weight_test(bad);
  CHECK(b.status == WeightTestStatus::Infeasible);
  CHECK(certifies_infeasible(b.system, b.certificate));

  auto six = parse_presentation(
      "x, y, z, t, u, v | x u z^2 = y u t v ; y u = z v ; y^3 = t x^2 ; t v^2 = z x u ; t x = z y");
  auto s = weight_test(six);
  CHECK(s.cycle_count == 2623);
  CHECK(s.status == WeightTestStatus::Infeasible);
  CHECK(certifies_infeasible(s.system, s.certificate));

  CHECK(weight_test(parse_presentation("x | x^3")).status == WeightTestStatus::Inapplicable);
  auto t = weight_test(parse_presentation("a, b, c | a b c a b c^-1 ; a c b a^-1 c b"), 1);
  CHECK((t.status == WeightTestStatus::Truncated || t.status == WeightTestStatus::Infeasible));
}

TEST_CASE("property: weight test results certify themselves") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    Presentation p{generator_names(2 + uniform_below(rng, 2)), {}};
    for (std::size_t j = 0, m = 1 + uniform_below(rng, 2); j < m; ++j) {
      p.relators.push_back(cyclically_reduce(random_word(rng, p.generator_count(), 6)));
    }
    if (std::any_of(p.relators.begin(), p.relators.end(), [](const Word& r) { return r.size() < 2; })) {
      continue;
    }
    auto w = weight_test(p);
    if (w.status == WeightTestStatus::Feasible) {
      CHECK(satisfies(w.system, w.assignment));
    } else if (w.status == WeightTestStatus::Infeasible) {
      CHECK(certifies_infeasible(w.system, w.certificate));
    }
  }
}
