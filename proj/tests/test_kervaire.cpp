#include "doctest.h"

#include "drtest/generate.hpp"
#include "drtest/itest.hpp"
#include "drtest/ivanov.hpp"
#include "drtest/kervaire.hpp"
#include "drtest/text.hpp"
#include "drtest/verify.hpp"
#include "oracles.hpp"

using namespace drtest;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"a", "b", "x"};

}  // namespace

TEST_CASE("occurrence clouds") {
  Word r = parse_word("[x, y]", xy);
  auto c = occurrence_cloud(r, 0, 2);
  REQUIRE(c.size() == 2);
  CHECK(c[0].position == 1);
  CHECK(c[0].point == RationalVector{0, 0});
  CHECK(c[1].position == 3);
  CHECK(c[1].point == RationalVector{0, -1});
  CHECK_THROWS_AS(occurrence_cloud(parse_word("x y", xy), 0, 2), std::invalid_argument);
}

TEST_CASE("syllables") {
  auto s = syllables(parse_word("x^2 y^-1 x x^-1 y^3", xy));
  REQUIRE(s.size() == 5);
  CHECK(s[0] == std::pair<Letter, std::size_t>{pos(0), 2});
  CHECK(s[1] == std::pair<Letter, std::size_t>{neg(1), 1});
  CHECK(s[3] == std::pair<Letter, std::size_t>{neg(0), 1});
  CHECK(s[4].second == 3);
}

TEST_CASE("hull and Dyck tests on commutators") {
  auto p = parse_presentation("x, y | [x, y]");
  auto h = hull_test(p);
  CHECK(h.status == Status::ProvenDR);
  CHECK(verify_verdict({&p, nullptr, nullptr}, h).ok);
  CHECK_THROWS_AS(hull_test(parse_presentation("x, y | x^2 y")), std::invalid_argument);
  auto d = dyck_test(parse_presentation("x, y | [x^2 y, x^-1 y^3]"));
  if (d.status == Status::ProvenDR) {
    auto q = parse_presentation("x, y | [x^2 y, x^-1 y^3]");
    CHECK(verify_verdict({&q, nullptr, nullptr}, d).ok);
  }
}

TEST_CASE("hull certificates reject non-extreme points") {
  auto p = parse_presentation("x, y | [y x^-1, [x^2, y]]");
  auto cloud = occurrence_cloud(p.relators[0], 0, 2);
  for (const auto& o : cloud) {
    auto cert = hull_certificate(p, 0, o.position);
    int copies = 0;
    std::vector<RationalVector> pts;
    for (const auto& other : cloud) {
      pts.push_back(other.point);
      copies += other.point == o.point ? 1 : 0;
    }
    bool expected = copies == 1 && oracle::extreme_2d(o.point, pts);
    CHECK(cert.has_value() == expected);
    if (cert) {
      CHECK(check_hull(p, *cert).ok);
      auto tampered = *cert;
      tampered.normal = RationalVector{0, 0};
      CHECK(!check_hull(p, tampered).ok);
    }
  }
}

TEST_CASE("property: hull verdicts are sound") {
  Rng rng(51);
  int proven = 0;
  for (int t = 0; t < 200; ++t) {
    Word a = random_word(rng, 2, 4);
    Word b = random_word(rng, 2, 4);
    Presentation p{xy, {reduce(commutator(a, b))}};
    if (p.relators[0].empty()) {
      continue;
    }
    auto v = hull_test(p);
    if (v.status == Status::ProvenDR) {
      ++proven;
      CHECK(verify_verdict({&p, nullptr, nullptr}, v).ok);
      const auto& w = std::get<HullWitness>(v.witness);
      CHECK(itest_fixed(p, w.normal).status == Status::ProvenDR);
    }
    auto d = dyck_test(p);
    if (d.status == Status::ProvenDR) {
      CHECK(verify_verdict({&p, nullptr, nullptr}, d).ok);
    }
  }
  CHECK(proven > 0);
}

TEST_CASE("commutator towers") {
  Word t = build_tower({parse_word("x^2", xy)});
  CHECK(t == parse_word("[x^2, [x, y]]", xy));
  CHECK_THROWS_AS(build_tower({parse_word("x y^-1", xy)}), std::invalid_argument);
  CHECK_NOTHROW(build_tower({parse_word("x y^-1", xy)}, false));
  CHECK(build_tower({}) == parse_word("[x, y]", xy));
}

TEST_CASE("Ivanov sequences") {
  Word r = parse_word("x a x^-1 x b", xyz);
  CHECK(ivanov_sequence(r, 2) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(ivanov_sequence(parse_word("x^2 a x^-1", xyz), 2) == std::vector<std::int64_t>{1, 0, 0});
  CHECK_THROWS(ivanov_sequence(parse_word("a b", xyz), 2));
  auto d = distinguished_cyclic_perm(parse_word("a x b x x^-1", xyz), 2);
  CHECK(d.beta == 1);
  CHECK(d.word[0] == pos(2));
  for (std::size_t i = 1; i < d.sequence.size(); ++i) {
    CHECK(d.sequence[i] < d.beta);
  }
  auto inv = distinguished_cyclic_perm(parse_word("a x^-1 b", xyz), 2);
  CHECK(inv.inverted);
  CHECK_THROWS(distinguished_cyclic_perm(parse_word("x a x^-1", xyz), 2));
}

TEST_CASE("perturbation bound and presentation") {
  Presentation q = parse_presentation("a, b | a b a^-1 b^-1");
  Word r = parse_word("x a x b^-1 x^-1 a x", xyz);
  auto pert = perturbation_bound(q, r, 0, {1, 0});
  for (std::int64_t m = pert.m0; m < pert.m0 + 4; ++m) {
    CHECK(unique_extremum_at_first(perturbed_weights(pert, m)));
    CHECK(unique_extremum_at_first(perturbed_weights(pert, -m)));
  }
  if (pert.m0 > 0) {
    std::int64_t below = pert.m0 - 1;
    CHECK(!(unique_extremum_at_first(perturbed_weights(pert, below)) &&
            unique_extremum_at_first(perturbed_weights(pert, -below))));
  }
  auto qp = perturbed_presentation(q, "x", pert, std::max<std::int64_t>(pert.m0, 1));
  CHECK(qp.generator_count() == 3);
  CHECK(qp.relator_count() == 2);
  CHECK_NOTHROW(qp.validate());
  CHECK(unique_extremum_at_first({3, 1, 2}));
  CHECK(unique_extremum_at_first({-1, 1, 2}));
  CHECK(!unique_extremum_at_first({1, 1, 2}));
  CHECK_THROWS_AS(perturbation_bound(q, r, 0, {0, 1}), std::invalid_argument);
}

TEST_CASE("property: re-rotation ends at a qualifying rotation") {
  Rng rng(52);
  for (int t = 0; t < 300; ++t) {
    Word r = random_word(rng, 3, 14);
    if (exponent(r, 2) == 0) {
      continue;
    }
    auto d = distinguished_cyclic_perm(r, 2);
    Word w = d.inverted ? r.inverse() : r;
    CHECK(rotate(w, d.start - 1) == d.word);
    auto it = ivanov_sequence(rotate(w, oracle::iterate_rotation(w, 2)), 2);
    CHECK(it[0] == d.beta);
    for (std::size_t i = 1; i < it.size(); ++i) {
      CHECK(it[i] < d.beta);
    }
  }
}
