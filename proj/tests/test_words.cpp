#include "doctest.h"

#include "drtest/generate.hpp"
#include "drtest/presentation.hpp"
#include "drtest/text.hpp"
#include "drtest/word.hpp"

using namespace drtest;

namespace {

const std::vector<std::string> xy{"x", "y"};

Word w(const char* text) { return parse_word(text, xy); }

}  // namespace

TEST_CASE("parse and format words") {
  CHECK(w("x^2 y^-1") == Word{pos(0), pos(0), neg(1)});
  CHECK(w("x*y") == Word{pos(0), pos(1)});
  CHECK(w("[x, y]") == Word{pos(0), pos(1), neg(0), neg(1)});
  CHECK(w("(x y)^-2") == Word{neg(1), neg(0), neg(1), neg(0)});
  CHECK(w("[x^2, y]^2").size() == 12);
  CHECK(format_word(w("x x y^-1 y^-1 x"), xy) == "x^2 y^-2 x");
  CHECK(format_word(Word{}, xy).empty());
  CHECK_THROWS_AS(w("z"), ParseError);
  CHECK_THROWS_AS(w("x^0"), ParseError);
  CHECK_THROWS_AS(w("[x y]"), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_presentation("x, y |\n x y ; x q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("presentations with equations and comments") {
  auto p = parse_presentation("# a comment\nx, y | x y = y x ;\n  x^3\n");
  REQUIRE(p.relator_count() == 2);
  CHECK(p.relators[0] == w("x y x^-1 y^-1"));
  CHECK(p.relators[1] == w("x^3"));
  CHECK_NOTHROW(p.validate());
  CHECK(parse_presentation(format_presentation(p)) == p);
  CHECK_THROWS_AS((Presentation{{"x", "x"}, {}}).validate(), ValidationError);
  CHECK_THROWS_AS((Presentation{{"x"}, {Word{}}}).validate(), ValidationError);
  CHECK_THROWS_AS((Presentation{{"x"}, {Word{pos(1)}}}).validate(), ValidationError);
}

TEST_CASE("tails and suffixes") {
  Word r = w("x y^-1 x");
  CHECK(tail(r, 1) == r);
  CHECK(tail(r, 2) == w("y^-1 x"));
  CHECK(tail(r, 4) == Word{});
  CHECK(suffix_s(r, 1) == r);
  CHECK(suffix_s(r, 2) == w("x"));  // negative letter: skip it
  CHECK(suffix_s(r, 3) == w("x"));
  CHECK(occurrences(r, 0) == std::vector<std::size_t>{1, 3});
  CHECK(abelianize(r, 2) == ExponentVector{2, -1});
  CHECK(exponent(r, 1) == -1);
  CHECK(total_exponent(r) == 1);
}

TEST_CASE("reductions, powers, Dyck words") {
  CHECK(reduce(w("x y y^-1 x^-1 y")) == w("y"));
  CHECK(cyclically_reduce(w("y x^2 y^-1")) == w("x^2"));
  CHECK(is_proper_power(w("y x y x y^-1 y")));
  CHECK(!is_proper_power(w("x^2 y")));
  CHECK(is_proper_power(w("x^3")));
  CHECK(!is_proper_power(w("x")));
  CHECK(classify_strong_dyck(w("x^2 x^-1")) == DyckKind::Positive);
  CHECK(classify_strong_dyck(w("x x^-1 x")) == DyckKind::None);
  CHECK(classify_strong_dyck(w("x^-1 x^-1 x")) == DyckKind::Negative);
  CHECK(classify_strong_dyck(w("x")) == DyckKind::Positive);
  CHECK_THROWS(classify_strong_dyck(w("x y")));
  CHECK(x_shape(w("x y x^-1 y^2 x"), 0) == w("x x^-1 x"));
  CHECK(is_positive(w("x y^2")));
  CHECK(is_negative(w("y^-1")));
  CHECK(!is_positive(Word{}));
}

TEST_CASE("property: word algebra on random words") {
  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    Word a = random_word(rng, 3, 12);
    Word b = random_word(rng, 3, 12);
    CHECK(a.inverse().inverse() == a);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(reduce(a * a.inverse()).empty());
    CHECK(reduce(reduce(a)) == reduce(a));
    auto ab = abelianize(a * b, 3);
    auto aa = abelianize(a, 3);
    auto bb = abelianize(b, 3);
    for (std::size_t g = 0; g < 3; ++g) {
      CHECK(ab[g] == aa[g] + bb[g]);
    }
    auto c = abelianize(commutator(a, b), 3);
    CHECK(std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; }));
    std::size_t s = uniform_below(rng, a.size());
    CHECK(abelianize(rotate(a, s), 3) == aa);
    CHECK(rotate(rotate(a, s), (a.size() - s) % a.size()) == a);
    CHECK(cyclic_permutations(a).size() == a.size());
    for (std::size_t k = 1; k <= a.size(); ++k) {
      Word tk = tail(a, k);
      CHECK(tk.size() == a.size() - k + 1);
      Word sk = suffix_s(a, k);
      CHECK(sk.size() == tk.size() - (a.at(k).sign < 0 ? 1 : 0));
    }
    auto names = generator_names(3);
    CHECK(parse_word(format_word(a, names), names) == a);
  }
}

TEST_CASE("reorder and subpresentations") {
  auto p = parse_presentation("a, b, c | a b ; b c ; c a^2");
  auto q = reorder(p, {2, 0, 1}, {1, 2, 0});
  CHECK(q.generators == std::vector<std::string>{"c", "a", "b"});
  CHECK(q.relators[0] == Word{pos(2), pos(0)});  // old b c
  std::size_t count = 0, total = 0;
  for (auto sub : subpresentations(p)) {
    ++count;
    total += sub.relator_count();
  }
  CHECK(count == 8);
  CHECK(total == 12);
}

TEST_CASE("LOG presentations and Adian detection") {
  auto g = parse_log("vertices: a b c\na c b\nb a c\n");
  CHECK(g.edge_count() == 2);
  CHECK_NOTHROW(g.validate());
  CHECK(is_lot(g));
  auto p = log_to_presentation(g);
  CHECK(format_presentation(p) == "a, b, c | a c b^-1 c^-1 ; b a c^-1 a^-1\n");
  auto a = detect_adian(p);
  REQUIRE(a.has_value());
  CHECK(a->relations[0].lhs == Word{pos(0), pos(2)});
  CHECK(a->relations[0].rhs == Word{pos(2), pos(1)});
  CHECK(a->to_presentation() == p);
  CHECK(!detect_adian(parse_presentation("x, y | x y^-1 x")).has_value());
  CHECK(looks_like_log("vertices: a\n"));
  CHECK(!looks_like_log("x | x^2"));
  CHECK(parse_log(format_log(g)) == g);
  CHECK_THROWS_AS(parse_log("vertices: a b\na b q\n"), ParseError);
}

TEST_CASE("generators are deterministic and in range") {
  Rng a(42), b(42);
  for (int t = 0; t < 100; ++t) {
    CHECK(uniform_below(a, 7) == uniform_below(b, 7));
    auto x = uniform_between(a, -3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    uniform_between(b, -3, 3);
  }
  Rng c(5);
  for (int t = 0; t < 200; ++t) {
    auto g = random_lot(c, 1 + uniform_below(c, 8));
    CHECK(is_lot(g));
    CHECK_NOTHROW(g.validate());
    auto ad = random_adian(c, 3, 2, 4);
    CHECK_NOTHROW(ad.validate());
    for (const auto& rel : ad.relations) {
      CHECK(rel.lhs.size() == rel.rhs.size());
    }
    auto words = random_tower_words(c, 3, 4);
    for (const auto& x : words) {
      CHECK((is_positive(x) || is_negative(x)));
      CHECK(x.size() <= 4);
    }
  }
  CHECK(generator_names(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(generator_names(27)[0] == "x1");
}
