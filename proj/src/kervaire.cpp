#include "drtest/kervaire.hpp"

#include <algorithm>
#include <stdexcept>

#include "drtest/itest.hpp"
#include "drtest/linear.hpp"

namespace drtest {

namespace {

RationalVector to_rational(const ExponentVector& e) {
  RationalVector out;
  out.reserve(e.size());
  for (auto x : e) {
    out.emplace_back(x);
  }
  return out;
}

void require_one_relator(const Presentation& p, const char* who) {
  p.validate();
  if (p.relator_count() != 1) {
    throw std::invalid_argument(std::string(who) + ": expected exactly one relator, got " +
                                std::to_string(p.relator_count()));
  }
  auto q = abelianize(p.relators[0], p.generator_count());
  if (std::any_of(q.begin(), q.end(), [](auto x) { return x != 0; })) {
    throw std::invalid_argument(std::string(who) +
                                ": relator has nonzero abelianization");
  }
}

}  // namespace

std::vector<OccurrencePoint> occurrence_cloud(const Word& r, std::size_t i, std::size_t n) {
  auto q = abelianize(r, n);
  if (std::any_of(q.begin(), q.end(), [](auto x) { return x != 0; })) {
    throw std::invalid_argument("occurrence_cloud: relator has nonzero abelianization");
  }
  std::vector<OccurrencePoint> out;
  for (auto k : occurrences(r, i)) {
    out.push_back({k, to_rational(abelianize(suffix_s(r, k), n))});
  }
  return out;
}

std::optional<HullWitness> hull_certificate(const Presentation& p, std::size_t generator,
                                            std::size_t position) {
  require_one_relator(p, "hull_certificate");
  auto cloud = occurrence_cloud(p.relators[0], generator, p.generator_count());
  auto it = std::find_if(cloud.begin(), cloud.end(),
                         [&](const OccurrencePoint& o) { return o.position == position; });
  if (it == cloud.end()) {
    throw std::invalid_argument("hull_certificate: no occurrence of the generator at position " +
                                std::to_string(position));
  }
  std::vector<RationalVector> points;
  std::size_t multiplicity = 0;
  for (const auto& o : cloud) {
    points.push_back(o.point);
    multiplicity += o.point == it->point ? 1 : 0;
  }
  if (multiplicity != 1) {
    return std::nullopt;
  }
  auto normal = extreme_normal(it->point, points);
  if (!normal) {
    return std::nullopt;
  }
  // The occurrence weights are <point, v>, so v = normal puts the unique
  // maximum of the generator's row at this occurrence.
  RationalVector negated = *normal;
  for (auto& c : negated) {
    c = -c;
  }
  for (const RationalVector& candidate : {*normal, negated}) {
    auto verdict = itest_fixed(p, candidate);
    if (verdict.status == Status::ProvenDR) {
      return HullWitness{generator, position, it->point, candidate, {},
                         std::get<VectorWitness>(verdict.witness)};
    }
  }
  throw std::logic_error("hull_certificate: extreme normal fails the I-test");
}

Verdict hull_test(const Presentation& p) {
  require_one_relator(p, "hull_test");
  Verdict out;
  out.test = "hull";
  std::optional<HullWitness> first;
  std::vector<std::pair<std::size_t, RationalVector>> candidates;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    for (const auto& o : occurrence_cloud(p.relators[0], i, p.generator_count())) {
      auto w = hull_certificate(p, i, o.position);
      if (!w) {
        continue;
      }
      candidates.emplace_back(o.position, o.point);
      if (!first) {
        first = std::move(w);
      }
    }
  }
  if (!first) {
    out.status = Status::Inconclusive;
    out.note = "no extreme point of multiplicity one in any occurrence cloud";
    return out;
  }
  first->candidates = std::move(candidates);
  out.status = Status::ProvenDR;
  out.note = "extreme point " + to_string(first->point) + " for generator " +
             p.generators[first->generator] + " at position " + std::to_string(first->position) +
             "; hence Kervaire";
  out.witness = std::move(*first);
  return out;
}

std::vector<std::pair<Letter, std::size_t>> syllables(const Word& w) {
  std::vector<std::pair<Letter, std::size_t>> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().first == l) {
      ++out.back().second;
    } else {
      out.emplace_back(l, 1);
    }
  }
  return out;
}

Verdict dyck_test(const Presentation& p) {
  if (p.generator_count() != 2) {
    throw std::invalid_argument("dyck_test: expected two generators, got " +
                                std::to_string(p.generator_count()));
  }
  require_one_relator(p, "dyck_test");
  const Word& w = p.relators[0];
  Verdict out;
  out.test = "dyck";
  for (std::size_t x = 0; x < 2; ++x) {
    std::size_t y = 1 - x;
    for (std::size_t start = 0; start < w.size(); ++start) {
      Word rotated = rotate(w, start);
      auto syl = syllables(rotated);
      std::size_t n = syl.size();
      if (n < 2 || syl[0].first.generator != x || syl[n - 2].first.generator != x ||
          syl[n - 1].first.generator != y) {
        continue;
      }
      auto kind = classify_strong_dyck(x_shape(rotated, x));
      if (kind == DyckKind::None) {
        continue;
      }
      out.status = Status::ProvenDR;
      out.note = "rotation at letter " + std::to_string(start + 1) + " with " +
                 std::to_string(n) + " syllables; hence Kervaire";
      out.witness = DyckWitness{start, x, y, kind == DyckKind::Negative, rotated, n};
      return out;
    }
  }
  out.status = Status::Inconclusive;
  out.note = "no rotation satisfies the strong Dyck and syllable conditions";
  return out;
}

Word build_tower(const std::vector<Word>& words, bool validate) {
  Word w = commutator(Word{pos(0)}, Word{pos(1)});
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& u = words[i];
    if (validate && !is_positive(u) && !is_negative(u)) {
      throw std::invalid_argument("build_tower: word " + std::to_string(i + 1) +
                                  " is empty or mixes signs");
    }
    if (u.alphabet_bound() > 2) {
      throw std::invalid_argument("build_tower: words must use x and y only");
    }
    w = commutator(u, w);
  }
  return w;
}

}  // namespace drtest
