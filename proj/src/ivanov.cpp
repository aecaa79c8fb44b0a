#include "drtest/ivanov.hpp"

#include <algorithm>
#include <stdexcept>

#include "drtest/weight_matrix.hpp"

namespace drtest {

namespace {

using boost::multiprecision::mpz_int;

mpz_int floor_q(const Rational& q) {
  mpz_int n = boost::multiprecision::numerator(q);
  mpz_int d = boost::multiprecision::denominator(q);  // > 0
  mpz_int f = n / d;                                   // truncates toward zero
  if (n < 0 && f * d != n) {
    f -= 1;
  }
  return f;
}

mpz_int ceil_q(const Rational& q) { return -floor_q(-q); }

std::int64_t to_int64(const mpz_int& z) {
  if (z > mpz_int(INT64_MAX) || z < mpz_int(INT64_MIN)) {
    throw std::overflow_error("perturbation bound does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

}  // namespace

std::vector<std::int64_t> ivanov_sequence(const Word& r, std::size_t x) {
  auto occ = occurrences(r, x);
  if (occ.empty()) {
    throw std::invalid_argument("ivanov_sequence: generator does not occur in the word");
  }
  std::vector<std::int64_t> out;
  for (auto k : occ) {
    out.push_back(exponent(suffix_s(r, k), x));
  }
  return out;
}

DistinguishedPermutation distinguished_cyclic_perm(const Word& r, std::size_t x) {
  std::int64_t beta = exponent(r, x);
  if (beta == 0) {
    throw std::invalid_argument("distinguished_cyclic_perm: exponent sum of the generator is 0");
  }
  DistinguishedPermutation out;
  out.inverted = beta < 0;
  Word w = out.inverted ? r.inverse() : r;
  out.beta = out.inverted ? -beta : beta;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w[s] != pos(x)) {
      continue;
    }
    Word rotated = rotate(w, s);
    auto seq = ivanov_sequence(rotated, x);
    if (std::all_of(seq.begin() + 1, seq.end(), [&](auto a) { return a < out.beta; })) {
      out.start = s + 1;
      out.word = std::move(rotated);
      out.sequence = std::move(seq);
      return out;
    }
  }
  throw std::logic_error("distinguished_cyclic_perm: no qualifying rotation");
}

Perturbation perturbation_bound(const Presentation& q, const Word& r, std::size_t index,
                                const RationalVector& v) {
  q.validate();
  const std::size_t n = q.generator_count();
  if (v.size() != n) {
    throw std::invalid_argument("perturbation_bound: vector has dimension " +
                                std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
  if (index >= n || v[index] == 0) {
    throw std::invalid_argument("perturbation_bound: index must name a generator with v_i != 0");
  }
  if (!orthogonal_to_relators(q, v)) {
    throw std::invalid_argument("perturbation_bound: vector is not orthogonal to the relators");
  }
  if (r.alphabet_bound() > n + 1) {
    throw std::invalid_argument("perturbation_bound: relator uses unknown generators");
  }
  Perturbation out;
  out.rotation = distinguished_cyclic_perm(r, n);
  out.index = index;
  out.vector = v;
  out.c = perturbed_weights(out, 0);

  const Rational beta(out.rotation.beta);
  const auto& a = out.rotation.sequence;
  // w_1 - w_j = (c_1 - c_j) - t (beta - a_j) with beta - a_j > 0, so the first
  // weight wins every comparison for t < R_j and loses it for t > R_j.
  for (std::size_t j = 1; j < a.size(); ++j) {
    Rational rj = (out.c[0] - out.c[j]) / (beta - Rational(a[j]));
    if (!out.has_window) {
      out.t_low = out.t_high = rj;
      out.has_window = true;
    } else {
      out.t_low = std::min(out.t_low, rj);
      out.t_high = std::max(out.t_high, rj);
    }
  }
  if (out.has_window) {
    Rational lo = out.t_low * beta / v[index];
    Rational hi = out.t_high * beta / v[index];
    if (lo > hi) {
      std::swap(lo, hi);
    }
    mpz_int first = ceil_q(lo);
    mpz_int last = floor_q(hi);
    if (first <= last) {
      mpz_int worst = std::max(abs(first), abs(last));
      out.m0 = to_int64(worst) + 1;
    }
  }
  return out;
}

std::vector<Rational> perturbed_weights(const Perturbation& pert, std::int64_t m) {
  const std::size_t n = pert.vector.size();
  const Word& rp = pert.rotation.word;
  Word w;
  for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k) {
    w.push_back({pert.index, m < 0 ? -1 : 1});
  }
  w *= rp;
  RationalVector full = pert.vector;
  full.push_back(0);
  // alpha_M makes the full vector orthogonal to x_i^M r'.
  full[n] = -weight(w, full) / Rational(pert.rotation.beta);
  std::vector<Rational> out;
  for (auto k : occurrences(w, n)) {
    out.push_back(weight(suffix_s(w, k), full));
  }
  return out;
}

bool unique_extremum_at_first(const std::vector<Rational>& weights) {
  if (weights.empty()) {
    return false;
  }
  bool above = true;
  bool below = true;
  for (std::size_t j = 1; j < weights.size(); ++j) {
    above = above && weights[0] > weights[j];
    below = below && weights[0] < weights[j];
  }
  return above || below;
}

Presentation perturbed_presentation(const Presentation& q, const std::string& extra,
                                    const Perturbation& pert, std::int64_t m) {
  Presentation out = q;
  out.generators.push_back(extra);
  Word w;
  for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k) {
    w.push_back({pert.index, m < 0 ? -1 : 1});
  }
  w *= pert.rotation.word;
  out.relators.push_back(std::move(w));
  out.validate();
  return out;
}

}  // namespace drtest
