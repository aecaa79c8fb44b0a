#include "drtest/itest.hpp"

#include <stdexcept>

#include "drtest/text.hpp"

namespace drtest {

std::string to_string(Status s) {
  switch (s) {
    case Status::ProvenDR:
      return "ProvenDR";
    case Status::ProvenAspherical:
      return "ProvenAspherical";
    case Status::Inconclusive:
      return "Inconclusive";
    case Status::Inapplicable:
      return "Inapplicable";
  }
  return "?";
}

std::string to_string(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::None:
      return "";
    case InconclusiveReason::Exhausted:
      return "exhausted";
    case InconclusiveReason::Budget:
      return "budget";
  }
  return "?";
}

Verdict itest_fixed(const Presentation& p, const RationalVector& v) {
  if (v.size() != p.generator_count()) {
    throw std::invalid_argument("itest: vector has dimension " + std::to_string(v.size()) +
                                ", expected " + std::to_string(p.generator_count()));
  }
  Verdict out;
  out.test = "itest";
  if (p.generator_count() < p.relator_count()) {
    out.status = Status::Inapplicable;
    out.note = "fewer generators than relators";
    return out;
  }
  if (!orthogonal_to_relators(p, v)) {
    out.status = Status::Inapplicable;
    out.note = "vector " + to_string(v) + " is not orthogonal to every relator";
    return out;
  }
  auto m = weight_matrix(p, v);
  if (auto good = is_good(m)) {
    out.status = Status::ProvenDR;
    out.note = "weight matrix is good for " + to_string(v);
    out.witness = VectorWitness{v, std::move(*good)};
  } else {
    out.status = Status::Inconclusive;
    out.note = "weight matrix is not good for " + to_string(v);
  }
  return out;
}

std::vector<EquationTerm> equation_terms(const Presentation& p, std::size_t generator) {
  std::vector<EquationTerm> out;
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    const Word& r = p.relators[j];
    for (auto k : occurrences(r, generator)) {
      out.push_back({j, k, suffix_s(r, k), r.at(k).sign});
    }
  }
  return out;
}

std::string format_equation(const Presentation& p, std::size_t generator) {
  auto terms = equation_terms(p, generator);
  if (terms.empty()) {
    return "0 = 0";
  }
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t == 0) {
      out += term.sign > 0 ? "" : "-";
    } else {
      out += term.sign > 0 ? " + " : " - ";
    }
    std::string suffix = term.suffix.empty() ? "" : " " + format_word(term.suffix, p.generators);
    out += "n^" + std::to_string(term.relator + 1) + "_{g" + suffix + "}";
  }
  return out + " = 0";
}

}  // namespace drtest
