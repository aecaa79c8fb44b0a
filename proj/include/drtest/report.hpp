#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drtest/presentation.hpp"
#include "drtest/weight_matrix.hpp"
#include "drtest/whitehead.hpp"
#include "drtest/witness.hpp"

namespace drtest {

inline constexpr const char* kVersion = "0.3.0";

using Json = nlohmann::ordered_json;

/// Rationals are written as strings ("p" or "p/q").
Json to_json(const RationalVector& v);
Json to_json(const Presentation& p);
Json to_json(const Log& g);
Json witness_json(const Witness& w, const Presentation& p);
Json to_json(const WeightTestResult& r);

struct ReportEntry {
  Verdict verdict;
  double milliseconds = 0;
  bool budget_hit = false;
  bool verified = true;
  std::string verify_note;
};

struct Report {
  std::string input;  // file name or a short description
  std::string kind;   // "presentation", "log" or "adian"
  Presentation presentation;
  std::optional<Log> log;
  std::optional<std::uint64_t> seed;
  std::vector<ReportEntry> entries;
  std::optional<WeightTestResult> weight_test;
};

/// `with_timing` false drops the only nondeterministic fields.
Json to_json(const Report& r, bool with_timing = true);

/// Rows are generators, columns relators, cells the weight multisets, e.g.
///        r1        r2
///   x  {0,-1}    {-3}
std::string format_weight_matrix(const Presentation& p, const WeightMatrix& m);

/// Multi-line description of a verdict and its witness.
std::string format_verdict(const Verdict& v, const Presentation& p);

std::string format_report(const Report& r);

}  // namespace drtest
