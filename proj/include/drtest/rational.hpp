#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace drtest {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// "p" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Comma-separated list, e.g. "1,0,-1/2,2".
RationalVector parse_rational_vector(std::string_view text);

std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

bool is_zero(const RationalVector& v);

/// Scales a nonzero vector to the primitive integer vector on the same ray.
RationalVector primitive(const RationalVector& v);

}  // namespace drtest
