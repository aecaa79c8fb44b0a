#include "drtest/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace drtest {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) {
    return mp::numerator(q).str();
  }
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

mp::mpz_int parse_integer(std::string_view s) {
  if (s.front() == '+') {
    s.remove_prefix(1);
  }
  return mp::mpz_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(s));
  }
  auto num = trim(s.substr(0, slash));
  auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  auto d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

RationalVector primitive(const RationalVector& v) {
  if (is_zero(v)) {
    return v;
  }
  mp::mpz_int den_lcm = 1;
  for (const auto& x : v) {
    den_lcm = mp::lcm(den_lcm, mp::mpz_int(mp::denominator(x)));
  }
  mp::mpz_int num_gcd = 0;
  for (const auto& x : v) {
    mp::mpz_int scaled = mp::numerator(x) * (den_lcm / mp::denominator(x));
    num_gcd = mp::gcd(num_gcd, mp::abs(scaled));
  }
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.push_back(x * Rational(den_lcm) / Rational(num_gcd));
  }
  return out;
}

}  // namespace drtest
