#include "drtest/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drtest {

const Letter& Word::at(std::size_t position) const {
  if (position < 1 || position > letters_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(letters_.size()));
  }
  return letters_[position - 1];
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

std::size_t Word::alphabet_bound() const {
  std::size_t bound = 0;
  for (const auto& l : letters_) {
    bound = std::max(bound, l.generator + 1);
  }
  return bound;
}

Word operator*(Word a, const Word& b) {
  a *= b;
  return a;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? w.inverse() : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) {
    out *= base;
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclically_reduce(const Word& w) {
  auto letters = reduce(w).letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word tail(const Word& w, std::size_t k) {
  if (k < 1 || k > w.size() + 1) {
    throw std::out_of_range("tail index " + std::to_string(k) + " outside 1.." +
                            std::to_string(w.size() + 1));
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(k - 1), w.end()));
}

Word suffix_s(const Word& w, std::size_t k) {
  const auto& letter = w.at(k);
  return tail(w, letter.sign > 0 ? k : k + 1);
}

std::vector<std::size_t> occurrences(const Word& w, std::size_t generator) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].generator == generator) {
      out.push_back(i + 1);
    }
  }
  return out;
}

ExponentVector abelianize(const Word& w, std::size_t n) {
  ExponentVector out(n, 0);
  for (const auto& l : w) {
    if (l.generator >= n) {
      throw std::out_of_range("generator index outside the alphabet");
    }
    out[l.generator] += l.sign;
  }
  return out;
}

std::int64_t exponent(const Word& w, std::size_t generator) {
  std::int64_t e = 0;
  for (const auto& l : w) {
    if (l.generator == generator) {
      e += l.sign;
    }
  }
  return e;
}

std::int64_t total_exponent(const Word& w) {
  std::int64_t e = 0;
  for (const auto& l : w) {
    e += l.sign;
  }
  return e;
}

Word rotate(const Word& w, std::size_t start) {
  if (w.empty()) {
    return w;
  }
  if (start >= w.size()) {
    throw std::out_of_range("rotation start outside the word");
  }
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return Word(std::move(out));
}

std::vector<Word> cyclic_permutations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(rotate(w, i));
  }
  return out;
}

Word x_shape(const Word& w, std::size_t generator) {
  Word out;
  for (const auto& l : w) {
    if (l.generator == generator) {
      out.push_back(l);
    }
  }
  return out;
}

DyckKind classify_strong_dyck(const Word& u) {
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i].generator != u[0].generator) {
      throw std::invalid_argument("strong Dyck classification needs a one-generator word");
    }
  }
  bool all_positive = true;
  bool all_negative = true;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    sum += u[i].sign;
    all_positive = all_positive && sum > 0;
    all_negative = all_negative && sum < 0;
  }
  if (all_positive) {
    return DyckKind::Positive;
  }
  return all_negative ? DyckKind::Negative : DyckKind::None;
}

bool is_proper_power(const Word& w) {
  auto c = cyclically_reduce(w);
  const std::size_t len = c.size();
  for (std::size_t period = 1; period < len; ++period) {
    if (len % period != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = period; i < len && periodic; ++i) {
      periodic = c[i] == c[i - period];
    }
    if (periodic) {
      return true;
    }
  }
  return false;
}

bool is_positive(const Word& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.sign > 0; });
}

bool is_negative(const Word& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.sign < 0; });
}

}  // namespace drtest
