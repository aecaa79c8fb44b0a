#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

// Free-group words over a numbered alphabet. Words are literal letter
// sequences: nothing here reduces implicitly. Positions in the public API are
// 1-based.

namespace drtest {

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter pos(std::size_t g) { return {g, 1}; }
inline Letter neg(std::size_t g) { return {g, -1}; }

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 0-based element access.
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  /// 1-based, bounds-checked.
  const Letter& at(std::size_t position) const;

  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& other);

  /// Letters reversed with signs flipped; no cancellation.
  Word inverse() const;

  /// Largest generator index used plus one (0 for the empty word).
  std::size_t alphabet_bound() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word operator*(Word a, const Word& b);

using ExponentVector = std::vector<std::int64_t>;

Word power(const Word& w, int k);
/// [a, b] = a b a^-1 b^-1, unreduced.
Word commutator(const Word& a, const Word& b);

Word reduce(const Word& w);
Word cyclically_reduce(const Word& w);

/// w^(k): w with its first k-1 letters removed; k ranges over 1..len(w)+1.
Word tail(const Word& w, std::size_t k);

/// s(k, w): w^(k) when the k-th letter is positive, w^(k+1) when negative.
Word suffix_s(const Word& w, std::size_t k);

std::vector<std::size_t> occurrences(const Word& w, std::size_t generator);

ExponentVector abelianize(const Word& w, std::size_t n);

/// Signed count of one generator.
std::int64_t exponent(const Word& w, std::size_t generator);

/// Sum of all letter signs.
std::int64_t total_exponent(const Word& w);

/// The rotation starting at 0-based letter index `start`.
Word rotate(const Word& w, std::size_t start);

std::vector<Word> cyclic_permutations(const Word& w);

Word x_shape(const Word& w, std::size_t generator);

enum class DyckKind { Positive, Negative, None };

/// Strong Dyck classification of a one-generator word: every nonempty proper
/// prefix has positive (resp. negative) exponent. Words of length <= 1 have no
/// such prefix and classify as Positive. Throws on a multi-generator word.
DyckKind classify_strong_dyck(const Word& u);

/// True when the cyclic reduction of w is u^k with k >= 2.
bool is_proper_power(const Word& w);

/// True when every letter is positive (resp. negative) and w is nonempty.
bool is_positive(const Word& w);
bool is_negative(const Word& w);

}  // namespace drtest
