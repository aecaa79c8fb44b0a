#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/word.hpp"

// Text formats.
//
// Words: terms separated by whitespace or '*'. A term is `name`, `name^k`
// (k a nonzero integer), a commutator `[u, v]` = u v u^-1 v^-1, or a group
// `(u)`; brackets and groups also take `^k`.
//
// Presentation (.pres): `x, y | r1 ; r2 ; ...` where each relator is a word or
// an equation `U = V` (stored as U V^-1). `#` starts a comment. Relators may
// continue over several lines.
//
// LOG (.log): a `vertices: a b c` line, then one edge per line written as
// `initial label terminal`.

namespace drtest {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

Word parse_word(std::string_view text, const std::vector<std::string>& generators);

Presentation parse_presentation(std::string_view text);

Log parse_log(std::string_view text);

/// True when the first meaningful line is a `vertices:` header.
bool looks_like_log(std::string_view text);

/// Run-length spelling, e.g. "x^3 y x^-2". The empty word is "".
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// One line, relators separated by " ; ", newline-terminated.
std::string format_presentation(const Presentation& p);

std::string format_log(const Log& g);

}  // namespace drtest
