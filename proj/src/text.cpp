#include "drtest/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace drtest {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { Ident, Int, Caret, Star, Comma, Semicolon, Bar, LBracket, RBracket, LParen,
                 RParen, Equals, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (i_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = text_[i_];
    if (ident_start(c)) {
      std::size_t start = i_;
      while (i_ < text_.size() && ident_char(text_[i_])) {
        bump();
      }
      current_.kind = Tok::Ident;
      current_.text = std::string(text_.substr(start, i_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t start = i_;
      bump();
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        bump();
      }
      current_.kind = Tok::Int;
      current_.text = std::string(text_.substr(start, i_ - start));
      return;
    }
    static const std::map<char, Tok> punct = {
        {'^', Tok::Caret},    {'*', Tok::Star},     {',', Tok::Comma},  {';', Tok::Semicolon},
        {'|', Tok::Bar},      {'[', Tok::LBracket}, {']', Tok::RBracket}, {'(', Tok::LParen},
        {')', Tok::RParen},   {'=', Tok::Equals}};
    auto it = punct.find(c);
    if (it == punct.end()) {
      throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }
    current_.kind = it->second;
    current_.text = std::string(1, c);
    bump();
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') {
          bump();
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class WordParser {
 public:
  WordParser(Lexer& lex, const std::vector<std::string>& generators) : lex_(lex) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      index_[generators[i]] = i;
    }
  }

  /// Parses terms until a token that cannot start one.
  Word word() {
    Word out;
    bool first = true;
    while (true) {
      auto kind = lex_.peek().kind;
      if (kind == Tok::Star) {
        if (first) {
          lex_.fail(lex_.peek(), "'*' before any term");
        }
        lex_.take();
        if (!starts_term(lex_.peek().kind)) {
          lex_.fail(lex_.peek(), "expected a term after '*'");
        }
        continue;
      }
      if (!starts_term(kind)) {
        return out;
      }
      out *= term();
      first = false;
    }
  }

 private:
  static bool starts_term(Tok kind) {
    return kind == Tok::Ident || kind == Tok::LBracket || kind == Tok::LParen;
  }

  Word term() {
    Token t = lex_.take();
    Word base;
    if (t.kind == Tok::Ident) {
      auto it = index_.find(t.text);
      if (it == index_.end()) {
        lex_.fail(t, "undeclared generator '" + t.text + "'");
      }
      base = Word{pos(it->second)};
    } else if (t.kind == Tok::LBracket) {
      Word a = word();
      expect(Tok::Comma, "',' inside commutator");
      Word b = word();
      expect(Tok::RBracket, "']' closing commutator");
      if (a.empty() || b.empty()) {
        lex_.fail(t, "commutator with an empty entry");
      }
      base = commutator(a, b);
    } else {
      base = word();
      expect(Tok::RParen, "')'");
      if (base.empty()) {
        lex_.fail(t, "empty group");
      }
    }
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token k = lex_.take();
      if (k.kind != Tok::Int) {
        lex_.fail(k, "expected an integer exponent after '^'");
      }
      int e = 0;
      try {
        e = std::stoi(k.text);
      } catch (const std::exception&) {
        lex_.fail(k, "bad exponent '" + k.text + "'");
      }
      if (e == 0) {
        lex_.fail(k, "exponent must be nonzero");
      }
      return power(base, e);
    }
    return base;
  }

  void expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) {
      lex_.fail(lex_.peek(), "expected " + what);
    }
    lex_.take();
  }

  Lexer& lex_;
  std::map<std::string, std::size_t> index_;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Lexer lex(text);
  WordParser parser(lex, generators);
  Word w = parser.word();
  if (lex.peek().kind != Tok::End) {
    lex.fail(lex.peek(), "unexpected " + describe(lex.peek()));
  }
  return w;
}

Presentation parse_presentation(std::string_view text) {
  Lexer lex(text);
  Presentation p;
  std::map<std::string, Token> declared;
  if (lex.peek().kind != Tok::Bar) {
    while (true) {
      Token t = lex.take();
      if (t.kind != Tok::Ident) {
        lex.fail(t, "expected a generator name, found " + describe(t));
      }
      if (declared.count(t.text) != 0) {
        lex.fail(t, "duplicate generator '" + t.text + "'");
      }
      declared[t.text] = t;
      p.generators.push_back(t.text);
      if (lex.peek().kind == Tok::Comma) {
        lex.take();
        continue;
      }
      break;
    }
  }
  if (lex.peek().kind != Tok::Bar) {
    lex.fail(lex.peek(), "expected '|' after the generator list, found " + describe(lex.peek()));
  }
  lex.take();
  WordParser parser(lex, p.generators);
  if (lex.peek().kind == Tok::End) {
    return p;
  }
  while (true) {
    Token start = lex.peek();
    Word lhs = parser.word();
    if (lex.peek().kind == Tok::Equals) {
      Token eq = lex.take();
      Word rhs = parser.word();
      if (lhs.empty() || rhs.empty()) {
        lex.fail(eq, "relation with an empty side");
      }
      lhs *= rhs.inverse();
    }
    if (lhs.empty()) {
      lex.fail(start, "empty relator");
    }
    p.relators.push_back(std::move(lhs));
    Token sep = lex.take();
    if (sep.kind == Tok::End) {
      break;
    }
    if (sep.kind != Tok::Semicolon) {
      lex.fail(sep, "expected ';' or end of input, found " + describe(sep));
    }
  }
  return p;
}

namespace {

struct LineToken {
  std::string text;
  std::size_t column;
};

std::vector<LineToken> split_line(const std::string& line) {
  std::vector<LineToken> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) {
    return false;
  }
  for (char c : s) {
    if (!ident_char(c)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Log parse_log(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Log g;
  std::map<std::string, std::size_t> index;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_line(line);
    if (tokens.empty()) {
      continue;
    }
    if (!have_header) {
      std::string head = tokens[0].text;
      std::size_t first_name = 1;
      if (head == "vertices") {
        if (tokens.size() < 2 || tokens[1].text.rfind(':', 0) != 0) {
          throw ParseError(line_no, tokens[0].column, "expected 'vertices:'");
        }
        tokens[1].text.erase(0, 1);
        tokens[1].column += 1;
        if (tokens[1].text.empty()) {
          first_name = 2;
        }
      } else if (head.rfind("vertices:", 0) == 0) {
        tokens[0].text.erase(0, 9);
        tokens[0].column += 9;
        first_name = tokens[0].text.empty() ? 1 : 0;
      } else {
        throw ParseError(line_no, tokens[0].column, "expected a 'vertices:' header");
      }
      for (std::size_t t = first_name; t < tokens.size(); ++t) {
        const auto& name = tokens[t];
        if (!valid_name(name.text)) {
          throw ParseError(line_no, name.column, "bad vertex name '" + name.text + "'");
        }
        if (index.count(name.text) != 0) {
          throw ParseError(line_no, name.column, "duplicate vertex '" + name.text + "'");
        }
        index[name.text] = g.vertices.size();
        g.vertices.push_back(name.text);
      }
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, tokens[0].column,
                       "an edge line needs exactly three vertices: initial label terminal");
    }
    std::size_t ids[3];
    for (std::size_t t = 0; t < 3; ++t) {
      auto it = index.find(tokens[t].text);
      if (it == index.end()) {
        throw ParseError(line_no, tokens[t].column,
                         "undeclared vertex '" + tokens[t].text + "'");
      }
      ids[t] = it->second;
    }
    g.edges.push_back({ids[0], ids[2], ids[1]});
  }
  if (!have_header) {
    throw ParseError(line_no + 1, 1, "missing 'vertices:' header");
  }
  return g;
}

bool looks_like_log(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = split_line(line);
    if (!tokens.empty()) {
      return tokens[0].text.rfind("vertices", 0) == 0;
    }
  }
  return false;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) {
      ++run;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += names.at(w[i].generator);
    long e = static_cast<long>(run) * w[i].sign;
    if (e != 1) {
      out += '^' + std::to_string(e);
    }
    i += run;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out += (i > 0 ? ", " : "") + p.generators[i];
  }
  out += p.generators.empty() ? "|" : " |";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    out += (j > 0 ? " ; " : " ") + format_word(p.relators[j], p.generators);
  }
  return out + "\n";
}

std::string format_log(const Log& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices) {
    out += ' ' + v;
  }
  out += '\n';
  for (const auto& e : g.edges) {
    out += g.vertices[e.init] + ' ' + g.vertices[e.label] + ' ' + g.vertices[e.terminal] + '\n';
  }
  return out;
}

}  // namespace drtest
