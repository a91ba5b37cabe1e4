#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ddb/presentation.hpp"

namespace ddb {

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

// Presentation text:   < a, b | a^2 b, b a b^-1 a >
// Factors are identifiers or parenthesized words, each with an optional
// signed integer exponent; '*' between factors is optional; "1" is the
// identity word; a relator may be an equation chain r = s = t, which is
// normalized to the relators r s^-1 and s t^-1.
class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    expect('<');
    std::vector<std::string> names;
    skip_ws();
    if (peek() != '|') {
      names.push_back(ident());
      while (skip_ws(), peek() == ',') {
        ++pos_;
        names.push_back(ident());
      }
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          fail("duplicate generator name '" + names[i] + "'");
    index_.clear();
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;

    expect('|');
    std::vector<Word> relators;
    skip_ws();
    if (peek() != '>') {
      relator_chain(relators);
      while (skip_ws(), peek() == ',') {
        ++pos_;
        relator_chain(relators);
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after '>'");
    return Presentation(std::move(names), std::move(relators));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail_at("expected integer", start);
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_word_end() {
    skip_ws();
    char c = peek();
    return c == ',' || c == '>' || c == '=' || c == ')' || c == '\0';
  }

  Word word() {
    Word w;
    bool first = true;
    while (!at_word_end()) {
      if (!first && peek() == '*') {
        ++pos_;
        skip_ws();
      }
      w = w * factor();
      first = false;
    }
    if (first) fail("expected a word");
    return w;
  }

  Word factor() {
    skip_ws();
    Word base;
    if (peek() == '(') {
      ++pos_;
      base = word();
      expect(')');
    } else if (peek() == '1') {
      ++pos_;
      base = Word();
    } else {
      std::size_t at = pos_;
      std::string name = ident();
      auto it = index_.find(name);
      if (it == index_.end())
        fail_at("relator uses undeclared generator '" + name + "'", at);
      base = Word::generator(it->second);
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  void relator_chain(std::vector<Word>& out) {
    Word lhs = word();
    skip_ws();
    if (peek() != '=') {
      out.push_back(std::move(lhs));
      return;
    }
    while (skip_ws(), peek() == '=') {
      ++pos_;
      Word rhs = word();
      out.push_back(lhs * rhs.inverse());
      lhs = std::move(rhs);
    }
  }
};

inline Presentation parse_presentation(std::string_view text) {
  return PresentationParser(text).parse();
}

inline std::string to_text(const Word& w,
                           const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << names.at(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

// Canonical text form; parse(to_text(p)) == p, and to_text(parse(s)) == s
// whenever s is already canonical.
inline std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    os << (i == 0 ? " " : ", ") << p.generator_names()[i];
  os << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    os << (i == 0 ? " " : ", ") << to_text(p.relators()[i], p.generator_names());
  os << " >";
  return os.str();
}

}  // namespace ddb
