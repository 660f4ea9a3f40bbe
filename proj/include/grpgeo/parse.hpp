#pragma once

#include <string>
#include <vector>

#include "grpgeo/word.hpp"

namespace grpgeo {

// Recursive-descent parser for equation systems.
//
//   system := equation ((';' | '\n') equation)*
//   equation := word | word '=' word        (u = v reads as u v^-1 ~ 1)
//   word := term+
//   term := atom ('^' integer)?
//   atom := variable | constant | '[' word (',' word)+ ']' | '(' word ')'
//   variable := 'x' [1-9][0-9]*
//   constant := '\'' label '\''
//
// Bracketed lists are left-aligned iterated commutators. Labels resolve
// against the group's element labels with a g<i> index fallback.
class WordParser {
 public:
  WordParser(GroupPtr G, std::string text, int max_var = 0)
      : G_(std::move(G)), text_(std::move(text)), max_var_(max_var) {}

  std::vector<Word> parse_system() {
    std::vector<Word> out;
    skip_space(true);
    while (pos_ < text_.size()) {
      out.push_back(parse_equation());
      skip_space(false);
      if (pos_ < text_.size()) {
        if (text_[pos_] == ';' || text_[pos_] == '\n')
          ++pos_;
        else
          fail("expected ';' or newline between equations");
      }
      skip_space(true);
    }
    if (out.empty()) fail("empty system");
    return out;
  }

  Word parse_single() {
    skip_space(true);
    Word w = parse_equation();
    skip_space(true);
    if (pos_ < text_.size()) fail("trailing input after word");
    return w;
  }

 private:
  GroupPtr G_;
  std::string text_;
  std::size_t pos_ = 0;
  int max_var_;

  [[noreturn]] void fail(const std::string& msg) {
    raise(errc::parse_error, msg + " at position " + std::to_string(pos_));
  }

  // Inside a word only spaces and tabs are skippable; newlines separate
  // equations. The eat_newlines variant runs between equations.
  void skip_space(bool eat_newlines) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || (eat_newlines && (c == '\n' || c == ';')))
        ++pos_;
      else
        break;
    }
  }

  bool at_word_start() {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'x' || c == '\'' || c == '[' || c == '(' || c == '1';
  }

  Word parse_equation() {
    Word lhs = parse_word();
    skip_space(false);
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      skip_space(false);
      Word rhs = parse_word();
      return word_product(G_, lhs, word_inverse(G_, rhs));
    }
    return lhs;
  }

  Word parse_word() {
    skip_space(false);
    if (!at_word_start()) fail("expected a word");
    Word w = Word::identity();
    while (at_word_start()) {
      w = word_product(G_, w, parse_term());
      skip_space(false);
    }
    return w;
  }

  Word parse_term() {
    Word a = parse_atom();
    skip_space(false);
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space(false);
      long e = parse_int();
      return word_power(G_, a, e);
    }
    return a;
  }

  long parse_int() {
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  Word parse_atom() {
    char c = text_[pos_];
    if (c == '1') {
      // literal identity word
      ++pos_;
      return Word::identity();
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected variable index after 'x'");
      if (text_[start] == '0') fail("variable indices start at 1");
      long idx = std::stol(text_.substr(start, pos_ - start));
      if (max_var_ > 0 && idx > max_var_)
        raise(errc::variable_out_of_range,
              "x" + std::to_string(idx) + " exceeds arity " + std::to_string(max_var_));
      return Word::variable(static_cast<int>(idx));
    }
    if (c == '\'') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '\'') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated constant label");
      std::string lbl = text_.substr(start, pos_ - start);
      ++pos_;
      int idx = G_->find_label(lbl);
      if (idx < 0) raise(errc::unknown_label, "no element labeled '" + lbl + "'");
      return Word::constant(G_, static_cast<elem_t>(idx));
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      skip_space(false);
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Word> parts;
      parts.push_back(parse_word());
      skip_space(false);
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(parse_word());
        skip_space(false);
      }
      if (parts.size() < 2) fail("commutator needs at least two entries");
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return word_commutator_chain(G_, parts);
    }
    fail("unexpected character");
  }
};

inline std::vector<Word> parse_system(const GroupPtr& G, const std::string& text,
                                      int max_var = 0) {
  return WordParser(G, text, max_var).parse_system();
}

inline Word parse_word(const GroupPtr& G, const std::string& text, int max_var = 0) {
  return WordParser(G, text, max_var).parse_single();
}

}  // namespace grpgeo
