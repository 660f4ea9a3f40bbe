#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "grpgeo/group.hpp"

namespace grpgeo {

// One letter of a word in G[x1..xn]: either a variable power x_i^exp
// (var >= 1, exp != 0) or a coefficient from G (var == 0, elem != 0;
// identity coefficients vanish under reduction).
struct Letter {
  int var = 0;        // 0 for a constant, else 1-based variable index
  long exp = 0;       // nonzero for variables
  elem_t elem = 0;    // constant value when var == 0

  bool is_var() const { return var != 0; }
  bool operator==(const Letter& o) const {
    return var == o.var && exp == o.exp && elem == o.elem;
  }
};

// A word in reduced normal form: no identity constants, no zero variable
// powers, adjacent letters never share a variable, adjacent constants are
// merged. Reduction happens on construction, so equality is syntactic
// equality of normal forms (free-product normal form).
class Word {
 public:
  Word() = default;

  static Word from_letters(const GroupPtr& G, std::vector<Letter> letters) {
    Word w;
    w.letters_ = normalize(G, std::move(letters));
    return w;
  }

  static Word identity() { return Word{}; }

  static Word variable(int idx, long exp = 1) {
    Word w;
    if (exp != 0) w.letters_.push_back({idx, exp, 0});
    return w;
  }

  static Word constant(const GroupPtr& G, elem_t g) {
    Word w;
    if (g != G->identity()) w.letters_.push_back({0, 0, g});
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  // Highest variable index that occurs, 0 if none.
  int max_variable() const {
    int m = 0;
    for (const auto& l : letters_)
      if (l.var > m) m = l.var;
    return m;
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Stack-based reduction to normal form; a single pass with backtracking
  // at join points handles cascading cancellations.
  static std::vector<Letter> normalize(const GroupPtr& G, std::vector<Letter> in) {
    std::vector<Letter> out;
    for (auto& l : in) {
      if (l.is_var() && l.exp == 0) continue;
      if (!l.is_var() && l.elem == G->identity()) continue;
      out.push_back(l);
      while (out.size() >= 2) {
        Letter& a = out[out.size() - 2];
        Letter& b = out.back();
        if (a.is_var() && b.is_var() && a.var == b.var) {
          a.exp += b.exp;
          out.pop_back();
          if (a.exp == 0) out.pop_back();
        } else if (!a.is_var() && !b.is_var()) {
          a.elem = G->mul(a.elem, b.elem);
          out.pop_back();
          if (a.elem == G->identity()) out.pop_back();
        } else {
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

inline Word word_product(const GroupPtr& G, const Word& u, const Word& v) {
  std::vector<Letter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(G, std::move(ls));
}

inline Word word_inverse(const GroupPtr& G, const Word& u) {
  std::vector<Letter> ls;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    Letter l = *it;
    if (l.is_var())
      l.exp = -l.exp;
    else
      l.elem = G->inv(l.elem);
    ls.push_back(l);
  }
  return Word::from_letters(G, std::move(ls));
}

inline Word word_power(const GroupPtr& G, const Word& u, long k) {
  Word base = k < 0 ? word_inverse(G, u) : u;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Word r = Word::identity();
  while (n) {
    if (n & 1) r = word_product(G, r, base);
    base = word_product(G, base, base);
    n >>= 1;
  }
  return r;
}

// [u, v] = u^-1 v^-1 u v.
inline Word word_commutator(const GroupPtr& G, const Word& u, const Word& v) {
  return word_product(G, word_product(G, word_inverse(G, u), word_inverse(G, v)),
                      word_product(G, u, v));
}

// Left-aligned iterated commutator [w1, ..., wk] = [[w1, ..., w_{k-1}], wk].
inline Word word_commutator_chain(const GroupPtr& G, const std::vector<Word>& ws) {
  if (ws.size() < 2) raise(errc::bad_parameter, "commutator needs at least two arguments");
  Word acc = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) acc = word_commutator(G, acc, ws[i]);
  return acc;
}

// Evaluates a word at a point (x1, ..., xn) of G^n. Variables beyond the
// point's length are an error.
inline elem_t evaluate(const GroupPtr& G, const Word& w, const std::vector<elem_t>& point) {
  elem_t r = G->identity();
  for (const auto& l : w.letters()) {
    if (l.is_var()) {
      if (l.var > static_cast<int>(point.size()))
        raise(errc::variable_out_of_range,
              "word uses x" + std::to_string(l.var) + " but point has arity " +
                  std::to_string(point.size()));
      r = G->mul(r, G->pow(point[l.var - 1], l.exp));
    } else {
      r = G->mul(r, l.elem);
    }
  }
  add_work(w.letters().size() + 1);
  return r;
}

inline std::string word_to_string(const GroupPtr& G, const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const auto& l : w.letters()) {
    if (!s.empty()) s += " ";
    if (l.is_var()) {
      s += "x" + std::to_string(l.var);
      if (l.exp != 1) s += "^" + std::to_string(l.exp);
    } else {
      s += "'" + G->label(l.elem) + "'";
    }
  }
  return s;
}

// Least common multiple of all element orders.
inline long group_exponent(const GroupPtr& G) {
  long l = 1;
  for (int x = 0; x < G->order(); ++x) {
    long o = G->element_order(elem_t(x));
    l = l / std::gcd(l, o) * o;
  }
  return l;
}

// All reduced words in G[x1..xn] of at most the given letter count, in a
// fixed order: shorter first, and letters ranked variables-before-
// constants with exponents 1, -1, 2, -2, ... up to the group exponent
// (reduction merges same-variable neighbors, so every needed power must
// exist as a single letter). The empty word comes first. With
// coefficients disabled only variable letters are used.
inline std::vector<Word> enumerate_words(const GroupPtr& G, int n_vars, int max_letters,
                                         bool with_coefficients, const Config& cfg = Config{}) {
  std::vector<Letter> alphabet;
  const long exp_span = group_exponent(G);
  for (int v = 1; v <= n_vars; ++v)
    for (long e = 1; e <= exp_span; ++e) {
      alphabet.push_back({v, e, 0});
      alphabet.push_back({v, -e, 0});
    }
  if (with_coefficients)
    for (int g = 1; g < G->order(); ++g) alphabet.push_back({0, 0, elem_t(g)});

  std::vector<Word> out;
  std::vector<std::vector<Letter>> frontier{{}};
  out.push_back(Word::identity());
  for (int len = 1; len <= max_letters; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& stem : frontier)
      for (const auto& l : alphabet) {
        std::vector<Letter> cand = stem;
        cand.push_back(l);
        auto norm = Word::normalize(G, cand);
        if (norm.size() != cand.size() || !(norm == cand)) continue;  // not reduced: skip
        out.push_back(Word::from_letters(G, cand));
        next.push_back(std::move(cand));
        if (out.size() > cfg.word_stream_cap)
          raise(errc::budget_exceeded, "word enumeration exceeds stream cap");
      }
    frontier = std::move(next);
    add_work(frontier.size());
  }
  return out;
}

}  // namespace grpgeo
