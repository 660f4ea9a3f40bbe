#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grpgeo/bitset.hpp"
#include "grpgeo/config.hpp"
#include "grpgeo/error.hpp"

namespace grpgeo {

using elem_t = std::uint16_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as a validated multiplication table over dense indices
// 0..order-1. Index 0 is always the identity. Immutable after
// construction; safe to share across threads.
class FiniteGroup {
 public:
  int order() const { return order_; }
  elem_t identity() const { return 0; }

  elem_t mul(elem_t a, elem_t b) const { return mul_[std::size_t(a) * order_ + b]; }
  elem_t inv(elem_t a) const { return inv_[a]; }

  // a^x = x^-1 a x
  elem_t conj(elem_t a, elem_t x) const { return mul(mul(inv(x), a), x); }
  // [a,b] = a^-1 b^-1 a b
  elem_t comm(elem_t a, elem_t b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }

  elem_t pow(elem_t a, long k) const {
    elem_t base = k < 0 ? inv(a) : a;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    elem_t r = 0;
    while (n) {
      if (n & 1) r = mul(r, base);
      base = mul(base, base);
      n >>= 1;
    }
    return r;
  }

  int element_order(elem_t a) const {
    int n = 1;
    elem_t x = a;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(elem_t(a), elem_t(b)) != mul(elem_t(b), elem_t(a))) return false;
    return true;
  }

  bool has_labels() const { return !labels_.empty(); }

  // Display name of an element; falls back to g<i> when unlabeled.
  std::string label(elem_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "g" + std::to_string(i);
  }

  // Resolves a display name back to an index: exact label match first,
  // then the g<i> fallback spelling.
  int find_label(const std::string& s) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == s) return static_cast<int>(i);
    if (s.size() >= 2 && s[0] == 'g') {
      bool digits = true;
      for (std::size_t i = 1; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) digits = false;
      if (digits) {
        long idx = std::strtol(s.c_str() + 1, nullptr, 10);
        if (idx >= 0 && idx < order_) return static_cast<int>(idx);
      }
    }
    return -1;
  }

  const std::string& provenance() const { return provenance_; }

  // Small generating set found greedily over the element order; used to
  // seed diagonal generators in direct-power constructions.
  const std::vector<elem_t>& generators() const { return gens_; }

  const std::vector<elem_t>& table() const { return mul_; }

  std::uint64_t table_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (elem_t v : mul_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

  // Factories live outside the class; this constructor trusts its input
  // and is reached only through validate_and_build.
  FiniteGroup(int order, std::vector<elem_t> mul, std::vector<elem_t> inv,
              std::vector<std::string> labels, std::string provenance,
              std::vector<elem_t> gens)
      : order_(order),
        mul_(std::move(mul)),
        inv_(std::move(inv)),
        labels_(std::move(labels)),
        provenance_(std::move(provenance)),
        gens_(std::move(gens)) {}

 private:
  int order_;
  std::vector<elem_t> mul_;
  std::vector<elem_t> inv_;
  std::vector<std::string> labels_;
  std::string provenance_;
  std::vector<elem_t> gens_;
};

namespace detail {

// Closure of a seed set under table products; a finite subset of a group
// closed under products is a subgroup.
inline Bitset close_under_products(const std::vector<elem_t>& table, int order,
                                   const std::vector<elem_t>& seeds) {
  Bitset members(order);
  std::vector<elem_t> elems;
  members.set(0);
  elems.push_back(0);
  for (elem_t s : seeds)
    if (!members.test(s)) {
      members.set(s);
      elems.push_back(s);
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      elem_t p = table[std::size_t(elems[i]) * order + elems[j]];
      if (!members.test(p)) {
        members.set(p);
        elems.push_back(p);
      }
    }
  add_work(elems.size() * elems.size());
  return members;
}

inline std::vector<elem_t> greedy_generators(const std::vector<elem_t>& table, int order) {
  std::vector<elem_t> gens;
  Bitset have = close_under_products(table, order, {});
  for (int x = 0; x < order && have.count() < order; ++x) {
    if (have.test(x)) continue;
    gens.push_back(static_cast<elem_t>(x));
    have = close_under_products(table, order, gens);
  }
  return gens;
}

// Full group-axiom battery. Checks run in a fixed order so error reasons
// are stable: latin, identity, inverses, associativity.
inline GroupPtr validate_and_build(std::vector<std::vector<int>> table,
                                   std::vector<std::string> labels, std::string provenance,
                                   const Config& cfg, bool enforce_order_cap = true) {
  const int n = static_cast<int>(table.size());
  if (n == 0) raise(errc::not_a_group, "no-identity: empty table");
  if (enforce_order_cap && n > cfg.max_order)
    raise(errc::order_cap_exceeded,
          "order " + std::to_string(n) + " exceeds cap " + std::to_string(cfg.max_order));
  if (n > 65535) raise(errc::order_cap_exceeded, "order exceeds index width");

  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      raise(errc::not_a_group, "not-latin: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) raise(errc::not_a_group, "not-latin: index out of range");
  }

  // Latin property: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        raise(errc::not_a_group, "not-latin: repeated value in row " + std::to_string(i));
      row_seen[table[i][j]] = true;
      if (col_seen[table[j][i]])
        raise(errc::not_a_group, "not-latin: repeated value in column " + std::to_string(i));
      col_seen[table[j][i]] = true;
    }
  }

  // Two-sided identity, derived rather than supplied.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) {
        ok = false;
        break;
      }
    if (ok) e = i;
  }
  if (e < 0) raise(errc::not_a_group, "no-identity");

  // Canonicalize: identity is index 0. A transposition of labels keeps
  // everything else stable.
  if (e != 0) {
    auto sw = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t2[sw(i)][sw(j)] = sw(table[i][j]);
    table = std::move(t2);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  std::vector<elem_t> inv(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = -1;
    for (int j = 0; j < n; ++j)
      if (table[x][j] == 0) {
        y = j;
        break;
      }
    if (y < 0 || table[y][x] != 0)
      raise(errc::not_a_group, "no-inverse: element " + std::to_string(x));
    inv[x] = static_cast<elem_t>(y);
  }

  if (n <= cfg.assoc_exhaustive_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            raise(errc::not_a_group, "not-associative");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n));
    const int samples = std::max(4096, 16 * n);
    for (int s = 0; s < samples; ++s) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
          c = static_cast<int>(rng() % n);
      if (table[table[a][b]][c] != table[a][table[b][c]])
        raise(errc::not_a_group, "not-associative");
    }
  }
  add_work(std::uint64_t(n) * n);

  std::vector<elem_t> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = static_cast<elem_t>(table[i][j]);

  auto gens = greedy_generators(flat, n);
  return std::make_shared<FiniteGroup>(n, std::move(flat), std::move(inv), std::move(labels),
                                       std::move(provenance), std::move(gens));
}

}  // namespace detail

inline GroupPtr from_multiplication_table(const std::vector<std::vector<int>>& table,
                                          std::vector<std::string> labels = {},
                                          const Config& cfg = Config{}) {
  return detail::validate_and_build(table, std::move(labels), "table", cfg);
}

// ---------------------------------------------------------------------------
// Permutations (1-based points, one-line images stored 0-based).

using Perm = std::vector<std::uint8_t>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

// Right action composition: (p*q)(i) = q(p(i)).
inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Parses disjoint-cycle notation like "(1 2)(3 4 5)"; points are 1-based
// and may be separated by spaces or commas. "()" is the identity.
inline Perm perm_from_cycles(const std::string& text, int degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size()) raise(errc::parse_error, "empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') raise(errc::parse_error, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) raise(errc::parse_error, "expected point in cycle");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > degree) raise(errc::parse_error, "cycle point out of range");
      cycle.push_back(pt - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (p[from] != static_cast<std::uint8_t>(from))
        raise(errc::parse_error, "cycles are not disjoint");
      p[from] = static_cast<std::uint8_t>(to);
    }
    skip_ws();
  }
  return p;
}

namespace detail {

inline GroupPtr group_from_perm_set(std::vector<Perm> elements, std::string provenance,
                                    const Config& cfg) {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto index_of = [&](const Perm& p) {
    auto it = std::lower_bound(elements.begin() + 1, elements.end(), p);
    if (it != elements.end() && *it == p) return static_cast<int>(it - elements.begin());
    // identity sits at 0 ahead of the sorted tail
    return 0;
  };
  // elements: identity first, remainder sorted; index_of relies on it.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index_of(perm_compose(elements[i], elements[j]));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = perm_to_cycles(elements[i]);
  return validate_and_build(std::move(table), std::move(labels), std::move(provenance), cfg);
}

}  // namespace detail

// Generates the closure of permutation generators breadth-first from the
// identity, sorting each new level lexicographically, so the element
// order is reproducible.
inline GroupPtr from_permutation_generators(int degree, const std::vector<Perm>& generators,
                                            const Config& cfg = Config{}) {
  if (degree < 1 || degree > 255) raise(errc::bad_parameter, "degree out of range");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      raise(errc::bad_parameter, "generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (auto v : g) {
      if (v >= degree || seen[v]) raise(errc::bad_parameter, "generator is not a permutation");
      seen[v] = true;
    }
  }

  std::set<Perm> seen;
  std::vector<Perm> order;
  Perm id = perm_identity(degree);
  seen.insert(id);
  order.push_back(id);
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::set<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        Perm p = perm_compose(e, g);
        if (!seen.count(p)) next.insert(p);
      }
    frontier.assign(next.begin(), next.end());
    for (const auto& p : frontier) {
      seen.insert(p);
      order.push_back(p);
      if (static_cast<int>(order.size()) > cfg.max_order)
        raise(errc::order_cap_exceeded, "permutation closure exceeds max order");
    }
  }

  // Keep identity first, sort the rest for the table index.
  std::vector<Perm> elems(order.begin(), order.end());
  std::sort(elems.begin() + 1, elems.end());
  return detail::group_from_perm_set(std::move(elems),
                                     "permutations degree " + std::to_string(degree), cfg);
}

// ---------------------------------------------------------------------------
// Built-in families. Element orderings are fixed and documented per family.

// Elements i = a^i, identity a^0.
inline GroupPtr builtin_cyclic(int n, const Config& cfg = Config{}) {
  if (n < 1) raise(errc::bad_parameter, "cyclic order must be positive");
  if (n > cfg.max_order) raise(errc::order_cap_exceeded, "cyclic order over cap");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
  return detail::validate_and_build(std::move(t), std::move(labels),
                                    "cyclic:" + std::to_string(n), cfg);
}

// Order m = 2n; indices i<n are rotations r^i, n+i are reflections s r^i.
// Relations r^n = s^2 = 1, r^i s = s r^{-i}.
inline GroupPtr builtin_dihedral(int m, const Config& cfg = Config{}) {
  if (m < 2 || m % 2 != 0) raise(errc::bad_parameter, "dihedral order must be even and >= 2");
  if (m > cfg.max_order) raise(errc::order_cap_exceeded, "dihedral order over cap");
  const int n = m / 2;
  auto rot = [&](int i) { return ((i % n) + n) % n; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t[i][j] = rot(i + j);              // r^i r^j
      t[i][n + j] = n + rot(j - i);      // r^i (s r^j) = s r^{j-i}
      t[n + i][j] = n + rot(i + j);      // (s r^i) r^j
      t[n + i][n + j] = rot(j - i);      // (s r^i)(s r^j) = r^{j-i}
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[n + i] = i == 0 ? "s" : (i == 1 ? "sr" : "sr^" + std::to_string(i));
  }
  return detail::validate_and_build(std::move(t), std::move(labels),
                                    "dihedral:" + std::to_string(m), cfg);
}

// Order m = 4n; indices i<2n are a^i, 2n+i are a^i b. Relations
// a^{2n} = 1, b^2 = a^n, b^-1 a b = a^-1. n = 2 gives Q8.
inline GroupPtr builtin_dicyclic(int m, const Config& cfg = Config{}) {
  if (m < 8 || m % 4 != 0) raise(errc::bad_parameter, "dicyclic order must be a multiple of 4, >= 8");
  if (m > cfg.max_order) raise(errc::order_cap_exceeded, "dicyclic order over cap");
  const int n = m / 4, nn = 2 * n;
  auto rot = [&](int i) { return ((i % nn) + nn) % nn; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      t[i][j] = rot(i + j);                 // a^i a^j
      t[i][nn + j] = nn + rot(i + j);       // a^i (a^j b)
      t[nn + i][j] = nn + rot(i - j);       // (a^i b) a^j = a^{i-j} b
      t[nn + i][nn + j] = rot(i - j + n);   // (a^i b)(a^j b) = a^{i-j+n}
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < nn; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[nn + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
  }
  return detail::validate_and_build(std::move(t), std::move(labels),
                                    "dicyclic:" + std::to_string(m), cfg);
}

// All permutations of n points in lexicographic one-line order.
inline GroupPtr builtin_symmetric(int n, const Config& cfg = Config{}) {
  if (n < 1 || n > 8) raise(errc::bad_parameter, "symmetric degree out of range");
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (fact > cfg.max_order) raise(errc::order_cap_exceeded, "symmetric order over cap");
  std::vector<Perm> elems;
  Perm p = perm_identity(n);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::group_from_perm_set(std::move(elems), "symmetric:" + std::to_string(n), cfg);
}

// Even permutations in lexicographic one-line order.
inline GroupPtr builtin_alternating(int n, const Config& cfg = Config{}) {
  if (n < 1 || n > 8) raise(errc::bad_parameter, "alternating degree out of range");
  auto parity = [](const Perm& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    return inversions % 2;
  };
  std::vector<Perm> elems;
  Perm p = perm_identity(n);
  do {
    if (parity(p) == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (static_cast<int>(elems.size()) > cfg.max_order)
    raise(errc::order_cap_exceeded, "alternating order over cap");
  return detail::group_from_perm_set(std::move(elems), "alternating:" + std::to_string(n), cfg);
}

// Vectors of length k over F_p, indexed base-p with digit 0 least
// significant; componentwise addition.
inline GroupPtr builtin_elementary_abelian(int p, int k, const Config& cfg = Config{}) {
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (!is_prime(p)) raise(errc::bad_parameter, "elementary-abelian base must be prime");
  if (k < 1) raise(errc::bad_parameter, "elementary-abelian rank must be positive");
  long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > cfg.max_order) raise(errc::order_cap_exceeded, "elementary-abelian order over cap");
  }
  const int n = static_cast<int>(order);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = i, b = j, scale = 1, sum = 0;
      for (int d = 0; d < k; ++d) {
        sum += ((a % p) + (b % p)) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
      }
      t[i][j] = sum;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      labels[i] = "e";
      continue;
    }
    std::string s;
    int a = i;
    for (int d = 0; d < k; ++d) {
      int digit = a % p;
      a /= p;
      if (digit == 0) continue;
      s += "a" + std::to_string(d + 1);
      if (digit > 1) s += "^" + std::to_string(digit);
    }
    labels[i] = s;
  }
  return detail::validate_and_build(
      std::move(t), std::move(labels),
      "elementary-abelian:" + std::to_string(p) + "^" + std::to_string(k), cfg);
}

// Pairs (x, y) indexed x*|B| + y.
inline GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B, const Config& cfg = Config{}) {
  long order = static_cast<long>(A->order()) * B->order();
  if (order > cfg.max_order) raise(errc::order_cap_exceeded, "direct product order over cap");
  const int n = static_cast<int>(order), nb = B->order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int xa = i / nb, ya = i % nb, xb = j / nb, yb = j % nb;
      t[i][j] = A->mul(elem_t(xa), elem_t(xb)) * nb + B->mul(elem_t(ya), elem_t(yb));
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = "(" + A->label(elem_t(i / nb)) + "," + B->label(elem_t(i % nb)) + ")";
  return detail::validate_and_build(
      std::move(t), std::move(labels),
      "direct-product(" + A->provenance() + "," + B->provenance() + ")", cfg);
}

// Family spec grammar: name:params, with direct-product(spec,spec) nesting.
// Examples: "cyclic:6", "dihedral:8", "elementary-abelian:2^3",
// "direct-product(cyclic:2,symmetric:3)".
inline GroupPtr builtin(const std::string& spec, const Config& cfg = Config{}) {
  auto trimmed = spec;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();

  if (trimmed.rfind("direct-product(", 0) == 0 && trimmed.back() == ')') {
    std::string inner = trimmed.substr(15, trimmed.size() - 16);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      raise(errc::bad_parameter, "direct-product needs two factors");
    return direct_product(builtin(inner.substr(0, split), cfg), builtin(inner.substr(split + 1), cfg),
                          cfg);
  }

  auto colon = trimmed.find(':');
  std::string name = colon == std::string::npos ? trimmed : trimmed.substr(0, colon);
  std::string params = colon == std::string::npos ? "" : trimmed.substr(colon + 1);
  auto need_int = [&](const std::string& s) {
    if (s.empty()) raise(errc::bad_parameter, "family " + name + " needs a parameter");
    try {
      return std::stoi(s);
    } catch (...) {
      raise(errc::bad_parameter, "bad parameter for family " + name);
    }
  };

  if (name == "cyclic") return builtin_cyclic(need_int(params), cfg);
  if (name == "dihedral") return builtin_dihedral(need_int(params), cfg);
  if (name == "dicyclic") return builtin_dicyclic(need_int(params), cfg);
  if (name == "symmetric") return builtin_symmetric(need_int(params), cfg);
  if (name == "alternating") return builtin_alternating(need_int(params), cfg);
  if (name == "elementary-abelian") {
    auto caret = params.find('^');
    int p = need_int(caret == std::string::npos ? params : params.substr(0, caret));
    int k = caret == std::string::npos ? 1 : need_int(params.substr(caret + 1));
    return builtin_elementary_abelian(p, k, cfg);
  }
  raise(errc::bad_parameter, "unknown family: " + name);
}

}  // namespace grpgeo
