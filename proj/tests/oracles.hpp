#pragma once

// Naive reference implementations used only by the tests. Everything here
// is written from the raw definitions with std::set bookkeeping and no
// shared machinery with the library, so agreement is meaningful.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include <grpgeo/grpgeo.hpp>

namespace oracle {

using grpgeo::elem_t;
using grpgeo::GroupPtr;
using grpgeo::Point;

using Tuple = std::vector<elem_t>;

inline Tuple tuple_mul(const GroupPtr& G, const Tuple& a, const Tuple& b) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = G->mul(a[i], b[i]);
  return r;
}

// Subgroup of G^m generated by the given tuples, as a sorted set.
inline std::set<Tuple> tuple_closure(const GroupPtr& G, const std::vector<Tuple>& gens,
                                     std::size_t m) {
  std::set<Tuple> have;
  have.insert(Tuple(m, 0));
  std::vector<Tuple> queue(have.begin(), have.end());
  for (const auto& g : gens)
    if (have.insert(g).second) queue.push_back(g);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Tuple p = tuple_mul(G, queue[i], g);
      if (have.insert(p).second) queue.push_back(p);
    }
  return have;
}

// Basis tuples for the closure test: the m-fold diagonals of G's
// generators (coefficient mode only) followed by one column per variable.
inline std::vector<Tuple> closure_basis(const GroupPtr& G, const std::vector<Point>& U,
                                        int n_vars, grpgeo::GeometryMode mode) {
  const std::size_t m = U.size();
  std::vector<Tuple> basis;
  if (mode == grpgeo::GeometryMode::coefficient)
    for (elem_t g : G->generators()) basis.push_back(Tuple(m, g));
  for (int v = 0; v < n_vars; ++v) {
    Tuple col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = U[i][v];
    basis.push_back(col);
  }
  return basis;
}

// q lies in the closure of U exactly when appending q's coordinates as an
// extra row does not grow the generated subgroup: the projection that
// forgets the new row is then injective, and its inverse composed with the
// last-coordinate projection is the required homomorphism.
inline bool point_extends(const GroupPtr& G, const std::vector<Point>& U, const Point& q,
                          int n_vars, grpgeo::GeometryMode mode) {
  if (U.empty()) {
    if (mode == grpgeo::GeometryMode::coefficient) return false;
    return std::all_of(q.begin(), q.end(), [](elem_t x) { return x == 0; });
  }
  auto base = closure_basis(G, U, n_vars, mode);
  std::vector<Point> Uq = U;
  Uq.push_back(q);
  auto ext = closure_basis(G, Uq, n_vars, mode);
  return tuple_closure(G, base, U.size()).size() == tuple_closure(G, ext, Uq.size()).size();
}

inline std::vector<Point> algebraic_closure(const GroupPtr& G, const std::vector<Point>& U,
                                            int n_vars, grpgeo::GeometryMode mode) {
  std::vector<Point> out;
  for (const auto& q : grpgeo::all_points(G, n_vars))
    if (point_extends(G, U, q, n_vars, mode)) out.push_back(q);
  return out;
}

// Definitional zero-divisor scan, quantifiers spelled out.
inline bool has_zero_divisor(const GroupPtr& G) {
  for (int x = 1; x < G->order(); ++x)
    for (int y = 1; y < G->order(); ++y) {
      bool all = true;
      for (int g = 0; g < G->order() && all; ++g) {
        elem_t cx = G->conj(elem_t(x), elem_t(g));
        all = G->mul(cx, elem_t(y)) == G->mul(elem_t(y), cx);
      }
      if (all) return true;
    }
  return false;
}

inline bool is_domain(const GroupPtr& G) {
  return G->order() == 1 || !has_zero_divisor(G);
}

// Product-closure fixpoint; finite, so products alone suffice.
inline std::set<elem_t> element_closure(const GroupPtr& G, std::set<elem_t> seed) {
  seed.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem_t> now(seed.begin(), seed.end());
    for (elem_t a : now)
      for (elem_t b : now)
        if (seed.insert(G->mul(a, b)).second) grew = true;
  }
  return seed;
}

inline bool is_malnormal(const GroupPtr& G, const std::set<elem_t>& H) {
  if (H.size() == std::size_t(G->order()) || H.size() <= 1) return true;
  for (int x = 0; x < G->order(); ++x) {
    if (H.count(elem_t(x))) continue;
    for (elem_t h : H) {
      if (h == 0) continue;
      // h in H and h in H^x?
      elem_t up = G->mul(G->mul(elem_t(x), h), G->inv(elem_t(x)));
      if (H.count(up)) return false;
    }
  }
  return true;
}

// Nilpotency class by iterating commutator subgroups [S, H] with set
// closure; std::nullopt when the series stalls above the identity.
inline std::optional<int> nilpotency_class(const GroupPtr& G, const std::set<elem_t>& H) {
  std::set<elem_t> cur = H;
  int cls = 0;
  while (cur.size() > 1) {
    std::set<elem_t> comms;
    for (elem_t a : cur)
      for (elem_t h : H) comms.insert(G->comm(a, h));
    std::set<elem_t> next = element_closure(G, comms);
    if (next.size() == cur.size() && std::equal(next.begin(), next.end(), cur.begin()))
      return std::nullopt;
    cur = next;
    ++cls;
  }
  return cls;
}

}  // namespace oracle
