#pragma once

#include <algorithm>
#include <cstring>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grpgeo/word.hpp"

namespace grpgeo {

// Equations may draw constants from G (coefficient mode) or not
// (coefficient-free mode). The mode changes which words exist, hence
// which sets are algebraic.
enum class GeometryMode { coefficient, coefficient_free };

inline const char* mode_name(GeometryMode m) {
  return m == GeometryMode::coefficient ? "coefficient" : "coefficient-free";
}

inline GeometryMode mode_from_string(const std::string& s) {
  if (s == "coefficient" || s == "coeff") return GeometryMode::coefficient;
  if (s == "coefficient-free" || s == "nocoeff" || s == "free")
    return GeometryMode::coefficient_free;
  raise(errc::bad_parameter, "unknown mode: " + s);
}

using Point = std::vector<elem_t>;

// Every point of G^n in lexicographic order.
inline std::vector<Point> all_points(const GroupPtr& G, int n_vars, const Config& cfg = Config{}) {
  double total = 1;
  for (int i = 0; i < n_vars; ++i) total *= G->order();
  if (total > static_cast<double>(cfg.budget))
    raise(errc::budget_exceeded, "G^n too large to materialize");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(total));
  Point p(n_vars, 0);
  while (true) {
    out.push_back(p);
    int i = n_vars - 1;
    while (i >= 0 && p[i] == G->order() - 1) {
      p[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++p[i];
  }
  add_work(out.size());
  return out;
}

// An algebraic set with its ambient data. Points are kept sorted, so
// equality of sets is equality of the vectors.
struct AlgebraicSet {
  GroupPtr group;
  int n_vars = 0;
  GeometryMode mode = GeometryMode::coefficient;
  std::vector<Point> points;
  std::vector<Word> defining;  // empty when the set came from points

  bool operator==(const AlgebraicSet& o) const { return points == o.points; }
};

inline void sort_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

inline bool word_uses_coefficients(const Word& w) {
  for (const auto& l : w.letters())
    if (!l.is_var()) return true;
  return false;
}

// V(S): all points of G^n where every word of the system evaluates to
// the identity.
inline AlgebraicSet solution_set(const GroupPtr& G, const std::vector<Word>& system, int n_vars,
                                 GeometryMode mode, const Config& cfg = Config{}) {
  if (n_vars < 1) raise(errc::bad_parameter, "arity must be at least 1");
  for (const auto& w : system) {
    if (w.max_variable() > n_vars)
      raise(errc::variable_out_of_range, "system uses a variable beyond the arity");
    if (mode == GeometryMode::coefficient_free && word_uses_coefficients(w))
      raise(errc::mode_mismatch, "coefficient-free mode forbids constants in equations");
  }
  AlgebraicSet out{G, n_vars, mode, {}, system};
  for (auto& p : all_points(G, n_vars, cfg)) {
    bool ok = true;
    for (const auto& w : system)
      if (evaluate(G, w, p) != G->identity()) {
        ok = false;
        break;
      }
    if (ok) out.points.push_back(std::move(p));
  }
  return out;
}

inline bool vanishes_on(const GroupPtr& G, const Word& w, const std::vector<Point>& pts) {
  for (const auto& p : pts)
    if (evaluate(G, w, p) != G->identity()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Extension testing. For U = {u^1..u^m} in G^n, a point q lies in the
// smallest algebraic set containing U exactly when mapping
//
//   coefficient mode:     (g,...,g) -> g   and   (u^1_i,...,u^m_i) -> q_i
//   coefficient-free:                            (u^1_i,...,u^m_i) -> q_i
//
// extends to a homomorphism from the subgroup C <= G^m those tuples
// generate. The engine materializes the Cayley graph of C once per U and
// replays it per candidate q, propagating images along edges and failing
// on the first inconsistency.

class ClosureEngine {
 public:
  ClosureEngine(GroupPtr G, std::vector<std::vector<elem_t>> basis, const Config& cfg = Config{})
      : G_(std::move(G)), basis_(std::move(basis)) {
    if (basis_.empty()) raise(errc::bad_parameter, "extension engine needs generators");
    m_ = static_cast<int>(basis_[0].size());
    for (const auto& b : basis_)
      if (static_cast<int>(b.size()) != m_) raise(errc::bad_parameter, "tuple widths differ");
    build(cfg);
  }

  int size() const { return n_elems_; }
  int generator_count() const { return static_cast<int>(basis_.size()); }

  // Does basis[i] -> images[i] extend to a homomorphism C -> G?
  bool admits(const std::vector<elem_t>& images) const {
    const elem_t UNSET = 0xFFFF;
    phi_.assign(n_elems_, UNSET);
    phi_[0] = G_->identity();
    const int ng = generator_count();
    std::uint64_t steps = 0;
    for (int p = 0; p < n_elems_; ++p) {
      elem_t fp = phi_[p];
      for (int gi = 0; gi < ng; ++gi) {
        std::uint32_t t = edges_[std::size_t(p) * ng + gi];
        elem_t img = G_->mul(fp, images[gi]);
        if (phi_[t] == UNSET)
          phi_[t] = img;
        else if (phi_[t] != img) {
          add_work(steps + 1);
          return false;
        }
        ++steps;
      }
    }
    add_work(steps);
    return true;
  }

 private:
  GroupPtr G_;
  std::vector<std::vector<elem_t>> basis_;
  int m_ = 0;
  int n_elems_ = 0;
  std::vector<elem_t> elems_;       // flat, m_ entries per element, BFS order
  std::vector<std::uint32_t> edges_;  // n_elems_ x n_gens target indices
  mutable std::vector<elem_t> phi_;

  static std::uint64_t mix(std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebull;
    h ^= h >> 31;
    return h;
  }

  std::uint64_t hash_tuple(const elem_t* t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int c = 0; c < m_; ++c) h = mix(h ^ t[c]);
    return h;
  }

  void build(const Config& cfg) {
    const int ng = generator_count();
    const std::uint32_t EMPTY = 0xFFFFFFFFu;
    std::size_t table_bits = 16;
    std::vector<std::uint32_t> table(std::size_t(1) << table_bits, EMPTY);

    auto probe = [&](const elem_t* key) -> std::uint32_t* {
      std::size_t mask = table.size() - 1;
      std::size_t slot = hash_tuple(key) & mask;
      while (table[slot] != EMPTY) {
        const elem_t* have = elems_.data() + std::size_t(table[slot]) * m_;
        if (std::memcmp(have, key, sizeof(elem_t) * m_) == 0) return &table[slot];
        slot = (slot + 1) & mask;
      }
      return &table[slot];
    };

    auto maybe_grow = [&] {
      if (std::size_t(n_elems_) * 2 < table.size()) return;
      ++table_bits;
      std::vector<std::uint32_t> fresh(std::size_t(1) << table_bits, EMPTY);
      std::size_t mask = fresh.size() - 1;
      for (int i = 0; i < n_elems_; ++i) {
        std::size_t slot = hash_tuple(elems_.data() + std::size_t(i) * m_) & mask;
        while (fresh[slot] != EMPTY) slot = (slot + 1) & mask;
        fresh[slot] = static_cast<std::uint32_t>(i);
      }
      table = std::move(fresh);
    };

    std::vector<elem_t> id(m_, G_->identity());
    elems_.insert(elems_.end(), id.begin(), id.end());
    *probe(id.data()) = 0;
    n_elems_ = 1;

    std::vector<elem_t> prod(m_);
    for (int p = 0; p < n_elems_; ++p) {
      edges_.resize(std::size_t(n_elems_) * ng);
      for (int gi = 0; gi < ng; ++gi) {
        const elem_t* src = elems_.data() + std::size_t(p) * m_;
        const auto& g = basis_[gi];
        for (int c = 0; c < m_; ++c) prod[c] = G_->mul(src[c], g[c]);
        std::uint32_t* slot = probe(prod.data());
        std::uint32_t target = *slot;
        if (target == EMPTY) {
          if (static_cast<std::uint64_t>(n_elems_) >= cfg.budget)
            raise(errc::budget_exceeded, "extension closure exceeds budget");
          target = static_cast<std::uint32_t>(n_elems_);
          *slot = target;
          elems_.insert(elems_.end(), prod.begin(), prod.end());
          ++n_elems_;
          maybe_grow();  // may reallocate the table; slot is dead past here
        }
        edges_[std::size_t(p) * ng + gi] = target;
      }
    }
    add_work(std::uint64_t(n_elems_) * ng);
    elems_.clear();
    elems_.shrink_to_fit();
  }
};

// Builds the generator tuples the engine needs for a point set U.
// Coefficient mode prepends diagonal images of the group's generators.
inline std::vector<std::vector<elem_t>> extension_basis(const GroupPtr& G,
                                                        const std::vector<Point>& U, int n_vars,
                                                        GeometryMode mode) {
  const int m = static_cast<int>(U.size());
  std::vector<std::vector<elem_t>> basis;
  if (mode == GeometryMode::coefficient)
    for (elem_t g : G->generators()) basis.push_back(std::vector<elem_t>(m, g));
  for (int i = 0; i < n_vars; ++i) {
    std::vector<elem_t> col(m);
    for (int j = 0; j < m; ++j) col[j] = U[j][i];
    basis.push_back(std::move(col));
  }
  return basis;
}

inline std::vector<elem_t> extension_images(const GroupPtr& G, const Point& q,
                                            GeometryMode mode) {
  std::vector<elem_t> images;
  if (mode == GeometryMode::coefficient)
    for (elem_t g : G->generators()) images.push_back(g);
  images.insert(images.end(), q.begin(), q.end());
  return images;
}

// q in the smallest algebraic set containing U. U must be sorted.
inline bool point_extends(const GroupPtr& G, const std::vector<Point>& U, const Point& q,
                          GeometryMode mode, const Config& cfg = Config{}) {
  if (std::binary_search(U.begin(), U.end(), q)) return true;
  if (U.empty()) {
    if (mode == GeometryMode::coefficient) return false;
    // Rad(empty) is everything; only the all-identity point survives.
    for (elem_t v : q)
      if (v != G->identity()) return false;
    return true;
  }
  ClosureEngine eng(G, extension_basis(G, U, static_cast<int>(q.size()), mode), cfg);
  return eng.admits(extension_images(G, q, mode));
}

// Smallest algebraic set containing U (the radical's solution set).
inline std::vector<Point> algebraic_closure(const GroupPtr& G, std::vector<Point> U, int n_vars,
                                            GeometryMode mode, const Config& cfg = Config{}) {
  sort_points(U);
  if (U.empty()) {
    if (mode == GeometryMode::coefficient) return {};
    return {Point(n_vars, G->identity())};
  }
  std::optional<ClosureEngine> eng;
  std::vector<Point> out;
  for (auto& q : all_points(G, n_vars, cfg)) {
    if (std::binary_search(U.begin(), U.end(), q)) {
      out.push_back(std::move(q));
      continue;
    }
    if (!eng) eng.emplace(G, extension_basis(G, U, n_vars, mode), cfg);
    if (eng->admits(extension_images(G, q, mode))) out.push_back(std::move(q));
  }
  return out;
}

inline bool is_algebraic(const GroupPtr& G, std::vector<Point> U, int n_vars, GeometryMode mode,
                         const Config& cfg = Config{}) {
  sort_points(U);
  return algebraic_closure(G, U, n_vars, mode, cfg) == U;
}

inline bool union_is_algebraic(const GroupPtr& G, const std::vector<Point>& A,
                               const std::vector<Point>& B, int n_vars, GeometryMode mode,
                               const Config& cfg = Config{}) {
  std::vector<Point> U = A;
  U.insert(U.end(), B.begin(), B.end());
  return is_algebraic(G, std::move(U), n_vars, mode, cfg);
}

// Closed sets are the finite unions of algebraic sets, so the closure of
// Y is the union of the singleton closures of its points.
inline std::vector<Point> topological_closure(const GroupPtr& G, std::vector<Point> Y, int n_vars,
                                              GeometryMode mode, const Config& cfg = Config{}) {
  sort_points(Y);
  std::vector<Point> out;
  for (const auto& y : Y) {
    auto cl = algebraic_closure(G, {y}, n_vars, mode, cfg);
    out.insert(out.end(), cl.begin(), cl.end());
  }
  sort_points(out);
  return out;
}

inline bool is_closed(const GroupPtr& G, std::vector<Point> Y, int n_vars, GeometryMode mode,
                      const Config& cfg = Config{}) {
  sort_points(Y);
  return topological_closure(G, Y, n_vars, mode, cfg) == Y;
}

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<Point> generic_point;
};

// A nonempty closed set is irreducible exactly when some point's closure
// is the whole set. Input must be closed.
inline IrreducibilityResult is_irreducible(const GroupPtr& G, std::vector<Point> Y, int n_vars,
                                           GeometryMode mode, const Config& cfg = Config{}) {
  sort_points(Y);
  if (Y.empty()) raise(errc::empty_set, "irreducibility is undefined for the empty set");
  if (!is_closed(G, Y, n_vars, mode, cfg))
    raise(errc::bad_parameter, "irreducibility applies to closed sets; take the closure first");
  for (const auto& z : Y) {
    auto cl = algebraic_closure(G, {z}, n_vars, mode, cfg);
    if (cl == Y) return {true, z};
  }
  return {false, std::nullopt};
}

// Maximal point closures inside a closed set, sorted by (size, points).
// Their union is the set itself.
inline std::vector<std::vector<Point>> irreducible_components(const GroupPtr& G,
                                                              std::vector<Point> Y, int n_vars,
                                                              GeometryMode mode,
                                                              const Config& cfg = Config{}) {
  sort_points(Y);
  if (Y.empty()) raise(errc::empty_set, "the empty set has no components");
  if (!is_closed(G, Y, n_vars, mode, cfg))
    raise(errc::bad_parameter, "components apply to closed sets; take the closure first");
  std::vector<std::vector<Point>> closures;
  for (const auto& z : Y) closures.push_back(algebraic_closure(G, {z}, n_vars, mode, cfg));
  std::sort(closures.begin(), closures.end());
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
  std::vector<std::vector<Point>> out;
  for (const auto& c : closures) {
    bool maximal = true;
    for (const auto& d : closures) {
      if (&c == &d || c == d) continue;
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Exhaustive reducibility check for small closed sets: is Y the union of
// two proper closed subsets? Exponential in |Y|; a cross-check, not a
// production path.
inline bool reducible_by_cover(const GroupPtr& G, std::vector<Point> Y, int n_vars,
                               GeometryMode mode, const Config& cfg = Config{}) {
  sort_points(Y);
  const int n = static_cast<int>(Y.size());
  if (n == 0) raise(errc::empty_set, "reducibility is undefined for the empty set");
  if (n > 16) raise(errc::bad_parameter, "cover search is limited to 16 points");
  std::vector<unsigned> closed_masks;
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    std::vector<Point> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(Y[i]);
    if (is_closed(G, sub, n_vars, mode, cfg)) closed_masks.push_back(mask);
  }
  for (std::size_t i = 0; i < closed_masks.size(); ++i)
    for (std::size_t j = i; j < closed_masks.size(); ++j)
      if ((closed_masks[i] | closed_masks[j]) == (1u << n) - 1) return true;
  return false;
}

// Approximates the closure from above by the solution set of all words
// of bounded length that vanish on U. Descends toward the closure as the
// bound grows.
inline std::vector<Point> bounded_word_closure(const GroupPtr& G, std::vector<Point> U, int n_vars,
                                               GeometryMode mode, int max_letters,
                                               const Config& cfg = Config{}) {
  sort_points(U);
  auto words = enumerate_words(G, n_vars, max_letters,
                               mode == GeometryMode::coefficient, cfg);
  std::vector<Word> vanishing;
  for (const auto& w : words)
    if (vanishes_on(G, w, U)) vanishing.push_back(w);
  std::vector<Point> out;
  for (auto& q : all_points(G, n_vars, cfg)) {
    bool ok = true;
    for (const auto& w : vanishing)
      if (evaluate(G, w, q) != G->identity()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace grpgeo
