#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "grpgeo/properties.hpp"
#include "grpgeo/subgroup.hpp"
#include "grpgeo/zariski.hpp"

namespace grpgeo {

// The coordinate group of a point set Y in G^n, materialized as the
// subgroup of G^|Y| generated by the diagonal copies of G's generators
// (coefficient mode) and the per-variable coordinate tuples. Words over
// G[x1..xn] map into the carrier by folding through const_embedding and
// var_images; a word lands on the identity exactly when it vanishes on Y.
struct CoordinateGroup {
  GroupPtr base;
  int width = 0;    // |Y|
  int n_vars = 0;
  GeometryMode mode = GeometryMode::coefficient;
  GroupPtr carrier;
  std::vector<Point> element_tuples;   // carrier index -> tuple in G^width
  std::vector<elem_t> const_embedding; // G index -> carrier index (coefficient mode)
  std::vector<elem_t> var_images;      // variable -> carrier index
  std::vector<Point> point_order;      // the fixed enumeration of Y

  // Image of a word in the carrier.
  elem_t word_image(const Word& w) const {
    elem_t r = carrier->identity();
    for (const auto& l : w.letters()) {
      if (l.is_var())
        r = carrier->mul(r, carrier->pow(var_images[l.var - 1], l.exp));
      else
        r = carrier->mul(r, const_embedding[l.elem]);
    }
    return r;
  }
};

inline CoordinateGroup coordinate_group(const GroupPtr& G, std::vector<Point> Y, int n_vars,
                                        GeometryMode mode, const Config& cfg = Config{}) {
  sort_points(Y);
  if (Y.empty()) raise(errc::empty_set, "coordinate group needs a nonempty point set");
  const int m = static_cast<int>(Y.size());
  if (m > cfg.max_width)
    raise(errc::width_cap_exceeded,
          "width " + std::to_string(m) + " exceeds cap " + std::to_string(cfg.max_width));
  double power = 1;
  for (int i = 0; i < m; ++i) power *= G->order();
  if (power > static_cast<double>(cfg.budget))
    raise(errc::budget_exceeded, "G^|Y| exceeds budget");
  for (const auto& p : Y)
    if (static_cast<int>(p.size()) != n_vars)
      raise(errc::bad_parameter, "point arity mismatch");

  auto basis = extension_basis(G, Y, n_vars, mode);

  // Materialize the subgroup of G^m the basis generates.
  std::vector<Point> elems;
  std::map<Point, elem_t> index;
  Point id(m, G->identity());
  elems.push_back(id);
  index.emplace(id, 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : basis) {
      Point prod(m);
      for (int c = 0; c < m; ++c) prod[c] = G->mul(elems[i][c], g[c]);
      if (index.emplace(prod, 0).second) elems.push_back(std::move(prod));
    }
  std::sort(elems.begin(), elems.end());  // identity tuple is lexicographically first
  const int order = static_cast<int>(elems.size());
  if (static_cast<double>(order) * order > static_cast<double>(cfg.budget))
    raise(errc::budget_exceeded, "carrier multiplication table exceeds budget");
  for (int i = 0; i < order; ++i) index[elems[i]] = static_cast<elem_t>(i);

  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  Point prod(m);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      for (int c = 0; c < m; ++c) prod[c] = G->mul(elems[i][c], elems[j][c]);
      table[i][j] = index[prod];
    }
  add_work(std::uint64_t(order) * order);

  std::vector<std::string> labels;
  if (order <= 256) {
    labels.resize(order);
    for (int i = 0; i < order; ++i) {
      std::string s = "(";
      for (int c = 0; c < m; ++c) {
        if (c) s += ",";
        s += G->label(elems[i][c]);
      }
      labels[i] = s + ")";
    }
  }

  CoordinateGroup out;
  out.base = G;
  out.width = m;
  out.n_vars = n_vars;
  out.mode = mode;
  out.carrier = detail::validate_and_build(std::move(table), std::move(labels),
                                           "coordinate-carrier", cfg, false);
  out.element_tuples = std::move(elems);
  out.point_order = std::move(Y);
  if (mode == GeometryMode::coefficient) {
    out.const_embedding.resize(G->order());
    for (int g = 0; g < G->order(); ++g)
      out.const_embedding[g] = index.at(Point(m, elem_t(g)));
  }
  for (int i = 0; i < n_vars; ++i) {
    Point col(m);
    for (int j = 0; j < m; ++j) col[j] = out.point_order[j][i];
    out.var_images.push_back(index.at(col));
  }
  return out;
}

// The evaluation homomorphism carrier -> G induced by a point q: sends
// each tuple (w(y))_{y in Y} to w(q). Well-defined exactly when q lies in
// the closure of Y. Computed by propagating generator images through the
// carrier's own multiplication table, independently of the extension
// engine. Returns the image of every carrier element, or none when the
// propagation hits a contradiction.
inline std::optional<std::vector<elem_t>> evaluation_hom(const CoordinateGroup& C,
                                                         const Point& q) {
  const auto& G = C.base;
  const auto& K = C.carrier;
  std::vector<elem_t> gen_idx;   // carrier indices of the defining generators
  std::vector<elem_t> gen_img;   // their intended images in G
  if (C.mode == GeometryMode::coefficient)
    for (elem_t g : G->generators()) {
      gen_idx.push_back(C.const_embedding[g]);
      gen_img.push_back(g);
    }
  for (int i = 0; i < C.n_vars; ++i) {
    gen_idx.push_back(C.var_images[i]);
    gen_img.push_back(q[i]);
  }

  const elem_t UNSET = 0xFFFF;
  std::vector<elem_t> phi(K->order(), UNSET);
  std::vector<elem_t> frontier;
  phi[K->identity()] = G->identity();
  frontier.push_back(K->identity());
  for (std::size_t h = 0; h < frontier.size(); ++h) {
    elem_t c = frontier[h];
    for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
      elem_t t = K->mul(c, gen_idx[gi]);
      elem_t img = G->mul(phi[c], gen_img[gi]);
      if (phi[t] == UNSET) {
        phi[t] = img;
        frontier.push_back(t);
      } else if (phi[t] != img) {
        return std::nullopt;
      }
    }
  }
  add_work(std::uint64_t(frontier.size()) * gen_idx.size());
  if (static_cast<int>(frontier.size()) != K->order())
    raise(errc::bad_parameter, "carrier is not generated by its defining tuples");
  return phi;
}

// The G-group zero-divisor test inside the carrier: a nontrivial x is a
// G-zero divisor when some nontrivial y commutes with every conjugate of
// x by an embedded constant. The candidate set shrinks by intersecting
// centralizers one conjugate at a time, exiting as soon as it collapses.
struct GammaDomainResult {
  bool is_G_domain = false;
  std::optional<std::pair<elem_t, elem_t>> witness;  // carrier indices (x, y)
};

inline GammaDomainResult gamma_is_G_domain(const CoordinateGroup& C) {
  if (C.mode != GeometryMode::coefficient)
    raise(errc::mode_mismatch, "G-domain test needs the coefficient mode carrier");
  const auto& K = C.carrier;
  const auto& G = C.base;
  for (int x = 1; x < K->order(); ++x) {
    Bitset live = Bitset::universe(K->order());
    live.reset(0);
    bool collapsed = false;
    for (int g = 0; g < G->order() && !collapsed; ++g) {
      elem_t cx = K->conj(elem_t(x), C.const_embedding[g]);
      Bitset next(K->order());
      for (int y : live.members())
        if (K->mul(cx, elem_t(y)) == K->mul(elem_t(y), cx)) next.set(y);
      add_work(live.count());
      live = next;
      collapsed = live.count() == 0;
    }
    if (!collapsed) {
      int y = live.members().front();
      return {false, std::make_pair(elem_t(x), elem_t(y))};
    }
  }
  return {true, std::nullopt};
}

// Searches the closure of Y for a point whose evaluation homomorphism is
// injective; such a point realizes the carrier inside G itself.
inline std::optional<Point> find_embedding_point(const GroupPtr& G, const CoordinateGroup& C,
                                                 const Config& cfg = Config{}) {
  if (C.mode != GeometryMode::coefficient)
    raise(errc::mode_mismatch, "embedding-point search needs coefficient mode");
  auto closure = algebraic_closure(G, C.point_order, C.n_vars, C.mode, cfg);
  for (const auto& q : closure) {
    auto phi = evaluation_hom(C, q);
    if (!phi) continue;
    std::vector<elem_t> sorted = *phi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return q;
  }
  return std::nullopt;
}

struct Theorem1Report {
  bool irreducible = false;                 // item 1
  bool gamma_G_domain = false;              // item 2
  bool embedding_point_exists = false;      // item 3
  std::optional<Point> generic_point;
  std::optional<Point> embedding_point;
  std::optional<std::pair<elem_t, elem_t>> gamma_witness;
  int carrier_order = 0;
  int closure_size = 0;
  bool input_was_closed = true;
  bool agree_12 = false, agree_13 = false, agree_23 = false;
  bool all_agree = false;
};

// Cross-checks the three decidable items of the coordinate-group
// equivalence on a concrete (G, Y): irreducibility of Y, the carrier
// being a G-domain, and the existence of an injective evaluation point.
// Requires G itself to pass the domain test; the input is replaced by
// its closure so irreducibility is well-posed.
inline Theorem1Report theorem1_crosscheck(const GroupPtr& G, std::vector<Point> Y, int n_vars,
                                          const Config& cfg = Config{}) {
  auto dom = is_domain(G, DomainMethod::all, cfg);
  if (!dom.is_domain)
    raise(errc::not_a_domain, "the crosscheck applies to domain groups only");

  Theorem1Report rep;
  sort_points(Y);
  auto closed = algebraic_closure(G, Y, n_vars, GeometryMode::coefficient, cfg);
  rep.input_was_closed = closed == Y;
  rep.closure_size = static_cast<int>(closed.size());

  auto irr = is_irreducible(G, closed, n_vars, GeometryMode::coefficient, cfg);
  rep.irreducible = irr.irreducible;
  rep.generic_point = irr.generic_point;

  auto C = coordinate_group(G, closed, n_vars, GeometryMode::coefficient, cfg);
  rep.carrier_order = C.carrier->order();
  auto gd = gamma_is_G_domain(C);
  rep.gamma_G_domain = gd.is_G_domain;
  rep.gamma_witness = gd.witness;

  rep.embedding_point = find_embedding_point(G, C, cfg);
  rep.embedding_point_exists = rep.embedding_point.has_value();

  rep.agree_12 = rep.irreducible == rep.gamma_G_domain;
  rep.agree_13 = rep.irreducible == rep.embedding_point_exists;
  rep.agree_23 = rep.gamma_G_domain == rep.embedding_point_exists;
  rep.all_agree = rep.agree_12 && rep.agree_13;
  return rep;
}

}  // namespace grpgeo
