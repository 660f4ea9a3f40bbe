#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "grpgeo/group.hpp"

namespace grpgeo {

// A subgroup as a membership bitset over the parent's element indices.
struct Subgroup {
  GroupPtr parent;
  Bitset members;

  int order() const { return members.count(); }
  bool contains(elem_t x) const { return members.test(x); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole_group() const { return order() == parent->order(); }

  std::vector<elem_t> elements() const {
    std::vector<elem_t> out;
    for (int x : members.members()) out.push_back(static_cast<elem_t>(x));
    return out;
  }

  bool operator==(const Subgroup& o) const { return members == o.members; }
};

inline Subgroup trivial_subgroup(const GroupPtr& G) {
  Bitset b(G->order());
  b.set(0);
  return {G, b};
}

inline Subgroup whole_group(const GroupPtr& G) {
  return {G, Bitset::universe(G->order())};
}

inline Subgroup subgroup_generate(const GroupPtr& G, const std::vector<elem_t>& seeds) {
  return {G, detail::close_under_products(G->table(), G->order(), seeds)};
}

inline bool is_subgroup_abelian(const Subgroup& H) {
  auto els = H.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (H.parent->mul(els[i], els[j]) != H.parent->mul(els[j], els[i])) return false;
  return true;
}

inline Subgroup centralizer(const GroupPtr& G, const Bitset& set) {
  Bitset out(G->order());
  auto targets = set.members();
  for (int g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (int k : targets)
      if (G->mul(elem_t(g), elem_t(k)) != G->mul(elem_t(k), elem_t(g))) {
        ok = false;
        break;
      }
    if (ok) out.set(g);
  }
  add_work(std::uint64_t(G->order()) * std::max<std::size_t>(targets.size(), 1));
  return {G, out};
}

inline Subgroup center(const GroupPtr& G) {
  return centralizer(G, Bitset::universe(G->order()));
}

// Smallest normal subgroup containing the seeds: close under conjugation
// by all of G and under products, iterated to a fixpoint.
inline Subgroup normal_closure(const GroupPtr& G, const std::vector<elem_t>& seeds) {
  Bitset current = detail::close_under_products(G->table(), G->order(), seeds);
  while (true) {
    std::vector<elem_t> extended;
    for (int h : current.members())
      for (int g = 0; g < G->order(); ++g) {
        elem_t c = G->conj(elem_t(h), elem_t(g));
        if (!current.test(c)) extended.push_back(c);
      }
    add_work(std::uint64_t(current.count()) * G->order());
    if (extended.empty()) return {G, current};
    auto seeds2 = extended;
    for (int h : current.members()) seeds2.push_back(static_cast<elem_t>(h));
    current = detail::close_under_products(G->table(), G->order(), seeds2);
  }
}

inline bool is_normal(const Subgroup& H) {
  const auto& G = H.parent;
  for (int h : H.members.members())
    for (int g = 0; g < G->order(); ++g)
      if (!H.members.test(G->conj(elem_t(h), elem_t(g)))) return false;
  return true;
}

// Enumerates every subgroup: cyclic subgroups seed the pool, then closed
// one-element extensions are added until nothing new appears. Output is
// sorted by (order, membership bitset) so downstream scans are stable.
inline std::vector<Subgroup> enumerate_subgroups(const GroupPtr& G, const Config& cfg = Config{}) {
  if (G->order() > cfg.lattice_max_order)
    raise(errc::lattice_cap_exceeded,
          "subgroup enumeration capped at order " + std::to_string(cfg.lattice_max_order));

  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> pool;
  auto push = [&](Bitset b) {
    if (seen.insert(b).second) {
      pool.push_back(std::move(b));
      if (static_cast<long>(pool.size()) > cfg.max_subgroups)
        raise(errc::lattice_cap_exceeded, "subgroup count exceeds cap");
    }
  };

  push(detail::close_under_products(G->table(), G->order(), {}));
  for (int x = 1; x < G->order(); ++x)
    push(detail::close_under_products(G->table(), G->order(), {elem_t(x)}));

  for (std::size_t i = 0; i < pool.size(); ++i) {
    Bitset base = pool[i];  // copy: pool may reallocate
    if (base.count() == G->order()) continue;
    auto members = base.members();
    std::vector<elem_t> seeds(members.begin(), members.end());
    for (int x = 1; x < G->order(); ++x) {
      if (base.test(x)) continue;
      seeds.push_back(static_cast<elem_t>(x));
      push(detail::close_under_products(G->table(), G->order(), seeds));
      seeds.pop_back();
    }
  }

  std::vector<Subgroup> out;
  out.reserve(pool.size());
  for (auto& b : pool) out.push_back({G, std::move(b)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members.lex_less(b.members);
  });
  return out;
}

// Normal subgroups via normal closures of single elements, then closed
// one-closure joins. Cheaper than filtering the full lattice.
inline std::vector<Subgroup> normal_subgroups(const GroupPtr& G, const Config& cfg = Config{}) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> pool;
  auto push = [&](Bitset b) {
    if (seen.insert(b).second) pool.push_back(std::move(b));
  };
  push(trivial_subgroup(G).members);
  for (int x = 1; x < G->order(); ++x) push(normal_closure(G, {elem_t(x)}).members);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      // Join of two normal subgroups is the closure of their union.
      std::vector<elem_t> seeds;
      for (int v : pool[i].members()) seeds.push_back(static_cast<elem_t>(v));
      for (int v : pool[j].members()) seeds.push_back(static_cast<elem_t>(v));
      push(detail::close_under_products(G->table(), G->order(), seeds));
    }
  std::vector<Subgroup> out;
  for (auto& b : pool) out.push_back({G, std::move(b)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members.lex_less(b.members);
  });
  (void)cfg;
  return out;
}

// Minimal nontrivial normal subgroups.
inline std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& G,
                                                      const Config& cfg = Config{}) {
  auto all = normal_subgroups(G, cfg);
  std::vector<Subgroup> out;
  for (const auto& N : all) {
    if (N.order() == 1) continue;
    bool minimal = true;
    for (const auto& M : all) {
      if (M.order() == 1 || M.members == N.members) continue;
      if (M.members.subset_of(N.members)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(N);
  }
  return out;
}

// The monolith (socle bottom): intersection of all nontrivial normal
// subgroups, when it is itself nontrivial. A group with exactly one
// minimal normal subgroup has it as monolith.
inline std::optional<Subgroup> monolith(const GroupPtr& G, const Config& cfg = Config{}) {
  auto mins = minimal_normal_subgroups(G, cfg);
  if (mins.size() != 1) return std::nullopt;
  return mins[0];
}

// Lower central series of a subgroup H: gamma_1 = H,
// gamma_{i+1} = [gamma_i, H], until stable. Returns the series and the
// nilpotency class when the series reaches 1.
struct LowerCentralSeries {
  std::vector<Subgroup> terms;
  std::optional<int> nilpotency_class;
};

inline LowerCentralSeries lower_central_series(const Subgroup& H) {
  const auto& G = H.parent;
  LowerCentralSeries out;
  out.terms.push_back(H);
  while (true) {
    const Subgroup& gi = out.terms.back();
    if (gi.order() == 1) {
      out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
      break;
    }
    std::vector<elem_t> comms;
    for (int a : gi.members.members())
      for (int b : H.members.members()) comms.push_back(G->comm(elem_t(a), elem_t(b)));
    add_work(std::uint64_t(gi.order()) * H.order());
    Subgroup next = subgroup_generate(G, comms);
    if (next.members == gi.members) break;  // stabilized above 1: not nilpotent
    out.terms.push_back(next);
  }
  return out;
}

inline std::optional<int> nilpotency_class(const Subgroup& H) {
  return lower_central_series(H).nilpotency_class;
}

inline bool is_nilpotent_of_class_at_most(const Subgroup& H, int k) {
  auto c = nilpotency_class(H);
  return c.has_value() && *c <= k;
}

}  // namespace grpgeo
