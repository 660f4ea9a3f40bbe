#pragma once

#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "grpgeo/coordinate.hpp"
#include "grpgeo/corpus.hpp"
#include "grpgeo/properties.hpp"
#include "grpgeo/report.hpp"
#include "grpgeo/zariski.hpp"

namespace grpgeo {

// A verification suite runs one claim per subject. Supported:
//   domain-equivalence    the three domain characterizations agree
//   theorem1              coordinate-group crosscheck on domain subjects
//   theorem2:k            CSN_k and not nilpotent implies domain
//   theorem3              malnormal maximal nilpotents imply domain
//   csa-ct                CSA implies commutative transitivity; CSA = CSN_1
//   csnk-ntk:k            CSN_k implies NT_k
//   zariski-laws          closure laws and V(S1 u S2) = V(S1) n V(S2)
struct SuiteSpec {
  std::string name;
  int k = 1;
};

inline SuiteSpec parse_suite(const std::string& text) {
  SuiteSpec s;
  auto colon = text.find(':');
  s.name = colon == std::string::npos ? text : text.substr(0, colon);
  if (colon != std::string::npos) {
    try {
      s.k = std::stoi(text.substr(colon + 1));
    } catch (...) {
      raise(errc::bad_parameter, "bad suite parameter in " + text);
    }
    if (s.k < 1) raise(errc::bad_parameter, "suite parameter must be positive");
  }
  static const char* known[] = {"domain-equivalence", "theorem1", "theorem2", "theorem3",
                                "csa-ct",             "csnk-ntk", "zariski-laws"};
  for (const char* k : known)
    if (s.name == k) return s;
  raise(errc::bad_parameter, "unknown suite: " + s.name);
}

// Tuning knobs for suites that sample.
struct VerifyOptions {
  std::uint64_t seed = 20260815;
  int theorem1_pairs = 20;       // sampled two-point sets per domain subject
  int zariski_cases = 16;        // randomized law cases per small subject
  int zariski_max_order = 8;     // subjects above this skip zariski-laws
  int jobs = 1;
};

namespace detail {

inline std::uint64_t id_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// --- individual suites -------------------------------------------------------

inline Verdict suite_domain_equivalence(const GroupPtr& G, const Config& cfg) {
  Verdict v;
  v.property = "domain-equivalence";
  auto d = is_domain(G, DomainMethod::all, cfg);  // raises on disagreement
  v.holds = true;
  v.params = json{{"method", "all"}, {"domain", d.is_domain}, {"trivial", d.trivial_group}};
  if (!d.is_domain) {
    if (d.zero_divisor) {
      auto [x, y] = *d.zero_divisor;
      if (!revalidate_zero_divisor(G, x, y)) {
        v.holds = false;
        v.note = "zero-divisor witness failed revalidation";
      }
      v.witnesses.push_back(json{{"kind", "zero-divisor"},
                                 {"x", element_json(G, x)},
                                 {"y", element_json(G, y)}});
    }
    if (d.offending_normal)
      v.witnesses.push_back(json{{"kind", "normal-with-centralizer"},
                                 {"subgroup", subgroup_json(G, *d.offending_normal)}});
  }
  if (d.monolith_members)
    v.params["monolith_order"] = d.monolith_members->count();
  return v;
}

inline Verdict suite_theorem2(const GroupPtr& G, int k, const Config& cfg) {
  Verdict v;
  v.property = "theorem2";
  auto r = theorem2_check(G, k, cfg);
  v.holds = r.holds;
  v.params = json{{"k", k}, {"antecedent", r.antecedent}};
  if (!r.holds && r.domain) {
    if (r.domain->zero_divisor) {
      auto [x, y] = *r.domain->zero_divisor;
      v.witnesses.push_back(json{{"kind", "zero-divisor"},
                                 {"x", element_json(G, x)},
                                 {"y", element_json(G, y)},
                                 {"revalidated", revalidate_zero_divisor(G, x, y)}});
    }
    if (r.domain->offending_normal)
      v.witnesses.push_back(json{{"kind", "normal-with-centralizer"},
                                 {"subgroup", subgroup_json(G, *r.domain->offending_normal)}});
  }
  return v;
}

inline Verdict suite_theorem3(const GroupPtr& G, const Config& cfg) {
  Verdict v;
  v.property = "theorem3";
  auto r = theorem3_check(G, cfg);
  v.holds = r.holds;
  v.params = json{{"antecedent", r.antecedent}};
  v.note = r.note;
  if (!r.holds && r.domain && r.domain->zero_divisor) {
    auto [x, y] = *r.domain->zero_divisor;
    v.witnesses.push_back(json{{"kind", "zero-divisor"},
                               {"x", element_json(G, x)},
                               {"y", element_json(G, y)},
                               {"revalidated", revalidate_zero_divisor(G, x, y)}});
  }
  return v;
}

inline Verdict suite_csa_ct(const GroupPtr& G, const Config& cfg) {
  Verdict v;
  v.property = "csa-ct";
  auto csa = is_conjugately_separated(G, SubgroupFamily::abelian, 1, cfg);
  auto csn1 = is_conjugately_separated(G, SubgroupFamily::nilpotent_class_at_most_k, 1, cfg);
  auto ct = is_commutative_transitive(G);
  bool implication = !(csa.holds && !ct.holds);
  bool same = csa.holds == csn1.holds;
  v.holds = implication && same;
  v.params = json{{"csa", csa.holds}, {"csn1", csn1.holds}, {"ct", ct.holds},
                  {"antecedent", csa.holds}};
  if (!implication && ct.witness) {
    auto [a, b, c] = *ct.witness;
    v.witnesses.push_back(json{{"kind", "ct-failure"},
                               {"a", element_json(G, a)},
                               {"b", element_json(G, b)},
                               {"c", element_json(G, c)},
                               {"revalidated", revalidate_ct_failure(G, a, b, c)}});
  }
  if (!same) v.note = "CSA and CSN_1 verdicts differ";
  return v;
}

inline Verdict suite_csnk_ntk(const GroupPtr& G, int k, const Config& cfg) {
  Verdict v;
  v.property = "csnk-ntk";
  auto cs = is_conjugately_separated(G, SubgroupFamily::nilpotent_class_at_most_k, k, cfg);
  auto nt = has_ntk(G, k, cfg);
  v.holds = !(cs.holds && !nt.holds);
  v.params = json{{"k", k}, {"csnk", cs.holds}, {"ntk", nt.holds}, {"antecedent", cs.holds}};
  if (!*v.holds && nt.witness_pair) {
    v.witnesses.push_back(
        json{{"kind", "ntk-failure"},
             {"h1", subgroup_json(G, nt.witness_pair->first.members)},
             {"h2", subgroup_json(G, nt.witness_pair->second.members)},
             {"join", subgroup_json(G, nt.join->members)},
             {"revalidated",
              revalidate_ntk_failure(G, nt.witness_pair->first, nt.witness_pair->second, k)}});
  }
  return v;
}

inline Verdict suite_theorem1(const GroupPtr& G, const VerifyOptions& opt, const Config& cfg) {
  Verdict v;
  v.property = "theorem1";
  v.params = json{{"n", 1}};
  auto dom = is_domain(G, DomainMethod::all, cfg);
  if (!dom.is_domain) {
    v.skipped = true;
    v.note = "NotADomain: the equivalence is stated for domains";
    return v;
  }

  std::vector<std::vector<Point>> cases;
  for (int p = 0; p < G->order(); ++p) cases.push_back({Point{elem_t(p)}});
  long pair_total = static_cast<long>(G->order()) * (G->order() - 1) / 2;
  std::mt19937_64 rng(opt.seed ^ id_hash(G->provenance()));
  std::set<std::pair<int, int>> chosen;
  if (pair_total <= opt.theorem1_pairs) {
    for (int a = 0; a < G->order(); ++a)
      for (int b = a + 1; b < G->order(); ++b) chosen.emplace(a, b);
  } else {
    while (static_cast<int>(chosen.size()) < opt.theorem1_pairs) {
      int a = static_cast<int>(rng() % G->order());
      int b = static_cast<int>(rng() % G->order());
      if (a == b) continue;
      chosen.emplace(std::min(a, b), std::max(a, b));
    }
  }
  for (auto [a, b] : chosen) cases.push_back({Point{elem_t(a)}, Point{elem_t(b)}});

  int agree = 0, irreducible_count = 0, gdomain_count = 0, embed_count = 0;
  v.holds = true;
  for (const auto& Y : cases) {
    auto rep = theorem1_crosscheck(G, Y, 1, cfg);
    irreducible_count += rep.irreducible;
    gdomain_count += rep.gamma_G_domain;
    embed_count += rep.embedding_point_exists;
    if (rep.all_agree) {
      ++agree;
    } else {
      v.holds = false;
      v.witnesses.push_back(json{{"kind", "theorem1-disagreement"},
                                 {"Y", points_json(G, Y)},
                                 {"irreducible", rep.irreducible},
                                 {"gamma_G_domain", rep.gamma_G_domain},
                                 {"embedding_point", rep.embedding_point_exists},
                                 {"carrier_order", rep.carrier_order}});
    }
  }
  v.params["singletons"] = G->order();
  v.params["pairs"] = chosen.size();
  v.params["cases"] = cases.size();
  v.params["agree"] = agree;
  v.params["matrix"] = json{{"irreducible", irreducible_count},
                            {"gamma_G_domain", gdomain_count},
                            {"embedding_point", embed_count}};
  return v;
}

inline Word random_word(const GroupPtr& G, std::mt19937_64& rng, int n_vars, GeometryMode mode) {
  int len = 1 + static_cast<int>(rng() % 3);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    bool make_const = mode == GeometryMode::coefficient && G->order() > 1 && rng() % 3 == 0;
    if (make_const)
      ls.push_back({0, 0, elem_t(1 + rng() % (G->order() - 1))});
    else {
      int var = 1 + static_cast<int>(rng() % n_vars);
      long exps[4] = {1, -1, 2, -2};
      ls.push_back({var, exps[rng() % 4], 0});
    }
  }
  return Word::from_letters(G, std::move(ls));
}

inline Verdict suite_zariski_laws(const GroupPtr& G, const VerifyOptions& opt,
                                  const Config& cfg) {
  Verdict v;
  v.property = "zariski-laws";
  if (G->order() > opt.zariski_max_order) {
    v.skipped = true;
    v.note = "restricted to subjects of order <= " + std::to_string(opt.zariski_max_order);
    return v;
  }
  std::mt19937_64 rng(opt.seed ^ id_hash(G->provenance()));
  v.holds = true;
  int cases = 0;
  auto subset_of = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (int c = 0; c < opt.zariski_cases; ++c) {
    int n = 1 + static_cast<int>(rng() % 2);
    GeometryMode mode = rng() % 2 ? GeometryMode::coefficient : GeometryMode::coefficient_free;
    auto space = all_points(G, n, cfg);
    auto pick_point = [&] { return space[rng() % space.size()]; };
    std::vector<Point> Y;
    int size = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < size; ++i) Y.push_back(pick_point());
    sort_points(Y);

    auto fail = [&](const std::string& law) {
      v.holds = false;
      v.witnesses.push_back(json{{"kind", "law-violation"},
                                 {"law", law},
                                 {"case", c},
                                 {"n", n},
                                 {"mode", mode_name(mode)},
                                 {"Y", points_json(G, Y)}});
    };

    auto alg = algebraic_closure(G, Y, n, mode, cfg);
    auto top = topological_closure(G, Y, n, mode, cfg);
    if (!subset_of(Y, alg) || !subset_of(Y, top)) fail("extensive");
    if (!subset_of(top, alg)) fail("topological-within-algebraic");
    if (algebraic_closure(G, alg, n, mode, cfg) != alg) fail("idempotent-algebraic");
    if (topological_closure(G, top, n, mode, cfg) != top) fail("idempotent-topological");

    std::vector<Point> Y2 = Y;
    Y2.push_back(pick_point());
    sort_points(Y2);
    if (!subset_of(alg, algebraic_closure(G, Y2, n, mode, cfg))) fail("monotone-algebraic");
    if (!subset_of(top, topological_closure(G, Y2, n, mode, cfg))) fail("monotone-topological");

    std::vector<Word> s1, s2;
    for (int i = 0, m = 1 + int(rng() % 2); i < m; ++i)
      s1.push_back(random_word(G, rng, n, mode));
    for (int i = 0, m = 1 + int(rng() % 2); i < m; ++i)
      s2.push_back(random_word(G, rng, n, mode));
    auto v1 = solution_set(G, s1, n, mode, cfg);
    auto v2 = solution_set(G, s2, n, mode, cfg);
    std::vector<Word> s12 = s1;
    s12.insert(s12.end(), s2.begin(), s2.end());
    auto v12 = solution_set(G, s12, n, mode, cfg);
    std::vector<Point> meet;
    std::set_intersection(v1.points.begin(), v1.points.end(), v2.points.begin(), v2.points.end(),
                          std::back_inserter(meet));
    if (v12.points != meet) fail("system-union-is-intersection");
    ++cases;
  }
  v.params = json{{"cases", cases}};
  return v;
}

inline std::vector<Verdict> run_subject(const CorpusEntry& entry,
                                        const std::vector<SuiteSpec>& suites,
                                        const VerifyOptions& opt, const Config& cfg) {
  std::vector<Verdict> out;
  for (const auto& s : suites) {
    std::uint64_t w0 = work_units();
    Verdict v;
    try {
      if (s.name == "domain-equivalence")
        v = suite_domain_equivalence(entry.group, cfg);
      else if (s.name == "theorem1")
        v = suite_theorem1(entry.group, opt, cfg);
      else if (s.name == "theorem2")
        v = suite_theorem2(entry.group, s.k, cfg);
      else if (s.name == "theorem3")
        v = suite_theorem3(entry.group, cfg);
      else if (s.name == "csa-ct")
        v = suite_csa_ct(entry.group, cfg);
      else if (s.name == "csnk-ntk")
        v = suite_csnk_ntk(entry.group, s.k, cfg);
      else if (s.name == "zariski-laws")
        v = suite_zariski_laws(entry.group, opt, cfg);
    } catch (const Error& e) {
      v.property = s.name;
      if (e.code() == errc::characterization_disagreement) {
        v.holds = false;
        v.note = e.what();
      } else {
        v.skipped = true;
        v.holds.reset();
        v.note = std::string(errc_name(e.code())) + ": " + e.what();
      }
    }
    if (s.name == "theorem2" || s.name == "csnk-ntk") v.params["k"] = s.k;
    v.micros = work_units() - w0;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

inline Report corpus_verify(const std::vector<CorpusEntry>& corpus,
                            const std::vector<std::string>& suite_names,
                            const Config& cfg = Config{},
                            const VerifyOptions& opt = VerifyOptions{}) {
  std::vector<SuiteSpec> suites;
  for (const auto& s : suite_names) suites.push_back(parse_suite(s));

  Report rep;
  rep.config = config_json(cfg);
  {
    json names = json::array();
    for (const auto& s : suite_names) names.push_back(s);
    rep.config["suites"] = names;
    rep.config["seed"] = opt.seed;
    rep.config["corpus_size"] = corpus.size();
  }

  std::vector<std::vector<Verdict>> results(corpus.size());
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      results[i] = detail::run_subject(corpus[i], suites, opt, cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < corpus.size(); i = next++)
            results[i] = detail::run_subject(corpus[i], suites, opt, cfg);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < corpus.size(); ++i)
    rep.subjects.push_back({corpus[i].id, corpus[i].group->order(), std::move(results[i])});
  return rep;
}

}  // namespace grpgeo
