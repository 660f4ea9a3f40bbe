// Command-line front end: group construction and export, property
// checks, varieties and closures, coordinate groups, and corpus
// verification suites.
//
// Exit codes: 0 success; 1 a verification check failed; 2 usage or input
// error; 3 a cap or budget was exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "grpgeo/grpgeo.hpp"

using namespace grpgeo;

namespace {

struct CommonArgs {
  std::string group_path;
  std::string family;
  std::string mode_str = "coefficient";
  std::string format = "json";
  std::string out_path;
  int n_vars = 1;
  int k = 1;
  long max_order = -1, max_lattice = -1, max_width = -1, budget = -1;
};

void add_config_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--max-order", a.max_order, "largest accepted group order");
  cmd->add_option("--max-lattice", a.max_lattice, "subgroup lattice cap");
  cmd->add_option("--max-width", a.max_width, "coordinate-group width cap");
  cmd->add_option("--budget", a.budget, "element-operation budget");
}

void add_group_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--group", a.group_path, "group file (.gtab or .gperm)");
  cmd->add_option("--family", a.family,
                  "built-in family, e.g. cyclic:6, dihedral:8, alternating:5, "
                  "elementary-abelian:2^3, direct-product(cyclic:2,symmetric:3)");
  add_config_flags(cmd, a);
}

Config make_config(const CommonArgs& a) {
  Config cfg = Config::from_env();
  if (a.max_order >= 0) cfg.max_order = static_cast<int>(a.max_order);
  if (a.max_lattice >= 0) cfg.max_subgroups = a.max_lattice;
  if (a.max_width >= 0) cfg.max_width = static_cast<int>(a.max_width);
  if (a.budget >= 0) cfg.budget = a.budget;
  return cfg;
}

struct SubjectGroup {
  std::string id;
  GroupPtr group;
};

SubjectGroup load_group(const CommonArgs& a, const Config& cfg) {
  if (a.group_path.empty() == a.family.empty())
    raise(errc::bad_parameter, "exactly one of --group or --family is required");
  if (!a.group_path.empty()) return {a.group_path, ingest_group(a.group_path, cfg)};
  return {a.family, builtin(a.family, cfg)};
}

// Points are separated by ';', coordinates by ','. Each coordinate is an
// element label (or the g<i> fallback), trimmed of outer whitespace.
std::vector<Point> parse_points(const GroupPtr& G, const std::string& text, int n_vars) {
  auto trim = [](std::string s) {
    while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };
  std::vector<Point> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    std::string chunk =
        semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start);
    if (!trim(chunk).empty()) {
      Point p;
      std::size_t cs = 0;
      std::string rest = chunk;
      while (true) {
        auto comma = rest.find(',', cs);
        std::string coord =
            comma == std::string::npos ? rest.substr(cs) : rest.substr(cs, comma - cs);
        coord = trim(coord);
        int idx = G->find_label(coord);
        if (idx < 0) raise(errc::unknown_label, "no element labeled '" + coord + "'");
        p.push_back(static_cast<elem_t>(idx));
        if (comma == std::string::npos) break;
        cs = comma + 1;
      }
      if (static_cast<int>(p.size()) != n_vars)
        raise(errc::bad_parameter, "point has arity " + std::to_string(p.size()) +
                                       ", expected " + std::to_string(n_vars));
      out.push_back(std::move(p));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.empty()) raise(errc::bad_parameter, "no points given");
  return out;
}

std::vector<elem_t> parse_elements(const GroupPtr& G, const std::string& text) {
  auto pts = parse_points(G, text, 1);
  std::vector<elem_t> out;
  for (const auto& p : pts) out.push_back(p[0]);
  return out;
}

int write_output(const Report& rep, const CommonArgs& a) {
  std::string body = emit_report(rep, a.format);
  if (a.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(a.out_path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot write " + a.out_path);
    out << body;
  }
  return report_has_failures(rep) ? 1 : 0;
}

Report single_subject_report(const SubjectGroup& sg, const Config& cfg, Verdict v) {
  Report rep;
  rep.config = config_json(cfg);
  rep.subjects.push_back({sg.id, sg.group->order(), {std::move(v)}});
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic geometry over finite groups"};
  app.require_subcommand(1);

  CommonArgs a;

  // group: construct, describe, export
  auto* cmd_group = app.add_subcommand("group", "construct a group and describe or export it");
  add_group_flags(cmd_group, a);
  std::string export_path;
  cmd_group->add_option("--export", export_path, "write the group as .gtab");
  cmd_group->add_option("--format", a.format, "json or text");
  cmd_group->add_option("--out", a.out_path, "write the report here instead of stdout");

  // check <property>
  auto* cmd_check = app.add_subcommand("check", "decide a structural property");
  cmd_check->require_subcommand(1);
  std::string method_str = "all", subgroup_elems, element_label;
  struct CheckSub {
    CLI::App* cmd;
    std::string name;
  };
  std::vector<CheckSub> check_subs;
  for (const char* name : {"domain", "csa", "csnk", "ct", "ntk", "malnormal", "zero-divisor"}) {
    auto* c = cmd_check->add_subcommand(name, std::string("check ") + name);
    add_group_flags(c, a);
    c->add_option("--format", a.format, "json or text");
    c->add_option("--out", a.out_path, "write the report here");
    if (std::string(name) == "domain")
      c->add_option("--method", method_str, "zero-divisor, normal-centralizer, monolith, all");
    if (std::string(name) == "csnk" || std::string(name) == "ntk")
      c->add_option("-k,--k", a.k, "nilpotency class bound");
    if (std::string(name) == "malnormal")
      c->add_option("--subgroup", subgroup_elems, "generators of H, comma-separated labels");
    if (std::string(name) == "zero-divisor")
      c->add_option("--element", element_label, "the element to test");
    check_subs.push_back({c, name});
  }

  // variety / closure / irreducible / components
  std::string system_text, points_text;
  auto* cmd_variety = app.add_subcommand("variety", "solution set of an equation system");
  auto* cmd_closure = app.add_subcommand("closure", "closures of a finite point set");
  auto* cmd_irred = app.add_subcommand("irreducible", "irreducibility of a closed set");
  auto* cmd_comp = app.add_subcommand("components", "irreducible components of a closed set");
  for (auto* c : {cmd_variety, cmd_closure, cmd_irred, cmd_comp}) {
    add_group_flags(c, a);
    c->add_option("-n,--n", a.n_vars, "arity (number of variables)");
    c->add_option("--mode", a.mode_str, "coefficient or coefficient-free");
    c->add_option("--format", a.format, "json or text");
    c->add_option("--out", a.out_path, "write the report here");
    if (c != cmd_variety)
      c->add_option("--points", points_text, "points: coordinates by ',', points by ';'");
    c->add_option("--system", system_text, "equation system (words separated by ';')");
  }

  // coord
  auto* cmd_coord = app.add_subcommand("coord", "coordinate group of a point set");
  add_group_flags(cmd_coord, a);
  cmd_coord->add_option("-n,--n", a.n_vars, "arity");
  cmd_coord->add_option("--mode", a.mode_str, "coefficient or coefficient-free");
  cmd_coord->add_option("--points", points_text, "the point set Y");
  cmd_coord->add_option("--export", export_path, "write the carrier as .gtab");
  cmd_coord->add_option("--format", a.format, "json or text");
  cmd_coord->add_option("--out", a.out_path, "write the report here");

  // theorem1
  auto* cmd_t1 = app.add_subcommand("theorem1", "coordinate-group equivalence crosscheck");
  add_group_flags(cmd_t1, a);
  cmd_t1->add_option("-n,--n", a.n_vars, "arity");
  cmd_t1->add_option("--points", points_text, "the point set Y");
  cmd_t1->add_option("--format", a.format, "json or text");
  cmd_t1->add_option("--out", a.out_path, "write the report here");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run corpus verification suites");
  std::string suites_text =
      "domain-equivalence,theorem2:1,theorem2:2,theorem3,csa-ct,csnk-ntk:1,csnk-ntk:2,"
      "zariski-laws";
  int corpus_cap = 24, jobs = 1;
  VerifyOptions vopt;
  cmd_verify->add_option("--suites", suites_text, "comma-separated suite list");
  cmd_verify->add_option("--corpus-max-order", corpus_cap, "family sweep cap (default 24)");
  cmd_verify->add_option("--jobs", jobs, "parallel subjects");
  cmd_verify->add_option("--seed", vopt.seed, "sampling seed");
  cmd_verify->add_option("--pairs", vopt.theorem1_pairs, "two-point samples for theorem1");
  cmd_verify->add_option("--cases", vopt.zariski_cases, "randomized cases per zariski subject");
  cmd_verify->add_option("--format", a.format, "json or text");
  cmd_verify->add_option("--out", a.out_path, "write the report here");
  add_config_flags(cmd_verify, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // keep CLI11's help/version exit 0, fold every usage error onto 2
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg = make_config(a);

    if (*cmd_group) {
      auto sg = load_group(a, cfg);
      if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot write " + export_path);
        out << to_gtab(sg.group);
      }
      std::uint64_t w0 = work_units();
      Verdict v;
      v.property = "group";
      auto cls = nilpotency_class(whole_group(sg.group));
      v.holds = true;
      v.params = json{{"order", sg.group->order()},
                      {"abelian", sg.group->is_abelian()},
                      {"nilpotent", cls.has_value()},
                      {"center_order", center(sg.group).order()},
                      {"exponent", group_exponent(sg.group)},
                      {"provenance", sg.group->provenance()}};
      if (cls) v.params["nilpotency_class"] = *cls;
      if (!export_path.empty()) v.params["exported"] = export_path;
      v.micros = work_units() - w0;
      return write_output(single_subject_report(sg, cfg, std::move(v)), a);
    }

    if (*cmd_check) {
      auto sg = load_group(a, cfg);
      const auto& G = sg.group;
      std::uint64_t w0 = work_units();
      Verdict v;
      for (const auto& cs : check_subs) {
        if (!*cs.cmd) continue;
        if (cs.name == "domain") {
          auto method = domain_method_from_string(method_str);
          auto d = is_domain(G, method, cfg);
          v.property = "domain";
          v.holds = d.is_domain;
          v.params = json{{"method", domain_method_name(method)}};
          if (d.trivial_group) v.note = "trivial group: true by convention";
          if (d.zero_divisor)
            v.witnesses.push_back(json{{"kind", "zero-divisor"},
                                       {"x", element_json(G, d.zero_divisor->first)},
                                       {"y", element_json(G, d.zero_divisor->second)}});
          if (d.offending_normal)
            v.witnesses.push_back(json{{"kind", "normal-with-centralizer"},
                                       {"subgroup", subgroup_json(G, *d.offending_normal)}});
          if (d.monolith_members) v.params["monolith_order"] = d.monolith_members->count();
          if (!d.monolith_note.empty()) v.params["monolith_note"] = d.monolith_note;
        } else if (cs.name == "csa" || cs.name == "csnk") {
          SubgroupFamily fam = cs.name == "csa" ? SubgroupFamily::abelian
                                                : SubgroupFamily::nilpotent_class_at_most_k;
          auto r = is_conjugately_separated(G, fam, a.k, cfg);
          v.property = cs.name;
          v.holds = r.holds;
          v.params = json{{"maximal_members", r.maximal_count}};
          if (cs.name == "csnk") v.params["k"] = a.k;
          if (!r.holds && r.offending) {
            json w{{"kind", "not-malnormal"},
                   {"subgroup", subgroup_json(G, r.offending->members)}};
            if (r.malnormal_failure.conjugator)
              w["conjugator"] = element_json(G, *r.malnormal_failure.conjugator);
            if (r.malnormal_failure.intersection)
              w["intersection"] = subgroup_json(G, *r.malnormal_failure.intersection);
            v.witnesses.push_back(std::move(w));
          }
        } else if (cs.name == "ct") {
          auto r = is_commutative_transitive(G);
          v.property = "ct";
          v.holds = r.holds;
          if (r.witness) {
            auto [x, y, z] = *r.witness;
            v.witnesses.push_back(json{{"kind", "ct-failure"},
                                       {"a", element_json(G, x)},
                                       {"b", element_json(G, y)},
                                       {"c", element_json(G, z)}});
          }
        } else if (cs.name == "ntk") {
          auto r = has_ntk(G, a.k, cfg);
          v.property = "ntk";
          v.holds = r.holds;
          v.params = json{{"k", a.k}};
          if (!r.holds && r.witness_pair)
            v.witnesses.push_back(json{{"kind", "ntk-failure"},
                                       {"h1", subgroup_json(G, r.witness_pair->first.members)},
                                       {"h2", subgroup_json(G, r.witness_pair->second.members)},
                                       {"join", subgroup_json(G, r.join->members)}});
        } else if (cs.name == "malnormal") {
          if (subgroup_elems.empty())
            raise(errc::bad_parameter, "malnormal needs --subgroup generators");
          Subgroup H = subgroup_generate(G, parse_elements(G, subgroup_elems));
          auto r = is_malnormal(H);
          v.property = "malnormal";
          v.holds = r.malnormal;
          v.params = json{{"subgroup", subgroup_json(G, H.members)}};
          if (!r.malnormal) {
            json w{{"kind", "malnormal-failure"},
                   {"subgroup", subgroup_json(G, H.members)},
                   {"conjugator", element_json(G, *r.conjugator)},
                   {"intersection", subgroup_json(G, *r.intersection)}};
            v.witnesses.push_back(std::move(w));
          }
        } else if (cs.name == "zero-divisor") {
          if (element_label.empty())
            raise(errc::bad_parameter, "zero-divisor needs --element");
          elem_t x = parse_elements(G, element_label).at(0);
          auto r = is_zero_divisor(G, x, cfg);
          v.property = "zero-divisor";
          v.holds = r.is_zero_divisor;
          v.params = json{{"element", element_json(G, x)}};
          if (r.partner)
            v.witnesses.push_back(
                json{{"kind", "zero-divisor"}, {"x", element_json(G, x)},
                     {"y", element_json(G, *r.partner)}});
        }
      }
      v.micros = work_units() - w0;
      Report rep = single_subject_report(sg, cfg, std::move(v));
      // Property queries report the verdict; a false property is not a
      // failed check.
      std::string body = emit_report(rep, a.format);
      if (a.out_path.empty())
        std::cout << body;
      else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot write " + a.out_path);
        out << body;
      }
      return 0;
    }

    if (*cmd_variety || *cmd_closure || *cmd_irred || *cmd_comp) {
      auto sg = load_group(a, cfg);
      const auto& G = sg.group;
      GeometryMode mode = mode_from_string(a.mode_str);
      std::uint64_t w0 = work_units();

      std::vector<Point> pts;
      if (!system_text.empty()) {
        auto system = parse_system(G, system_text, a.n_vars);
        auto sol = solution_set(G, system, a.n_vars, mode, cfg);
        pts = sol.points;
      }
      if (!points_text.empty() && !*cmd_variety) {
        auto extra = parse_points(G, points_text, a.n_vars);
        pts.insert(pts.end(), extra.begin(), extra.end());
        sort_points(pts);
      }
      if (system_text.empty() && (points_text.empty() || *cmd_variety))
        raise(errc::bad_parameter, *cmd_variety ? "variety needs --system"
                                                : "need --points or --system");

      Verdict v;
      v.params = json{{"n", a.n_vars}, {"mode", mode_name(mode)}};
      if (*cmd_variety) {
        v.property = "variety";
        v.holds = true;
        v.params["size"] = pts.size();
        v.witnesses.push_back(json{{"kind", "points"}, {"points", points_json(G, pts)}});
      } else if (*cmd_closure) {
        v.property = "closure";
        auto alg = algebraic_closure(G, pts, a.n_vars, mode, cfg);
        auto top = topological_closure(G, pts, a.n_vars, mode, cfg);
        v.holds = true;
        v.params["input_size"] = pts.size();
        v.params["closure_size"] = alg.size();
        v.params["is_algebraic"] = alg == pts;
        v.witnesses.push_back(json{{"kind", "algebraic-closure"}, {"points", points_json(G, alg)}});
        if (top != alg)
          v.witnesses.push_back(
              json{{"kind", "topological-closure"}, {"points", points_json(G, top)}});
      } else if (*cmd_irred) {
        v.property = "irreducible";
        auto closed = topological_closure(G, pts, a.n_vars, mode, cfg);
        auto r = is_irreducible(G, closed, a.n_vars, mode, cfg);
        v.holds = r.irreducible;
        v.params["closed_size"] = closed.size();
        v.params["input_was_closed"] = closed == pts;
        if (r.generic_point)
          v.witnesses.push_back(
              json{{"kind", "generic-point"}, {"point", point_json(G, *r.generic_point)}});
      } else {
        v.property = "components";
        auto closed = topological_closure(G, pts, a.n_vars, mode, cfg);
        auto comps = irreducible_components(G, closed, a.n_vars, mode, cfg);
        v.holds = true;
        v.params["count"] = comps.size();
        v.params["input_was_closed"] = closed == pts;
        for (const auto& c : comps)
          v.witnesses.push_back(json{{"kind", "component"}, {"points", points_json(G, c)}});
      }
      v.micros = work_units() - w0;
      Report rep = single_subject_report(sg, cfg, std::move(v));
      std::string body = emit_report(rep, a.format);
      if (a.out_path.empty())
        std::cout << body;
      else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot write " + a.out_path);
        out << body;
      }
      return 0;
    }

    if (*cmd_coord) {
      auto sg = load_group(a, cfg);
      const auto& G = sg.group;
      GeometryMode mode = mode_from_string(a.mode_str);
      if (points_text.empty()) raise(errc::bad_parameter, "coord needs --points");
      auto Y = parse_points(G, points_text, a.n_vars);
      std::uint64_t w0 = work_units();
      auto C = coordinate_group(G, Y, a.n_vars, mode, cfg);
      Verdict v;
      v.property = "coord";
      v.holds = true;
      v.params = json{{"n", a.n_vars},
                      {"mode", mode_name(mode)},
                      {"width", C.width},
                      {"carrier_order", C.carrier->order()},
                      {"base_order", G->order()}};
      json vars = json::array();
      for (int i = 0; i < C.n_vars; ++i)
        vars.push_back(point_json(G, C.element_tuples[C.var_images[i]]));
      v.witnesses.push_back(json{{"kind", "variable-images"}, {"tuples", vars}});
      if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot write " + export_path);
        out << to_gtab(C.carrier);
        v.params["exported"] = export_path;
      }
      v.micros = work_units() - w0;
      Report rep = single_subject_report(sg, cfg, std::move(v));
      std::string body = emit_report(rep, a.format);
      if (a.out_path.empty())
        std::cout << body;
      else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) raise(errc::io_error, "cannot write " + a.out_path);
        out << body;
      }
      return 0;
    }

    if (*cmd_t1) {
      auto sg = load_group(a, cfg);
      const auto& G = sg.group;
      if (points_text.empty()) raise(errc::bad_parameter, "theorem1 needs --points");
      auto Y = parse_points(G, points_text, a.n_vars);
      std::uint64_t w0 = work_units();
      auto rep1 = theorem1_crosscheck(G, Y, a.n_vars, cfg);
      Verdict v;
      v.property = "theorem1";
      v.holds = rep1.all_agree;
      v.params = json{{"n", a.n_vars},
                      {"irreducible", rep1.irreducible},
                      {"gamma_G_domain", rep1.gamma_G_domain},
                      {"embedding_point", rep1.embedding_point_exists},
                      {"carrier_order", rep1.carrier_order},
                      {"closure_size", rep1.closure_size},
                      {"input_was_closed", rep1.input_was_closed},
                      {"agreement", json{{"12", rep1.agree_12},
                                         {"13", rep1.agree_13},
                                         {"23", rep1.agree_23}}}};
      if (rep1.generic_point)
        v.witnesses.push_back(
            json{{"kind", "generic-point"}, {"point", point_json(G, *rep1.generic_point)}});
      if (rep1.embedding_point)
        v.witnesses.push_back(
            json{{"kind", "embedding-point"}, {"point", point_json(G, *rep1.embedding_point)}});
      v.micros = work_units() - w0;
      return write_output(single_subject_report(sg, cfg, std::move(v)), a);
    }

    if (*cmd_verify) {
      vopt.jobs = jobs;
      std::vector<std::string> suites;
      std::size_t start = 0;
      while (start <= suites_text.size()) {
        auto comma = suites_text.find(',', start);
        std::string s = comma == std::string::npos ? suites_text.substr(start)
                                                   : suites_text.substr(start, comma - start);
        if (!s.empty()) suites.push_back(s);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      auto corpus = builtin_corpus(corpus_cap, cfg);
      Report rep = corpus_verify(corpus, suites, cfg, vopt);
      return write_output(rep, a);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";  // already prefixed with the error name
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
