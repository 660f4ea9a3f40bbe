#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "grpgeo/config.hpp"
#include "grpgeo/properties.hpp"
#include "grpgeo/zariski.hpp"

namespace grpgeo {

inline constexpr const char* kToolName = "grpgeo";
inline constexpr const char* kToolVersion = "1.0.0";

using json = nlohmann::json;

// One property check on one subject. holds is absent while skipped;
// micros counts deterministic work units, not wall time, so identical
// runs emit identical reports.
struct Verdict {
  std::string property;
  json params = json::object();
  std::optional<bool> holds;
  json witnesses = json::array();
  bool skipped = false;
  std::string note;
  std::uint64_t micros = 0;
};

struct Subject {
  std::string id;
  int order = 0;
  std::vector<Verdict> verdicts;
};

struct Report {
  json config = json::object();
  std::vector<Subject> subjects;
};

// --- JSON helpers for witnesses ---------------------------------------------

inline json element_json(const GroupPtr& G, elem_t x) {
  return json{{"index", int(x)}, {"label", G->label(x)}};
}

inline json subgroup_json(const GroupPtr& G, const Bitset& members) {
  json elems = json::array();
  for (int x : members.members()) elems.push_back(G->label(elem_t(x)));
  return json{{"order", members.count()}, {"elements", elems}};
}

inline json point_json(const GroupPtr& G, const Point& p) {
  json out = json::array();
  for (elem_t x : p) out.push_back(G->label(x));
  return out;
}

inline json points_json(const GroupPtr& G, const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_json(G, p));
  return out;
}

inline json config_json(const Config& cfg) {
  return json{{"max_order", cfg.max_order},
              {"max_lattice", cfg.max_subgroups},
              {"max_width", cfg.max_width},
              {"budget", cfg.budget}};
}

inline json verdict_json(const Verdict& v) {
  json out;
  out["property"] = v.property;
  out["params"] = v.params;
  out["holds"] = v.holds.has_value() ? json(*v.holds) : json(nullptr);
  out["witnesses"] = v.witnesses;
  out["skipped"] = v.skipped;
  out["micros"] = v.micros;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

inline json report_json(const Report& r) {
  json subjects = json::array();
  std::uint64_t n_verdicts = 0, n_true = 0, n_false = 0, n_skipped = 0;
  json antecedents = json::object();
  for (const auto& s : r.subjects) {
    json verdicts = json::array();
    for (const auto& v : s.verdicts) {
      verdicts.push_back(verdict_json(v));
      ++n_verdicts;
      if (v.skipped)
        ++n_skipped;
      else if (v.holds.value_or(false))
        ++n_true;
      else
        ++n_false;
      if (v.params.contains("antecedent") && v.params["antecedent"].is_boolean() &&
          v.params["antecedent"].get<bool>()) {
        std::string key = v.property;
        antecedents[key] = antecedents.value(key, 0) + 1;
      }
    }
    subjects.push_back(json{{"id", s.id}, {"order", s.order}, {"verdicts", verdicts}});
  }
  json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["config"] = r.config;
  out["subjects"] = subjects;
  out["aggregates"] = json{{"subjects", r.subjects.size()},
                           {"verdicts", n_verdicts},
                           {"holds_true", n_true},
                           {"holds_false", n_false},
                           {"skipped", n_skipped},
                           {"antecedent_true", antecedents}};
  return out;
}

inline bool report_has_failures(const Report& r) {
  for (const auto& s : r.subjects)
    for (const auto& v : s.verdicts)
      if (!v.skipped && v.holds.has_value() && !*v.holds) return true;
  return false;
}

inline std::string emit_report(const Report& r, const std::string& format) {
  json j = report_json(r);
  if (format == "json") return j.dump(2) + "\n";
  if (format != "text") raise(errc::bad_parameter, "unknown report format: " + format);

  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + "\n";
  for (const auto& s : r.subjects) {
    out += s.id + " (order " + std::to_string(s.order) + ")\n";
    for (const auto& v : s.verdicts) {
      out += "  " + v.property;
      if (!v.params.empty()) out += " " + v.params.dump();
      if (v.skipped)
        out += " = skipped";
      else
        out += std::string(" = ") + (*v.holds ? "true" : "false");
      out += " [work " + std::to_string(v.micros) + "]";
      if (!v.note.empty()) out += " (" + v.note + ")";
      out += "\n";
      if (!v.witnesses.empty()) out += "    witnesses: " + v.witnesses.dump() + "\n";
    }
  }
  const auto agg = j["aggregates"];
  out += "verdicts " + std::to_string(agg["verdicts"].get<std::uint64_t>()) + ", true " +
         std::to_string(agg["holds_true"].get<std::uint64_t>()) + ", false " +
         std::to_string(agg["holds_false"].get<std::uint64_t>()) + ", skipped " +
         std::to_string(agg["skipped"].get<std::uint64_t>()) + "\n";
  return out;
}

}  // namespace grpgeo
