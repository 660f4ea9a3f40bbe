#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "grpgeo/group.hpp"

namespace grpgeo {

// Text formats.
//
// .gtab: line 1 "gtab 1"; line 2 "order N"; optional line
// "labels l0 ... l_{N-1}"; then N rows of N indices, row i listing the
// products i*j. The identity must sit at index 0.
//
// .gperm: line 1 "gperm 1"; line 2 "degree D"; then one "gen (...)" line
// per generator, cycles 1-based.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::uint64_t content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

inline GroupPtr parse_gtab(const std::string& text, const std::string& origin,
                           const Config& cfg = Config{}) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](bool required) {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (!detail::split_ws(line).empty()) return true;
    }
    if (required)
      raise(errc::parse_error, origin + ": truncated at line " + std::to_string(lineno));
    return false;
  };

  next_line(true);
  auto head = detail::split_ws(line);
  if (head.size() != 2 || head[0] != "gtab" || head[1] != "1")
    raise(errc::parse_error, origin + ": expected 'gtab 1' header");

  next_line(true);
  auto ord = detail::split_ws(line);
  if (ord.size() != 2 || ord[0] != "order")
    raise(errc::parse_error, origin + ": expected 'order N'");
  int n = 0;
  try {
    n = std::stoi(ord[1]);
  } catch (...) {
    raise(errc::parse_error, origin + ": bad order");
  }
  if (n < 1) raise(errc::parse_error, origin + ": order must be positive");

  next_line(true);
  auto toks = detail::split_ws(line);
  std::vector<std::string> labels;
  if (!toks.empty() && toks[0] == "labels") {
    if (static_cast<int>(toks.size()) != n + 1)
      raise(errc::parse_error, origin + ": labels line needs exactly " + std::to_string(n) +
                                   " entries");
    labels.assign(toks.begin() + 1, toks.end());
    next_line(true);
    toks = detail::split_ws(line);
  }

  std::vector<std::vector<int>> table;
  while (true) {
    if (static_cast<int>(toks.size()) != n)
      raise(errc::parse_error,
            origin + ": row " + std::to_string(table.size()) + " needs " + std::to_string(n) +
                " entries (line " + std::to_string(lineno) + ")");
    std::vector<int> row;
    for (const auto& t : toks) {
      try {
        row.push_back(std::stoi(t));
      } catch (...) {
        raise(errc::parse_error, origin + ": bad index '" + t + "'");
      }
    }
    table.push_back(std::move(row));
    if (static_cast<int>(table.size()) == n) break;
    next_line(true);
    toks = detail::split_ws(line);
  }

  for (int j = 0; j < n; ++j)
    if (table[0][j] != j || table[j][0] != j)
      raise(errc::parse_error, origin + ": identity must be index 0");

  return detail::validate_and_build(std::move(table), std::move(labels), origin, cfg);
}

inline GroupPtr parse_gperm(const std::string& text, const std::string& origin,
                            const Config& cfg = Config{}) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> meaningful;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) meaningful.push_back(line);
  }
  if (meaningful.size() < 2) raise(errc::parse_error, origin + ": truncated");
  auto head = detail::split_ws(meaningful[0]);
  if (head.size() != 2 || head[0] != "gperm" || head[1] != "1")
    raise(errc::parse_error, origin + ": expected 'gperm 1' header");
  auto deg = detail::split_ws(meaningful[1]);
  if (deg.size() != 2 || deg[0] != "degree")
    raise(errc::parse_error, origin + ": expected 'degree D'");
  int degree = 0;
  try {
    degree = std::stoi(deg[1]);
  } catch (...) {
    raise(errc::parse_error, origin + ": bad degree");
  }
  if (degree < 1 || degree > 255) raise(errc::parse_error, origin + ": degree out of range");

  std::vector<Perm> gens;
  for (std::size_t i = 2; i < meaningful.size(); ++i) {
    const std::string& l = meaningful[i];
    auto pos = l.find("gen");
    if (pos == std::string::npos || !detail::split_ws(l.substr(0, pos)).empty())
      raise(errc::parse_error, origin + ": expected 'gen (...)' line");
    gens.push_back(perm_from_cycles(l.substr(pos + 3), degree));
  }
  if (gens.empty()) raise(errc::parse_error, origin + ": no generators");
  return from_permutation_generators(degree, gens, cfg);
}

// Dispatches on the header line, so the extension is advisory only.
inline GroupPtr ingest_group_text(const std::string& text, const std::string& origin,
                                  const Config& cfg = Config{}) {
  std::istringstream in(text);
  std::string first;
  while (std::getline(in, first)) {
    auto hash = first.find('#');
    if (hash != std::string::npos) first.erase(hash);
    if (!detail::split_ws(first).empty()) break;
  }
  auto toks = detail::split_ws(first);
  std::string tag = origin + "#" + std::to_string(detail::content_hash(text) & 0xFFFFFFFFull);
  if (!toks.empty() && toks[0] == "gtab") return parse_gtab(text, tag, cfg);
  if (!toks.empty() && toks[0] == "gperm") return parse_gperm(text, tag, cfg);
  raise(errc::parse_error, origin + ": unknown format (expected gtab or gperm header)");
}

inline GroupPtr ingest_group(const std::string& path, const Config& cfg = Config{}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_group_text(buf.str(), path, cfg);
}

// Exports the multiplication table. The labels line is written only when
// every label is whitespace-free, since the format has no quoting.
inline std::string to_gtab(const GroupPtr& G) {
  std::ostringstream out;
  out << "gtab 1\n";
  out << "order " << G->order() << "\n";
  if (G->has_labels()) {
    bool clean = true;
    for (int i = 0; i < G->order(); ++i)
      for (char c : G->label(elem_t(i)))
        if (isspace(static_cast<unsigned char>(c))) clean = false;
    if (clean) {
      out << "labels";
      for (int i = 0; i < G->order(); ++i) out << " " << G->label(elem_t(i));
      out << "\n";
    }
  }
  for (int i = 0; i < G->order(); ++i) {
    for (int j = 0; j < G->order(); ++j) {
      if (j) out << " ";
      out << static_cast<int>(G->mul(elem_t(i), elem_t(j)));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace grpgeo
