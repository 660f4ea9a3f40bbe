#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace grpgeo {

// Resource caps shared by every operation that enumerates structure.
// CLI flags override environment variables, which override these defaults.
struct Config {
  // Largest group order accepted by constructors and file ingestion.
  int max_order = 128;

  // Subgroup-lattice enumeration caps.
  int lattice_max_order = 128;
  long max_subgroups = 50000;

  // Closure width: largest |U| for direct-power membership tests.
  int max_width = 4;

  // Element-operation budget per operation call: bounds the number of
  // tuples materialized by a direct-power closure or points enumerated
  // by a solution-set scan.
  std::uint64_t budget = 50'000'000;

  // Cap on the number of words a bounded enumeration may emit.
  std::uint64_t word_stream_cap = 5'000'000;

  // Orders up to this get the exhaustive associativity check; larger
  // tables get a seeded random sample with a hard error on failure.
  int assoc_exhaustive_cap = 256;

  static Config from_env();
};

namespace detail {
inline long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed <= 0) return fallback;
  return parsed;
}
}  // namespace detail

inline Config Config::from_env() {
  Config cfg;
  cfg.max_order = static_cast<int>(detail::env_long("GRPGEO_MAX_ORDER", cfg.max_order));
  cfg.lattice_max_order = cfg.max_order;
  cfg.max_subgroups = detail::env_long("GRPGEO_MAX_LATTICE", cfg.max_subgroups);
  cfg.max_width = static_cast<int>(detail::env_long("GRPGEO_MAX_WIDTH", cfg.max_width));
  cfg.budget = static_cast<std::uint64_t>(
      detail::env_long("GRPGEO_BUDGET", static_cast<long>(cfg.budget)));
  return cfg;
}

// Deterministic work accounting. Algorithms add coarse element-operation
// counts; verdicts snapshot the delta. Thread-local so parallel suite
// runs stay reproducible per subject.
inline thread_local std::uint64_t t_work_units = 0;

inline void add_work(std::uint64_t n) { t_work_units += n; }
inline std::uint64_t work_units() { return t_work_units; }

}  // namespace grpgeo
