#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grpgeo/group.hpp"

namespace grpgeo {

struct CorpusEntry {
  std::string id;
  GroupPtr group;
};

// The standard verification corpus: every built-in family up to order 24,
// dihedral and dicyclic continued to 32, and A5. Deduplicated by
// (order, multiplication-table hash), so coincidences like the order-2
// dihedral group collapse onto their cyclic twins. Sorted by (order, id).
inline std::vector<CorpusEntry> builtin_corpus(int family_cap = 24,
                                               const Config& cfg = Config{}) {
  std::vector<CorpusEntry> out;
  std::set<std::pair<int, std::uint64_t>> seen;
  auto push = [&](const std::string& id, GroupPtr g) {
    if (seen.emplace(g->order(), g->table_hash()).second) out.push_back({id, std::move(g)});
  };

  for (int n = 1; n <= family_cap; ++n)
    push("cyclic:" + std::to_string(n), builtin_cyclic(n, cfg));
  for (int m = 2; m <= std::max(family_cap, 32); m += 2)
    push("dihedral:" + std::to_string(m), builtin_dihedral(m, cfg));
  for (int m = 8; m <= std::max(family_cap, 32); m += 4)
    push("dicyclic:" + std::to_string(m), builtin_dicyclic(m, cfg));
  for (int n = 1; n <= 8; ++n) {
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact <= family_cap)
      push("symmetric:" + std::to_string(n), builtin_symmetric(n, cfg));
    if (fact / 2 <= family_cap && n >= 3)
      push("alternating:" + std::to_string(n), builtin_alternating(n, cfg));
  }
  push("alternating:5", builtin_alternating(5, cfg));
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
    for (int k = 1;; ++k) {
      long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      if (order > family_cap) break;
      push("elementary-abelian:" + std::to_string(p) + "^" + std::to_string(k),
           builtin_elementary_abelian(p, k, cfg));
    }

  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.group->order() != b.group->order()) return a.group->order() < b.group->order();
    return a.id < b.id;
  });
  return out;
}

}  // namespace grpgeo
