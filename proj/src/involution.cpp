#include "ccperm/involution.hpp"

#include <map>

namespace ccperm {

RelationSet relations(const CycleColoredPermutation& c) {
  RelationSet out;
  const int n = c.size();
  for (Element i = 1; i <= n; ++i) {
    for (Element j = i + 1; j <= n; ++j) {
      if (c.color_of(i) == c.color_of(j)) out.push_back({i, j});
    }
  }
  return out;
}

// The smallest i that is not the last element of its color class, paired
// with the next element of that class.
std::optional<Relation> minimal_relation(const CycleColoredPermutation& c) {
  const int n = c.size();
  std::map<Label, Element> last_of_color;
  for (Element m = 1; m <= n; ++m) last_of_color[c.color_of(m)] = m;
  for (Element i = 1; i <= n; ++i) {
    const Label& s = c.color_of(i);
    if (last_of_color[s] == i) continue;
    for (Element j = i + 1; j <= n; ++j) {
      if (c.color_of(j) == s) return Relation{i, j};
    }
  }
  return std::nullopt;
}

int sign(const Permutation& p) {
  return (p.size() - cycle_count(p)) % 2 == 0 ? 1 : -1;
}

CycleColoredPermutation phi(const CycleColoredPermutation& c) {
  const std::optional<Relation> r = minimal_relation(c);
  if (!r) return c;
  Permutation next = apply_transposition(r->i, r->j, c.perm());
  // Merging or splitting happens inside one color class, so every new cycle
  // inherits a single well-defined color from any of its elements.
  CycleColoring coloring;
  for (const Cycle& cyc : cycle_decomposition(next).cycles) {
    coloring.emplace(cyc.front(), c.color_of(cyc.front()));
  }
  return CycleColoredPermutation(std::move(next), std::move(coloring));
}

}  // namespace ccperm
