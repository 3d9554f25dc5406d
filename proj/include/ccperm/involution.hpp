#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ccperm/coloring.hpp"
#include "ccperm/permutation.hpp"

namespace ccperm {

// A pair i < j whose cycles carry the same color. Ordered lexicographically
// (i first, then j).
struct Relation {
  Element i;
  Element j;

  auto operator<=>(const Relation&) const = default;
};

// Sorted, duplicate-free.
using RelationSet = std::vector<Relation>;

RelationSet relations(const CycleColoredPermutation& c);

// The lexicographically smallest relation, or nullopt when there is none.
// Computed without materializing the full relation set.
std::optional<Relation> minimal_relation(const CycleColoredPermutation& c);

// (-1)^(n - k(p))
int sign(const Permutation& p);

// The sign-reversing involution. With (i, j) the minimal relation, the result
// is ((i j) o pi, mu~) where every element keeps the color its cycle had
// before. Without a relation the input is a fixed point and returned as is.
CycleColoredPermutation phi(const CycleColoredPermutation& c);

}  // namespace ccperm
