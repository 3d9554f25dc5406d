#pragma once

#include <span>
#include <vector>

#include "ccperm/checked.hpp"

namespace ccperm {

using checked::Integer;
using checked::Natural;

// Unsigned Stirling numbers of the first kind c(n, k), 0 <= k <= n <= n_max,
// built from c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k). Every entry is exact:
// construction throws OverflowError naming the first (n, k) that does not
// fit in 64 bits, which happens first at n_max = 22.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return n_max_; }

  // Zero outside 0 <= k <= n. Throws InvalidArgument for n outside
  // 0..n_max.
  Natural operator()(int n, int k) const;

  // c(n, 0), ..., c(n, n).
  std::span<const Natural> row(int n) const;

 private:
  int n_max_;
  std::vector<std::vector<Natural>> rows_;
};

inline StirlingTable stirling_table(int n_max) { return StirlingTable(n_max); }

// (x+n-1)(x+n-2)...x; 1 when n = 0.
Natural rising_factorial(Natural x, Natural n);

// x(x-1)...(x-n+1); 1 when n = 0 and 0 when x < n.
Natural falling_factorial(Natural x, Natural n);

}  // namespace ccperm
