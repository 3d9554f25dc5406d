#include "ccperm/stirling.hpp"

#include <string>

#include "ccperm/error.hpp"

namespace ccperm {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw InvalidArgument("table size must be >= 0");
  rows_.reserve(n_max + 1);
  rows_.push_back({1});
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Natural>& prev = rows_.back();
    std::vector<Natural> row(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      const std::string where =
          "c(" + std::to_string(n) + "," + std::to_string(k) + ")";
      const Natural carried = k < n ? prev[k] : 0;
      row[k] = checked::add(
          prev[k - 1],
          checked::mul(static_cast<Natural>(n - 1), carried, where), where);
    }
    rows_.push_back(std::move(row));
  }
}

Natural StirlingTable::operator()(int n, int k) const {
  if (n < 0 || n > n_max_) {
    throw InvalidArgument("row " + std::to_string(n) + " outside table 0.." +
                          std::to_string(n_max_));
  }
  if (k < 0 || k > n) return 0;
  return rows_[n][k];
}

std::span<const Natural> StirlingTable::row(int n) const {
  if (n < 0 || n > n_max_) {
    throw InvalidArgument("row " + std::to_string(n) + " outside table 0.." +
                          std::to_string(n_max_));
  }
  return rows_[n];
}

Natural rising_factorial(Natural x, Natural n) {
  Natural r = 1;
  for (Natural t = 0; t < n; ++t) {
    r = checked::mul(r, checked::add(x, t, "rising factorial"),
                     "rising factorial");
  }
  return r;
}

Natural falling_factorial(Natural x, Natural n) {
  if (x < n) return 0;
  Natural r = 1;
  for (Natural t = 0; t < n; ++t) {
    r = checked::mul(r, x - t, "falling factorial");
  }
  return r;
}

}  // namespace ccperm
