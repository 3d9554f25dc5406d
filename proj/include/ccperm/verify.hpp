#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccperm/coloring.hpp"

// Exhaustive verifiers for the generating formulas
//
//   sum_{pi in S_n} x^k(pi)                = (x+n-1)...(x+1)x
//   sum_{pi in S_n} (-1)^(n-k(pi)) x^k(pi) = x(x-1)...(x-n+1)
//
// and for the two bijective arguments behind them: the sequence codec and the
// sign-reversing involution. All comparisons are exact integer equalities.
namespace ccperm {

// Enumeration guards. Going above them is a LimitExceeded error.
struct EnumerationLimits {
  int max_permutation_n = 8;  // eq1 / eq2 sweeps over S_n
  int max_colored_n = 6;      // bijection / involution sweeps
  int max_palette = 6;
};

// One exact comparison. pass is always (left == right).
struct Check {
  std::string name;
  std::string left;
  std::string right;
  bool pass = false;
};

struct VerificationReport {
  std::string identity;  // eq1 | eq2 | bijection | involution
  int n = 0;
  int x = 0;
  std::vector<Label> palette;  // colored verifiers only

  // The headline comparison; also the first entry of `checks`.
  std::string left;
  std::string right;

  // Cross-checks run alongside the headline comparison.
  std::vector<Check> checks;
  std::map<std::string, std::uint64_t> counts;
  // First counterexample found, if any.
  std::optional<std::string> witness;

  // Every check passed and no counterexample was seen.
  bool pass = false;
};

// Left side summed directly over S_n, and again as sum_k c(n,k) x^k; both
// against the rising factorial.
VerificationReport verify_unsigned(int n, int x,
                                   const EnumerationLimits& limits = {});

// Signed sum over S_n, sum_k (-1)^(n-k) c(n,k) x^k, and the rearranged form
// (even part) = (odd part) + falling factorial.
VerificationReport verify_signed(int n, int x,
                                 const EnumerationLimits& limits = {});

// encode is injective on all cycle-colored permutations over `pal`, lands in
// an independently enumerated set of injective sequences, covers it, and
// decode inverts it on both sides.
VerificationReport verify_bijection(int n, const Palette& pal,
                                    const EnumerationLimits& limits = {});

// phi is an involution whose fixed points are exactly the identity with an
// injective coloring, and which flips sign with |delta k| = 1 elsewhere.
VerificationReport verify_involution(int n, const Palette& pal,
                                     const EnumerationLimits& limits = {});

}  // namespace ccperm
