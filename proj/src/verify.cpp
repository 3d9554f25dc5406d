#include "ccperm/verify.hpp"

#include <functional>
#include <set>

#include "ccperm/codec.hpp"
#include "ccperm/error.hpp"
#include "ccperm/involution.hpp"
#include "ccperm/stirling.hpp"

namespace ccperm {
namespace {

template <typename L, typename R>
Check make_check(std::string name, L left, R right) {
  Check c{std::move(name), std::to_string(left), std::to_string(right), false};
  c.pass = c.left == c.right;
  return c;
}

void finish(VerificationReport& r) {
  r.left = r.checks.front().left;
  r.right = r.checks.front().right;
  r.pass = !r.witness;
  for (const Check& c : r.checks) r.pass = r.pass && c.pass;
}

void note_witness(VerificationReport& r, const std::string& what) {
  if (!r.witness) r.witness = what;
}

void check_range(int n, int x) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (x < 0) throw InvalidArgument("x must be >= 0");
}

void check_colored_limits(int n, const Palette& pal,
                          const EnumerationLimits& limits) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (n > limits.max_colored_n) {
    throw LimitExceeded("n = " + std::to_string(n) +
                        " exceeds the colored enumeration limit " +
                        std::to_string(limits.max_colored_n));
  }
  if (static_cast<int>(pal.size()) > limits.max_palette) {
    throw LimitExceeded("palette size " + std::to_string(pal.size()) +
                        " exceeds the limit " +
                        std::to_string(limits.max_palette));
  }
}

// Calls fn on every cycle-colored permutation of [n] over pal.
void for_each_colored(int n, const Palette& pal, int max_n,
                      const std::function<void(const CycleColoredPermutation&)>& fn) {
  for (const Permutation& p : enumerate_permutations(n, max_n)) {
    for (const CycleColoredPermutation& c : enumerate_colorings(p, pal)) fn(c);
  }
}

// All injective words of length n over {2..n} + pal, built position by
// position. Shares nothing with the codec beyond the sequence type.
std::set<EncodedSequence> all_sequences(int n, const Palette& pal) {
  std::vector<SequenceElement> alphabet;
  for (Element v = 2; v <= n; ++v) alphabet.emplace_back(v);
  for (const Label& s : pal.letters()) alphabet.emplace_back(Letter{s});

  std::set<EncodedSequence> out;
  std::vector<SequenceElement> word;
  std::vector<bool> used(alphabet.size(), false);
  std::function<void()> extend = [&] {
    if (static_cast<int>(word.size()) == n) {
      out.emplace(word);
      return;
    }
    for (std::size_t t = 0; t < alphabet.size(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      word.push_back(alphabet[t]);
      extend();
      word.pop_back();
      used[t] = false;
    }
  };
  extend();
  return out;
}

}  // namespace

VerificationReport verify_unsigned(int n, int x,
                                   const EnumerationLimits& limits) {
  check_range(n, x);
  VerificationReport r;
  r.identity = "eq1";
  r.n = n;
  r.x = x;
  const auto base = static_cast<Natural>(x);
  const Natural right = rising_factorial(base, n);

  Natural direct = 0;
  std::uint64_t perms = 0;
  for (const Permutation& p : enumerate_permutations(n, limits.max_permutation_n)) {
    direct = checked::add(direct, checked::pow(base, cycle_count(p)));
    ++perms;
  }

  const StirlingTable table(n);
  Natural by_table = 0;
  for (int k = 0; k <= n; ++k) {
    by_table = checked::add(by_table, checked::mul(table(n, k), checked::pow(base, k)));
  }

  r.checks.push_back(make_check("eq1", direct, right));
  r.checks.push_back(make_check("eq3", by_table, right));
  r.counts["permutations"] = perms;
  finish(r);
  return r;
}

VerificationReport verify_signed(int n, int x, const EnumerationLimits& limits) {
  check_range(n, x);
  VerificationReport r;
  r.identity = "eq2";
  r.n = n;
  r.x = x;
  const auto base = static_cast<Natural>(x);
  const Natural falling = falling_factorial(base, n);
  const auto right = checked::narrow<Integer>(falling);

  Integer direct = 0;
  Natural even = 0;
  Natural odd = 0;
  std::uint64_t perms = 0;
  for (const Permutation& p : enumerate_permutations(n, limits.max_permutation_n)) {
    const int k = cycle_count(p);
    const Natural weight = checked::pow(base, k);
    const auto signed_weight = checked::narrow<Integer>(weight);
    if ((n - k) % 2 == 0) {
      direct = checked::add(direct, signed_weight);
      even = checked::add(even, weight);
    } else {
      direct = checked::sub(direct, signed_weight);
      odd = checked::add(odd, weight);
    }
    ++perms;
  }

  const StirlingTable table(n);
  Integer by_table = 0;
  for (int k = 0; k <= n; ++k) {
    const auto term = checked::narrow<Integer>(
        checked::mul(table(n, k), checked::pow(base, k)));
    by_table = (n - k) % 2 == 0 ? checked::add(by_table, term)
                                : checked::sub(by_table, term);
  }

  r.checks.push_back(make_check("eq2", direct, right));
  r.checks.push_back(make_check("eq4", by_table, right));
  // even-weight sum = odd-weight sum + falling factorial
  r.checks.push_back(make_check("even_odd", even, checked::add(odd, falling)));
  r.counts["permutations"] = perms;
  finish(r);
  return r;
}

VerificationReport verify_bijection(int n, const Palette& pal,
                                    const EnumerationLimits& limits) {
  check_colored_limits(n, pal, limits);
  VerificationReport r;
  r.identity = "bijection";
  r.n = n;
  r.x = static_cast<int>(pal.size());
  r.palette = pal.letters();
  const Natural right = rising_factorial(pal.size(), n);

  const std::set<EncodedSequence> sequences = all_sequences(n, pal);
  std::set<EncodedSequence> hit;
  std::uint64_t objects = 0;
  std::uint64_t good = 0;

  for_each_colored(n, pal, limits.max_colored_n,
                   [&](const CycleColoredPermutation& c) {
    ++objects;
    const std::string what = format_colored(c);
    try {
      const EncodedSequence s = encode(c);
      const std::vector<Label> used = s.letters();
      const std::set<Label> letters(used.begin(), used.end());
      if (letters != support(c)) {
        note_witness(r, what + ": encoded letters differ from the colors used");
        return;
      }
      if (!sequences.count(s)) {
        note_witness(r, what + ": encoding " + s.to_string() +
                            " is not a valid sequence");
        return;
      }
      if (!hit.insert(s).second) {
        note_witness(r, what + ": encoding " + s.to_string() + " repeated");
        return;
      }
      if (!(decode(s) == c)) {
        note_witness(r, what + ": decode(encode) gave " +
                            format_colored(decode(s)));
        return;
      }
      ++good;
    } catch (const Error& e) {
      note_witness(r, what + ": " + e.what());
    }
  });

  std::uint64_t reencoded = 0;
  for (const EncodedSequence& s : sequences) {
    try {
      if (encode(decode(s)) == s) {
        ++reencoded;
      } else {
        note_witness(r, s.to_string() + ": encode(decode) differs");
      }
    } catch (const Error& e) {
      note_witness(r, s.to_string() + ": " + e.what());
    }
  }

  r.checks.push_back(make_check("bijection", good, right));
  r.checks.push_back(make_check("objects", objects, right));
  r.checks.push_back(make_check("sequences", sequences.size(), right));
  r.checks.push_back(make_check("coverage", hit.size(), sequences.size()));
  r.checks.push_back(make_check("encode_decode", reencoded, sequences.size()));
  r.counts["objects"] = objects;
  r.counts["sequences"] = sequences.size();
  finish(r);
  return r;
}

VerificationReport verify_involution(int n, const Palette& pal,
                                     const EnumerationLimits& limits) {
  check_colored_limits(n, pal, limits);
  VerificationReport r;
  r.identity = "involution";
  r.n = n;
  r.x = static_cast<int>(pal.size());
  r.palette = pal.letters();
  const Natural falling = falling_factorial(pal.size(), n);

  std::uint64_t objects = 0;
  std::uint64_t involutive = 0;
  std::uint64_t fixed = 0;
  std::uint64_t fixed_shaped = 0;   // fixed and (e_n, injective mu)
  std::uint64_t shaped = 0;         // (e_n, injective mu), fixed or not
  std::uint64_t moved = 0;
  std::uint64_t flipped = 0;
  Integer signed_weight = 0;

  for_each_colored(n, pal, limits.max_colored_n,
                   [&](const CycleColoredPermutation& c) {
    ++objects;
    const std::string what = format_colored(c);
    const int k = cycle_count(c.perm());
    const bool injective = support(c).size() == c.coloring().size();
    const bool shape = c.perm().is_identity() && injective;
    shaped += shape;
    signed_weight = sign(c.perm()) > 0 ? checked::add<Integer>(signed_weight, 1)
                                       : checked::sub<Integer>(signed_weight, 1);

    const CycleColoredPermutation image = phi(c);
    if (phi(image) == c) {
      ++involutive;
    } else {
      note_witness(r, what + ": phi(phi(c)) != c");
    }
    if (image == c) {
      ++fixed;
      if (shape) {
        ++fixed_shaped;
      } else {
        note_witness(r, what + ": unexpected fixed point");
      }
      return;
    }
    ++moved;
    const int k2 = cycle_count(image.perm());
    if ((k2 == k + 1 || k2 == k - 1) && sign(image.perm()) == -sign(c.perm())) {
      ++flipped;
    } else {
      note_witness(r, what + ": phi changed k from " + std::to_string(k) +
                          " to " + std::to_string(k2));
    }
    for (Element m = 1; m <= n; ++m) {
      if (image.color_of(m) != c.color_of(m)) {
        note_witness(r, what + ": color of element " + std::to_string(m) +
                            " changed");
        break;
      }
    }
  });

  r.checks.push_back(make_check("fixed_points", fixed, falling));
  r.checks.push_back(make_check("involution", involutive, objects));
  r.checks.push_back(make_check("fixed_point_shape", fixed_shaped, fixed));
  r.checks.push_back(make_check("fixed_point_coverage", fixed_shaped, shaped));
  r.checks.push_back(make_check("sign_flip", flipped, moved));
  r.checks.push_back(make_check("signed_count", signed_weight,
                                checked::narrow<Integer>(falling)));
  r.counts["objects"] = objects;
  r.counts["fixed_points"] = fixed;
  r.counts["pairs"] = moved / 2;
  finish(r);
  return r;
}

}  // namespace ccperm
