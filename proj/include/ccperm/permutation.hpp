#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccperm {

// Elements of [n] are 1-based throughout the library.
using Element = int;
using Cycle = std::vector<Element>;

// Disjoint cycle form of a permutation. In canonical form every cycle starts
// at its minimum and cycles are sorted by minimum; fixed points appear as
// 1-cycles.
struct CycleDecomposition {
  std::vector<Cycle> cycles;

  std::size_t size() const { return cycles.size(); }
  bool operator==(const CycleDecomposition&) const = default;
};

// A bijection of {1..n}, n >= 1, stored in one-line form.
class Permutation {
 public:
  static Permutation identity(int n);

  // Validates that `image` is a bijection of {1..n}, n = image.size().
  static Permutation from_one_line(std::vector<Element> image);

  // Cycles may be given in any rotation and any order; together they must
  // partition {1..n} where n is the largest element.
  static Permutation from_cycles(const std::vector<Cycle>& cycles);
  static Permutation from_cycles(const CycleDecomposition& d) {
    return from_cycles(d.cycles);
  }

  int size() const { return static_cast<int>(image_.size()); }

  // pi(i) for 1 <= i <= n. Unchecked.
  Element operator()(Element i) const { return image_[i - 1]; }

  std::span<const Element> one_line() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<Element> image) : image_(std::move(image)) {}

  std::vector<Element> image_;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

int cycle_count(const Permutation& p);

// Returns (i j) o p under left action: k -> (i j)(p(k)).
// Throws InvalidArgument unless 1 <= i < j <= n.
Permutation apply_transposition(Element i, Element j, const Permutation& p);

// Lexicographic stream of S_n in one-line order. Single pass.
class PermutationStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    const Permutation& operator*() const { return *current_; }
    const Permutation* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class PermutationStream;
    explicit iterator(int n);

    std::vector<Element> image_;
    std::optional<Permutation> current_;
    bool done_ = true;
  };

  explicit PermutationStream(int n) : n_(n) {}

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

inline constexpr int kDefaultPermutationLimit = 8;

// Throws LimitExceeded when n > max_n and InvalidArgument when n < 1.
PermutationStream enumerate_permutations(int n,
                                         int max_n = kDefaultPermutationLimit);

// "(1,5,10)(2)(3,8,7)"; canonical form.
std::string format_cycles(const Permutation& p);
std::string format_cycles(const CycleDecomposition& d);
Permutation parse_cycles(std::string_view text);

// "5,2,8,4"
std::string format_one_line(const Permutation& p);
Permutation parse_one_line(std::string_view text);

}  // namespace ccperm
