#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccperm/permutation.hpp"

namespace ccperm {

// A color letter: [A-Za-z][A-Za-z0-9_]*. Never parses as an integer, so
// letters and numbers can share one token stream.
using Label = std::string;

bool is_valid_label(std::string_view s);

// Ordered set of distinct labels. Order only fixes serialization.
class Palette {
 public:
  // Throws ParseError on an empty list, an invalid label or a duplicate.
  explicit Palette(std::vector<Label> letters);

  // The first x letters of r, b, g, y, o, v, w, k, c8, c9, ...
  static Palette standard(int x);

  // "r,b,g"
  static Palette parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  const std::vector<Label>& letters() const { return letters_; }
  const Label& operator[](std::size_t i) const { return letters_[i]; }

  bool contains(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Palette&) const = default;

 private:
  std::vector<Label> letters_;
};

// Color of each cycle, keyed by the cycle's minimum element.
using CycleColoring = std::map<Element, Label>;

// A pair (pi, mu): a permutation with one color on each of its cycles.
class CycleColoredPermutation {
 public:
  // Throws ParseError unless the keys of `coloring` are exactly the cycle
  // minima of `perm` and every label is valid.
  CycleColoredPermutation(Permutation perm, CycleColoring coloring);

  // Colors given in canonical cycle order.
  static CycleColoredPermutation from_cycle_colors(
      Permutation perm, const std::vector<Label>& colors);

  int size() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const CycleDecomposition& cycles() const { return cycles_; }
  const CycleColoring& coloring() const { return coloring_; }

  // Minimum of the cycle containing m.
  Element cycle_id(Element m) const { return cycle_id_[m - 1]; }
  // Color of the cycle containing m.
  const Label& color_of(Element m) const { return coloring_.at(cycle_id(m)); }

  // B^s: all elements whose cycle has color s, ascending.
  std::vector<Element> color_class(std::string_view s) const;

  bool operator==(const CycleColoredPermutation& o) const {
    return perm_ == o.perm_ && coloring_ == o.coloring_;
  }

 private:
  Permutation perm_;
  CycleDecomposition cycles_;
  CycleColoring coloring_;
  std::vector<Element> cycle_id_;
};

// "(1,5,10)g(2)b(3,8,7)r"; canonical cycle order.
std::string format_colored(const CycleColoredPermutation& c);

// The set A of labels actually used.
std::set<Label> support(const CycleColoredPermutation& c);

// True when every color of `c` belongs to `pal`.
bool uses_only(const CycleColoredPermutation& c, const Palette& pal);

// All x^k(p) colorings of p's cycles. Odometer order: the cycle with the
// largest minimum varies fastest, letters in palette order.
class ColoringStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CycleColoredPermutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    const CycleColoredPermutation& operator*() const { return *current_; }
    const CycleColoredPermutation* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const { return !current_; }

   private:
    friend class ColoringStream;
    explicit iterator(const ColoringStream* owner);
    void materialize();

    const ColoringStream* owner_ = nullptr;
    std::vector<std::size_t> digits_;
    std::optional<CycleColoredPermutation> current_;
  };

  ColoringStream(Permutation p, Palette pal);

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Permutation perm_;
  Palette palette_;
  std::vector<Element> cycle_ids_;
};

ColoringStream enumerate_colorings(const Permutation& p, const Palette& pal);

}  // namespace ccperm
