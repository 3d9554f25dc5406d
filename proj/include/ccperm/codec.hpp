#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ccperm/coloring.hpp"
#include "ccperm/permutation.hpp"

// Bijection between cycle-colored permutations of [n] and injective
// sequences a_1..a_n over {2..n} plus color letters.
//
// A sequence is read as a functional graph on [n] + A with edges (i, a_i):
// every number has out-degree one, in-degrees are at most one, nothing points
// at 1, and every used letter is a sink hit exactly once. Such a graph splits
// into one simple path per letter (ending at it) plus disjoint cycles; the
// path through 1 absorbs the cycles into its color class.
namespace ccperm {

struct Letter {
  Label label;
  auto operator<=>(const Letter&) const = default;
};

// A sequence token / graph vertex: a number in 2..n or a letter.
using SequenceElement = std::variant<Element, Letter>;
using Vertex = SequenceElement;

std::string to_string(const SequenceElement& e);

inline bool is_letter(const SequenceElement& e) {
  return std::holds_alternative<Letter>(e);
}

class EncodedSequence {
 public:
  // Throws ParseError if an entry is the number 1, a number outside 2..n, an
  // invalid label, or a repeat. n is the number of entries and must be >= 1.
  explicit EncodedSequence(std::vector<SequenceElement> entries);

  // "11,b,r,2,g,8,5,10,4,6,3"
  static EncodedSequence parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<SequenceElement>& entries() const { return entries_; }
  // a_i, 1-based.
  const SequenceElement& operator[](Element i) const { return entries_[i - 1]; }

  // The used letters A in order of first appearance.
  std::vector<Label> letters() const;

  std::string to_string() const;

  auto operator<=>(const EncodedSequence&) const = default;

 private:
  std::vector<SequenceElement> entries_;
};

class CcpGraph {
 public:
  using Edge = std::pair<Element, Vertex>;

  // Validates the graph axioms: one out-edge per vertex of [n], targets in
  // {2..n} + A, injective, every letter of A hit. Edge order is irrelevant.
  static CcpGraph from_edges(int n, std::vector<Label> letters,
                             std::vector<Edge> edges);

  int size() const { return static_cast<int>(out_.size()); }
  // A, sorted.
  const std::vector<Label>& letters() const { return letters_; }
  const Vertex& out(Element i) const { return out_[i - 1]; }

  // The unique k with (k, v) an edge, if any.
  std::optional<Element> predecessor(const Vertex& v) const;

  // Edges ascending by source.
  std::vector<Edge> edges() const;

  bool operator==(const CcpGraph&) const = default;

 private:
  friend CcpGraph seq_to_graph(const EncodedSequence& s);
  CcpGraph(std::vector<Label> letters, std::vector<Vertex> out);

  std::vector<Label> letters_;
  std::vector<Vertex> out_;
  std::vector<Element> pred_;  // pred_[v - 1] for numbers, 0 if none
  std::map<Label, Element> letter_pred_;
};

CcpGraph seq_to_graph(const EncodedSequence& s);
EncodedSequence graph_to_seq(const CcpGraph& g);

struct LetterPath {
  Label letter;
  std::vector<Element> vertices;  // b_1 -> ... -> b_M -> letter

  bool operator==(const LetterPath&) const = default;
};

struct GraphDecomposition {
  std::vector<LetterPath> paths;
  // Directed cycles along out-edges, canonical (min first, sorted by min).
  std::vector<Cycle> cycles;

  bool operator==(const GraphDecomposition&) const = default;
};

// Letter order used for output: palette order when given, otherwise order
// of first appearance in the sequence a_1..a_n. Throws ParseError if the
// palette misses a used letter.
std::vector<Label> ordered_letters(const CcpGraph& g,
                                   const Palette* palette = nullptr);

// Paths are listed in ordered_letters order.
GraphDecomposition decompose(const CcpGraph& g,
                             const Palette* palette = nullptr);

CcpGraph encode_graph(const CycleColoredPermutation& c);
EncodedSequence encode(const CycleColoredPermutation& c);

CycleColoredPermutation decode(const CcpGraph& g);
CycleColoredPermutation decode(const EncodedSequence& s);

// Graphviz rendering; byte-stable for a fixed graph and palette.
std::string to_dot(const CcpGraph& g, const Palette* palette = nullptr);

}  // namespace ccperm
