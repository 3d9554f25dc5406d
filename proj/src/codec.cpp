#include "ccperm/codec.hpp"

#include <algorithm>
#include <set>

#include "ccperm/error.hpp"
#include "text.hpp"

namespace ccperm {

std::string to_string(const SequenceElement& e) {
  if (const auto* v = std::get_if<Element>(&e)) return std::to_string(*v);
  return std::get<Letter>(e).label;
}

EncodedSequence::EncodedSequence(std::vector<SequenceElement> entries)
    : entries_(std::move(entries)) {
  const int n = size();
  if (n < 1) throw ParseError("sequence must have at least one entry");
  std::vector<bool> seen_number(n + 1, false);
  std::set<Label> seen_letter;
  for (const SequenceElement& e : entries_) {
    if (const auto* v = std::get_if<Element>(&e)) {
      if (*v == 1) throw ParseError("token 1 forbidden in sequence");
      if (*v < 2 || *v > n) {
        throw ParseError("token " + std::to_string(*v) + " outside 2.." +
                         std::to_string(n));
      }
      if (seen_number[*v]) {
        throw ParseError("token " + std::to_string(*v) + " repeated");
      }
      seen_number[*v] = true;
    } else {
      const Label& s = std::get<Letter>(e).label;
      if (!is_valid_label(s)) throw ParseError("invalid color label '" + s + "'");
      if (!seen_letter.insert(s).second) {
        throw ParseError("token " + s + " repeated");
      }
    }
  }
}

EncodedSequence EncodedSequence::parse(std::string_view text) {
  std::vector<SequenceElement> entries;
  for (std::string_view tok : detail::split_commas(detail::trim(text))) {
    if (tok.empty()) throw ParseError("empty token in sequence");
    if (auto v = detail::parse_int(tok)) {
      if (*v == 1) throw ParseError("token 1 forbidden in sequence");
      if (*v < 2 || *v > 1'000'000) {
        throw ParseError("token " + std::string(tok) + " out of range");
      }
      entries.emplace_back(static_cast<Element>(*v));
    } else if (is_valid_label(tok)) {
      entries.emplace_back(Letter{Label(tok)});
    } else {
      throw ParseError("bad token '" + std::string(tok) + "' in sequence");
    }
  }
  return EncodedSequence(std::move(entries));
}

std::vector<Label> EncodedSequence::letters() const {
  std::vector<Label> out;
  for (const SequenceElement& e : entries_) {
    if (const auto* l = std::get_if<Letter>(&e)) out.push_back(l->label);
  }
  return out;
}

std::string EncodedSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += ccperm::to_string(entries_[i]);
  }
  return out;
}

CcpGraph::CcpGraph(std::vector<Label> letters, std::vector<Vertex> out)
    : letters_(std::move(letters)), out_(std::move(out)), pred_(out_.size(), 0) {
  std::sort(letters_.begin(), letters_.end());
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const auto source = static_cast<Element>(i + 1);
    if (const auto* v = std::get_if<Element>(&out_[i])) {
      pred_[*v - 1] = source;
    } else {
      letter_pred_.emplace(std::get<Letter>(out_[i]).label, source);
    }
  }
}

CcpGraph CcpGraph::from_edges(int n, std::vector<Label> letters,
                              std::vector<Edge> edges) {
  if (n < 1) throw ParseError("graph must have at least one numbered vertex");
  std::set<Label> declared;
  for (const Label& s : letters) {
    if (!is_valid_label(s)) throw ParseError("invalid color label '" + s + "'");
    if (!declared.insert(s).second) {
      throw ParseError("duplicate letter '" + s + "'");
    }
  }
  std::vector<std::optional<Vertex>> out(n);
  for (auto& [source, target] : edges) {
    if (source < 1 || source > n) {
      throw ParseError("edge source " + std::to_string(source) +
                       " outside 1.." + std::to_string(n));
    }
    if (out[source - 1]) {
      throw ParseError("vertex " + std::to_string(source) +
                       " has more than one out-edge");
    }
    if (const auto* l = std::get_if<Letter>(&target)) {
      if (!declared.count(l->label)) {
        throw ParseError("edge to undeclared letter '" + l->label + "'");
      }
    }
    out[source - 1] = std::move(target);
  }
  std::vector<SequenceElement> entries;
  for (int i = 0; i < n; ++i) {
    if (!out[i]) {
      throw ParseError("vertex " + std::to_string(i + 1) + " has no out-edge");
    }
    entries.push_back(std::move(*out[i]));
  }
  // Injectivity and the forbidden vertex 1 are sequence invariants.
  EncodedSequence seq(std::move(entries));
  auto used = seq.letters();
  if (used.size() != declared.size()) {
    throw ParseError("every declared letter must receive exactly one edge");
  }
  return seq_to_graph(seq);
}

std::optional<Element> CcpGraph::predecessor(const Vertex& v) const {
  if (const auto* x = std::get_if<Element>(&v)) {
    if (*x < 1 || *x > size() || pred_[*x - 1] == 0) return std::nullopt;
    return pred_[*x - 1];
  }
  auto it = letter_pred_.find(std::get<Letter>(v).label);
  if (it == letter_pred_.end()) return std::nullopt;
  return it->second;
}

std::vector<CcpGraph::Edge> CcpGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= size(); ++i) out.emplace_back(i, out_[i - 1]);
  return out;
}

CcpGraph seq_to_graph(const EncodedSequence& s) {
  return CcpGraph(s.letters(), s.entries());
}

EncodedSequence graph_to_seq(const CcpGraph& g) {
  std::vector<SequenceElement> entries;
  for (int i = 1; i <= g.size(); ++i) entries.push_back(g.out(i));
  return EncodedSequence(std::move(entries));
}

std::vector<Label> ordered_letters(const CcpGraph& g, const Palette* palette) {
  std::vector<Label> out;
  if (palette) {
    for (const Label& s : g.letters()) {
      if (!palette->contains(s)) {
        throw ParseError("letter '" + s + "' is not in the palette");
      }
    }
    for (const Label& s : palette->letters()) {
      if (std::binary_search(g.letters().begin(), g.letters().end(), s)) {
        out.push_back(s);
      }
    }
    return out;
  }
  for (int i = 1; i <= g.size(); ++i) {
    if (const auto* l = std::get_if<Letter>(&g.out(i))) out.push_back(l->label);
  }
  return out;
}

// A letter's path is found by walking in-edges back from it until a vertex
// with in-degree 0. Whatever is left over has in-degree exactly 1 and lies
// on a directed cycle.
GraphDecomposition decompose(const CcpGraph& g, const Palette* palette) {
  const int n = g.size();
  GraphDecomposition d;
  std::vector<bool> on_path(n + 1, false);
  for (const Label& s : ordered_letters(g, palette)) {
    LetterPath path{s, {}};
    std::optional<Element> v = g.predecessor(Letter{s});
    while (v) {
      path.vertices.push_back(*v);
      on_path[*v] = true;
      v = g.predecessor(*v);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    d.paths.push_back(std::move(path));
  }
  std::vector<bool> seen = on_path;
  for (Element start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Element v = start; !seen[v]; v = std::get<Element>(g.out(v))) {
      seen[v] = true;
      c.push_back(v);
    }
    d.cycles.push_back(std::move(c));
  }
  return d;
}

CcpGraph encode_graph(const CycleColoredPermutation& c) {
  return seq_to_graph(encode(c));
}

EncodedSequence encode(const CycleColoredPermutation& c) {
  const Permutation& pi = c.perm();
  const int n = pi.size();
  std::vector<std::optional<SequenceElement>> out(n);
  const Label& color_of_one = c.color_of(1);

  for (const Label& s : support(c)) {
    const std::vector<Element> block = c.color_class(s);  // c_1 < ... < c_M
    if (s == color_of_one) {
      // Keep pi's own edges, except the one closing into 1 goes to s.
      for (Element i : block) {
        if (pi(i) == 1) {
          out[i - 1] = Letter{s};
        } else {
          out[i - 1] = pi(i);
        }
      }
      continue;
    }
    // b_t = pi(c_t), chained b_1 -> b_2 -> ... -> b_M -> s.
    std::vector<Element> b;
    b.reserve(block.size());
    for (Element ct : block) b.push_back(pi(ct));
    for (std::size_t t = 0; t + 1 < b.size(); ++t) out[b[t] - 1] = b[t + 1];
    out[b.back() - 1] = Letter{s};
  }

  std::vector<SequenceElement> entries;
  entries.reserve(n);
  for (auto& e : out) entries.push_back(std::move(*e));
  return EncodedSequence(std::move(entries));
}

CycleColoredPermutation decode(const CcpGraph& g) {
  const int n = g.size();
  const GraphDecomposition d = decompose(g);
  std::vector<Element> image(n, 0);
  std::vector<const Label*> color(n + 1, nullptr);

  for (const LetterPath& path : d.paths) {
    const std::vector<Element>& b = path.vertices;
    if (b.front() == 1) {
      for (Element i : b) {
        const Vertex& next = g.out(i);
        image[i - 1] = is_letter(next) ? 1 : std::get<Element>(next);
        color[i] = &path.letter;
      }
      for (const Cycle& cyc : d.cycles) {
        for (Element i : cyc) {
          image[i - 1] = std::get<Element>(g.out(i));
          color[i] = &path.letter;
        }
      }
      continue;
    }
    std::vector<Element> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t t = 0; t < b.size(); ++t) {
      image[sorted[t] - 1] = b[t];
      color[sorted[t]] = &path.letter;
    }
  }

  Permutation pi = Permutation::from_one_line(std::move(image));
  CycleColoring coloring;
  for (const Cycle& cyc : cycle_decomposition(pi).cycles) {
    coloring.emplace(cyc.front(), *color[cyc.front()]);
  }
  return CycleColoredPermutation(std::move(pi), std::move(coloring));
}

CycleColoredPermutation decode(const EncodedSequence& s) {
  return decode(seq_to_graph(s));
}

std::string to_dot(const CcpGraph& g, const Palette* palette) {
  std::string out = "digraph ccp {\n";
  for (int i = 1; i <= g.size(); ++i) {
    out += "  " + std::to_string(i) + " [shape=box];\n";
  }
  for (const Label& s : ordered_letters(g, palette)) {
    out += "  \"" + s + "\" [shape=ellipse];\n";
  }
  for (const auto& [source, target] : g.edges()) {
    out += "  " + std::to_string(source) + " -> ";
    out += is_letter(target) ? "\"" + to_string(target) + "\"" : to_string(target);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ccperm
