#include "ccperm/coloring.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ccperm/error.hpp"
#include "text.hpp"

namespace ccperm {

bool is_valid_label(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

Palette::Palette(std::vector<Label> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ParseError("palette must not be empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!is_valid_label(letters_[i])) {
      throw ParseError("invalid color label '" + letters_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[i] == letters_[j]) {
        throw ParseError("duplicate color label '" + letters_[i] + "'");
      }
    }
  }
}

Palette Palette::standard(int x) {
  static constexpr std::array<const char*, 8> kNamed = {"r", "b", "g", "y",
                                                        "o", "v", "w", "k"};
  if (x < 1) throw InvalidArgument("palette size must be >= 1");
  std::vector<Label> letters;
  for (int i = 0; i < x; ++i) {
    letters.push_back(i < static_cast<int>(kNamed.size())
                          ? Label(kNamed[i])
                          : "c" + std::to_string(i));
  }
  return Palette(std::move(letters));
}

Palette Palette::parse(std::string_view text) {
  std::vector<Label> letters;
  for (std::string_view tok : detail::split_commas(detail::trim(text))) {
    letters.emplace_back(tok);
  }
  return Palette(std::move(letters));
}

bool Palette::contains(std::string_view label) const {
  return index_of(label).has_value();
}

std::optional<std::size_t> Palette::index_of(std::string_view label) const {
  auto it = std::find(letters_.begin(), letters_.end(), label);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

CycleColoredPermutation::CycleColoredPermutation(Permutation perm,
                                                 CycleColoring coloring)
    : perm_(std::move(perm)),
      cycles_(cycle_decomposition(perm_)),
      coloring_(std::move(coloring)),
      cycle_id_(perm_.size()) {
  if (coloring_.size() != cycles_.size()) {
    throw ParseError("coloring has " + std::to_string(coloring_.size()) +
                     " entries for " + std::to_string(cycles_.size()) +
                     " cycles");
  }
  for (const Cycle& c : cycles_.cycles) {
    auto it = coloring_.find(c.front());
    if (it == coloring_.end()) {
      throw ParseError("cycle starting at " + std::to_string(c.front()) +
                       " has no color");
    }
    if (!is_valid_label(it->second)) {
      throw ParseError("invalid color label '" + it->second + "'");
    }
    for (Element m : c) cycle_id_[m - 1] = c.front();
  }
}

CycleColoredPermutation CycleColoredPermutation::from_cycle_colors(
    Permutation perm, const std::vector<Label>& colors) {
  CycleDecomposition d = cycle_decomposition(perm);
  if (colors.size() != d.size()) {
    throw ParseError("expected " + std::to_string(d.size()) +
                     " cycle colors, got " + std::to_string(colors.size()));
  }
  CycleColoring coloring;
  for (std::size_t t = 0; t < d.size(); ++t) {
    coloring.emplace(d.cycles[t].front(), colors[t]);
  }
  return CycleColoredPermutation(std::move(perm), std::move(coloring));
}

std::vector<Element> CycleColoredPermutation::color_class(
    std::string_view s) const {
  std::vector<Element> out;
  for (Element m = 1; m <= size(); ++m) {
    if (color_of(m) == s) out.push_back(m);
  }
  return out;
}

std::string format_colored(const CycleColoredPermutation& c) {
  std::string out;
  for (const Cycle& cyc : c.cycles().cycles) {
    out += format_cycles(CycleDecomposition{{cyc}});
    out += c.coloring().at(cyc.front());
  }
  return out;
}

std::set<Label> support(const CycleColoredPermutation& c) {
  std::set<Label> used;
  for (const auto& [id, label] : c.coloring()) used.insert(label);
  return used;
}

bool uses_only(const CycleColoredPermutation& c, const Palette& pal) {
  return std::all_of(c.coloring().begin(), c.coloring().end(),
                     [&](const auto& kv) { return pal.contains(kv.second); });
}

ColoringStream::ColoringStream(Permutation p, Palette pal)
    : perm_(std::move(p)), palette_(std::move(pal)) {
  for (const Cycle& c : cycle_decomposition(perm_).cycles) {
    cycle_ids_.push_back(c.front());
  }
}

ColoringStream::iterator::iterator(const ColoringStream* owner)
    : owner_(owner), digits_(owner->cycle_ids_.size(), 0) {
  materialize();
}

void ColoringStream::iterator::materialize() {
  CycleColoring coloring;
  for (std::size_t t = 0; t < digits_.size(); ++t) {
    coloring.emplace(owner_->cycle_ids_[t], owner_->palette_[digits_[t]]);
  }
  current_.emplace(owner_->perm_, std::move(coloring));
}

ColoringStream::iterator& ColoringStream::iterator::operator++() {
  const std::size_t x = owner_->palette_.size();
  for (std::size_t t = digits_.size(); t-- > 0;) {
    if (++digits_[t] < x) {
      materialize();
      return *this;
    }
    digits_[t] = 0;
  }
  current_.reset();
  return *this;
}

ColoringStream enumerate_colorings(const Permutation& p, const Palette& pal) {
  return ColoringStream(p, pal);
}

}  // namespace ccperm
