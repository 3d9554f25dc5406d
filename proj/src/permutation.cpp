#include "ccperm/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ccperm/error.hpp"
#include "text.hpp"

namespace ccperm {

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be >= 1");
  std::vector<Element> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::vector<Element> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw ParseError("permutation must have at least one element");
  std::vector<bool> seen(n + 1, false);
  for (Element v : image) {
    if (v < 1 || v > n) {
      throw ParseError("value " + std::to_string(v) + " outside 1.." +
                       std::to_string(n));
    }
    if (seen[v]) throw ParseError("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(const std::vector<Cycle>& cycles) {
  int n = 0;
  std::size_t total = 0;
  for (const Cycle& c : cycles) {
    if (c.empty()) throw ParseError("empty cycle");
    for (Element v : c) {
      if (v < 1) throw ParseError("cycle element " + std::to_string(v) + " < 1");
      n = std::max(n, v);
    }
    total += c.size();
  }
  if (n == 0) throw ParseError("permutation must have at least one element");
  if (total != static_cast<std::size_t>(n)) {
    throw ParseError("cycles do not partition 1.." + std::to_string(n));
  }
  std::vector<Element> image(n, 0);
  for (const Cycle& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      Element& slot = image[c[t] - 1];
      if (slot != 0) {
        throw ParseError("element " + std::to_string(c[t]) +
                         " appears in more than one place");
      }
      slot = c[(t + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[image_[i] - 1] = static_cast<Element>(i + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Element>(i + 1)) return false;
  }
  return true;
}

// Scanning starting points in increasing order yields min-first cycles,
// already sorted by minimum.
CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition d;
  std::vector<bool> visited(n + 1, false);
  for (Element start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    Cycle c;
    for (Element v = start; !visited[v]; v = p(v)) {
      visited[v] = true;
      c.push_back(v);
    }
    d.cycles.push_back(std::move(c));
  }
  return d;
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> visited(n + 1, false);
  int k = 0;
  for (Element start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    ++k;
    for (Element v = start; !visited[v]; v = p(v)) visited[v] = true;
  }
  return k;
}

Permutation apply_transposition(Element i, Element j, const Permutation& p) {
  const int n = p.size();
  if (i < 1 || j > n || i >= j) {
    throw InvalidArgument("transposition (" + std::to_string(i) + "," +
                          std::to_string(j) + ") requires 1 <= i < j <= " +
                          std::to_string(n));
  }
  std::vector<Element> image(p.one_line().begin(), p.one_line().end());
  for (Element& v : image) {
    if (v == i) {
      v = j;
    } else if (v == j) {
      v = i;
    }
  }
  return Permutation::from_one_line(std::move(image));
}

PermutationStream::iterator::iterator(int n) : image_(n), done_(false) {
  std::iota(image_.begin(), image_.end(), 1);
  current_ = Permutation::from_one_line(image_);
}

PermutationStream::iterator& PermutationStream::iterator::operator++() {
  if (std::next_permutation(image_.begin(), image_.end())) {
    current_ = Permutation::from_one_line(image_);
  } else {
    done_ = true;
    current_.reset();
  }
  return *this;
}

PermutationStream enumerate_permutations(int n, int max_n) {
  if (n < 1) throw InvalidArgument("permutation degree must be >= 1");
  if (n > max_n) {
    throw LimitExceeded("n = " + std::to_string(n) +
                        " exceeds the enumeration limit " +
                        std::to_string(max_n));
  }
  return PermutationStream(n);
}

std::string format_cycles(const CycleDecomposition& d) {
  std::string out;
  for (const Cycle& c : d.cycles) {
    out += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(c[t]);
    }
    out += ')';
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  return format_cycles(cycle_decomposition(p));
}

Permutation parse_cycles(std::string_view text) {
  std::vector<Cycle> cycles;
  std::string_view rest = detail::trim(text);
  if (rest.empty()) throw ParseError("empty cycle notation");
  while (!rest.empty()) {
    if (rest.front() != '(') {
      throw ParseError("expected '(' in cycle notation");
    }
    std::size_t close = rest.find(')');
    if (close == std::string_view::npos) {
      throw ParseError("unterminated cycle in cycle notation");
    }
    Cycle c;
    for (std::string_view tok : detail::split_commas(rest.substr(1, close - 1))) {
      auto v = detail::parse_int(tok);
      if (!v) throw ParseError("bad cycle element '" + std::string(tok) + "'");
      if (*v < 1 || *v > 1'000'000) {
        throw ParseError("cycle element " + std::string(tok) + " out of range");
      }
      c.push_back(static_cast<Element>(*v));
    }
    cycles.push_back(std::move(c));
    rest = detail::trim(rest.substr(close + 1));
  }
  return Permutation::from_cycles(cycles);
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

Permutation parse_one_line(std::string_view text) {
  std::vector<Element> image;
  for (std::string_view tok : detail::split_commas(detail::trim(text))) {
    auto v = detail::parse_int(tok);
    if (!v) throw ParseError("bad one-line entry '" + std::string(tok) + "'");
    if (*v < 1 || *v > 1'000'000) {
      throw ParseError("one-line entry " + std::string(tok) + " out of range");
    }
    image.push_back(static_cast<Element>(*v));
  }
  return Permutation::from_one_line(std::move(image));
}

}  // namespace ccperm
