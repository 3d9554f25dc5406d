#include "ccperm/coloring.hpp"

#include <set>

#include "ccperm/error.hpp"
#include "ccperm/json_io.hpp"
#include "gtest/gtest.h"

namespace ccperm {
namespace {

CycleColoredPermutation figure_one() {
  return CycleColoredPermutation::from_cycle_colors(
      parse_cycles("(1,11,3)(2,9)(4)(5,7)(6,8,10)"), {"r", "b", "b", "g", "r"});
}

TEST(Palette, Validation) {
  EXPECT_EQ(Palette::parse("r,b,g").letters(), (std::vector<Label>{"r", "b", "g"}));
  EXPECT_THROW(Palette({}), ParseError);
  EXPECT_THROW(Palette::parse("r,r"), ParseError);
  EXPECT_THROW(Palette::parse("r,2"), ParseError);
  EXPECT_THROW(Palette::parse("1x"), ParseError);
  EXPECT_THROW(Palette::parse("r,"), ParseError);
  EXPECT_TRUE(is_valid_label("red_2"));
  EXPECT_FALSE(is_valid_label("_r"));
  EXPECT_FALSE(is_valid_label("-3"));
  EXPECT_EQ(Palette::standard(3).letters(), (std::vector<Label>{"r", "b", "g"}));
  EXPECT_EQ(Palette::standard(10).size(), 10u);
}

TEST(CycleColoredPermutation, RejectsMismatchedColoring) {
  Permutation p = parse_cycles("(1,2)(3)");
  EXPECT_THROW(CycleColoredPermutation(p, {{1, "r"}}), ParseError);
  EXPECT_THROW(CycleColoredPermutation(p, {{1, "r"}, {2, "b"}}), ParseError);
  EXPECT_THROW(CycleColoredPermutation(p, {{1, "r"}, {3, "7"}}), ParseError);
  EXPECT_NO_THROW(CycleColoredPermutation(p, {{1, "r"}, {3, "b"}}));
}

TEST(CycleColoredPermutation, ColorClasses) {
  CycleColoredPermutation c = figure_one();
  EXPECT_EQ(c.color_class("r"), (std::vector<Element>{1, 3, 6, 8, 10, 11}));
  EXPECT_EQ(c.color_class("b"), (std::vector<Element>{2, 4, 9}));
  EXPECT_EQ(c.color_class("g"), (std::vector<Element>{5, 7}));
  EXPECT_EQ(c.color_of(9), "b");
  EXPECT_EQ(c.cycle_id(10), 6);
  EXPECT_EQ(format_colored(c), "(1,11,3)r(2,9)b(4)b(5,7)g(6,8,10)r");
}

TEST(Support, Examples) {
  EXPECT_EQ(support(figure_one()), (std::set<Label>{"r", "b", "g"}));
  EXPECT_EQ(support(CycleColoredPermutation(Permutation::identity(1), {{1, "r"}})),
            (std::set<Label>{"r"}));
  CycleColoredPermutation all_red = CycleColoredPermutation::from_cycle_colors(
      Permutation::identity(3), {"r", "r", "r"});
  EXPECT_EQ(support(all_red), (std::set<Label>{"r"}));
  EXPECT_TRUE(uses_only(all_red, Palette::parse("r,b")));
  EXPECT_FALSE(uses_only(figure_one(), Palette::parse("r,b")));
}

TEST(EnumerateColorings, Counts) {
  const Palette rb = Palette::parse("r,b");
  auto count = [&](const Permutation& p) {
    int k = 0;
    for ([[maybe_unused]] const auto& c : enumerate_colorings(p, rb)) ++k;
    return k;
  };
  EXPECT_EQ(count(Permutation::identity(2)), 4);
  EXPECT_EQ(count(parse_cycles("(1,2)")), 2);
  int total = 0;
  for (const Permutation& p : enumerate_permutations(2)) total += count(p);
  EXPECT_EQ(total, 6);
}

TEST(EnumerateColorings, OdometerOrder) {
  std::vector<std::string> seen;
  for (const auto& c : enumerate_colorings(Permutation::identity(2),
                                           Palette::parse("r,b"))) {
    seen.push_back(format_colored(c));
  }
  EXPECT_EQ(seen, (std::vector<std::string>{"(1)r(2)r", "(1)r(2)b", "(1)b(2)r",
                                            "(1)b(2)b"}));
}

TEST(EnumerateColorings, ExactlyXToTheKDistinctValid) {
  for (int x = 1; x <= 3; ++x) {
    const Palette pal = Palette::standard(x);
    for (int n = 1; n <= 5; ++n) {
      for (const Permutation& p : enumerate_permutations(n)) {
        std::set<std::string> distinct;
        std::size_t expected = 1;
        for (int k = 0; k < cycle_count(p); ++k) expected *= x;
        for (const auto& c : enumerate_colorings(p, pal)) {
          EXPECT_EQ(c.perm(), p);
          EXPECT_TRUE(uses_only(c, pal));
          // Re-validating through the public constructor.
          EXPECT_NO_THROW(CycleColoredPermutation(c.perm(), c.coloring()));
          distinct.insert(format_colored(c));
        }
        EXPECT_EQ(distinct.size(), expected);
      }
    }
  }
}

TEST(ColoringJson, RoundTripAndNormalization) {
  const std::string text =
      R"({"n": 11, "cycles": [{"elements": [11,3,1], "color": "r"},)"
      R"( {"elements": [9,2], "color": "b"}, {"elements": [4], "color": "b"},)"
      R"( {"elements": [5,7], "color": "g"}, {"elements": [6,8,10], "color": "r"}]})";
  CycleColoredPermutation c = json_io::parse_colored(text);
  EXPECT_EQ(c, figure_one());
  EXPECT_EQ(json_io::to_json(c).dump(),
            R"({"n":11,"cycles":[{"elements":[1,11,3],"color":"r"},)"
            R"({"elements":[2,9],"color":"b"},{"elements":[4],"color":"b"},)"
            R"({"elements":[5,7],"color":"g"},{"elements":[6,8,10],"color":"r"}]})");
  EXPECT_EQ(json_io::parse_colored(json_io::to_json(c).dump()), c);
}

TEST(ColoringJson, RejectsNonPermutations) {
  EXPECT_THROW(json_io::parse_colored("not json"), ParseError);
  EXPECT_THROW(json_io::parse_colored(R"({"cycles": []})"), ParseError);
  // 2 is missing.
  EXPECT_THROW(json_io::parse_colored(
                   R"({"n": 3, "cycles": [{"elements": [1,3], "color": "r"}]})"),
               ParseError);
  // 1 appears twice.
  EXPECT_THROW(json_io::parse_colored(
                   R"({"n": 2, "cycles": [{"elements": [1,2], "color": "r"},)"
                   R"( {"elements": [1], "color": "b"}]})"),
               ParseError);
  // n disagrees with the elements.
  EXPECT_THROW(json_io::parse_colored(
                   R"({"n": 3, "cycles": [{"elements": [1,2], "color": "r"}]})"),
               ParseError);
  EXPECT_THROW(json_io::parse_colored(
                   R"({"n": 1, "cycles": [{"elements": [1], "color": "3"}]})"),
               ParseError);
  EXPECT_THROW(json_io::parse_colored(
                   R"({"n": 1, "cycles": [{"elements": [1]}]})"),
               ParseError);
}

}  // namespace
}  // namespace ccperm
