// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All comparisons are exact; the only
// thresholds are the wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccperm/cli.hpp"
#include "ccperm/codec.hpp"
#include "ccperm/involution.hpp"
#include "ccperm/json_io.hpp"
#include "ccperm/stirling.hpp"
#include "ccperm/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace ccperm;
using Clock = std::chrono::steady_clock;

constexpr double kExampleBudgetMs = 1.0;
constexpr double kColoredSweepBudgetS = 60.0;
constexpr double kIdentitySweepBudgetS = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Outcome encode_worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const CycleColoredPermutation c = CycleColoredPermutation::from_cycle_colors(
      parse_cycles("(1,11,3)(2,9)(4)(5,7)(6,8,10)"), {"r", "b", "b", "g", "r"});
  const EncodedSequence s = encode(c);
  const double elapsed = ms_since(t0);

  o.require(s.to_string() == "11,b,r,2,g,8,5,10,4,6,3", "sequence " + s.to_string());
  const CcpGraph expected = CcpGraph::from_edges(
      11, {"r", "b", "g"},
      {{9, 4}, {4, 2}, {2, Letter{"b"}}, {7, 5}, {5, Letter{"g"}}, {1, 11},
       {11, 3}, {6, 8}, {8, 10}, {10, 6}, {3, Letter{"r"}}});
  o.require(seq_to_graph(s) == expected, "edge set differs");
  o.require(elapsed < kExampleBudgetMs, "took " + std::to_string(elapsed) + " ms");
  if (o.pass) o.detail = std::to_string(elapsed) + " ms";
  return o;
}

Outcome decode_worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const CycleColoredPermutation c =
      decode(EncodedSequence::parse("5,6,7,4,10,b,r,3,11,g,9"));
  const double elapsed = ms_since(t0);

  o.require(format_cycles(c.perm()) == "(1,5,10)(2)(3,8,7)(4)(6)(9,11)",
            "permutation " + format_cycles(c.perm()));
  o.require(format_one_line(c.perm()) == "5,2,8,4,10,6,3,7,11,1,9", "one-line form");
  o.require(format_colored(c) == "(1,5,10)g(2)b(3,8,7)r(4)g(6)b(9,11)g",
            "coloring " + format_colored(c));
  o.require(elapsed < kExampleBudgetMs, "took " + std::to_string(elapsed) + " ms");
  if (o.pass) o.detail = std::to_string(elapsed) + " ms";
  return o;
}

Outcome involution_worked_example() {
  Outcome o;
  const CycleColoredPermutation c = CycleColoredPermutation::from_cycle_colors(
      parse_cycles("(1)(2,4,3)(5)"), {"r", "b", "r"});
  const RelationSet expected_relations = {{1, 5}, {2, 3}, {2, 4}, {3, 4}};
  o.require(relations(c) == expected_relations, "relation set");
  o.require(minimal_relation(c) == Relation{1, 5}, "minimal relation");
  const CycleColoredPermutation image = phi(c);
  o.require(format_colored(image) == "(1,5)r(2,4,3)b", "image " + format_colored(image));
  o.require(relations(image) == expected_relations, "relations of the image");
  o.require(phi(image) == c, "phi applied twice");
  o.require(cycle_count(c.perm()) == 3 && cycle_count(image.perm()) == 2, "k 3 -> 2");
  return o;
}

Outcome exhaustive_bijection() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    for (int x = 1; x <= 3; ++x) {
      const VerificationReport r = verify_bijection(n, Palette::standard(x));
      const std::string where = "n=" + std::to_string(n) + " x=" + std::to_string(x);
      o.require(r.pass, where + ": " + r.witness.value_or("check failed"));
      o.require(r.left == std::to_string(static_cast<Natural>(oracle::rising(x, n))),
                where + ": count " + r.left);
    }
  }
  const VerificationReport big = verify_bijection(6, Palette::standard(3));
  o.require(big.counts.at("objects") == 20160, "n=6 x=3 object count");
  const double s = ms_since(t0) / 1000.0;
  o.require(s < kColoredSweepBudgetS, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(s) + " s";
  return o;
}

Outcome exhaustive_involution() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    for (int x = 1; x <= 3; ++x) {
      const VerificationReport r = verify_involution(n, Palette::standard(x));
      const std::string where = "n=" + std::to_string(n) + " x=" + std::to_string(x);
      o.require(r.pass, where + ": " + r.witness.value_or("check failed"));
      const auto falling = static_cast<Natural>(oracle::falling(x, n));
      o.require(r.counts.at("fixed_points") == falling, where + ": fixed points");
    }
  }
  const double s = ms_since(t0) / 1000.0;
  o.require(s < kColoredSweepBudgetS, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(s) + " s";
  return o;
}

Outcome identity_sweep() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    for (int x = 0; x <= 5; ++x) {
      const std::string where = "n=" + std::to_string(n) + " x=" + std::to_string(x);
      const VerificationReport u = verify_unsigned(n, x);
      o.require(u.pass, where + " eq1/eq3");
      o.require(u.checks.size() == 2 && u.checks[0].name == "eq1" &&
                    u.checks[1].name == "eq3",
                where + ": both summation routes");
      const VerificationReport s = verify_signed(n, x);
      o.require(s.pass, where + " eq2/eq4");
      o.require(s.checks.size() == 3 && s.checks[0].name == "eq2" &&
                    s.checks[1].name == "eq4",
                where + ": both summation routes");
    }
  }
  const double s = ms_since(t0) / 1000.0;
  o.require(s < kIdentitySweepBudgetS, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(s) + " s";
  return o;
}

Outcome table_correctness() {
  Outcome o;
  const StirlingTable t(8);
  for (int n = 1; n <= 8; ++n) {
    const auto hist = oracle::cycle_histogram(n);
    const auto row = t.row(n);
    o.require(std::vector<Natural>(row.begin(), row.end()) == hist,
              "row " + std::to_string(n));
  }
  const auto row4 = t.row(4);
  o.require(std::vector<Natural>(row4.begin(), row4.end()) ==
                std::vector<Natural>{0, 6, 11, 6, 1},
            "row 4");
  bool raised = false;
  try {
    StirlingTable wide(22);
  } catch (const OverflowError&) {
    raised = true;
  }
  o.require(raised, "no overflow error at n = 22");
  o.require(StirlingTable(21)(21, 1) == 2432902008176640000u, "c(21,1) = 20!");
  return o;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& in = "") {
  std::istringstream input(in);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, input, out, err);
  return {code, out.str(), err.str()};
}

Outcome cli_contract() {
  Outcome o;
  CliResult r = run_cli({"decode", "5,6,7,4,10,b,r,3,11,g,9"});
  o.require(r.code == 0, "decode exit code");
  o.require(format_colored(json_io::parse_colored(r.out)) ==
                "(1,5,10)g(2)b(3,8,7)r(4)g(6)b(9,11)g",
            "decode output " + r.out);

  r = run_cli({"verify", "--identity", "eq2", "--n", "3", "--x", "2"});
  o.require(r.code == 0, "verify exit code");
  const auto j = json_io::Json::parse(r.out);
  o.require(j["left"] == "0" && j["right"] == "0" && j["pass"] == true,
            "verify output " + r.out);

  r = run_cli({"decode", "1,2"});
  o.require(r.code == 2, "decode 1,2 exit code " + std::to_string(r.code));
  o.require(r.err.find("token 1 forbidden in sequence") != std::string::npos,
            "decode 1,2 message " + r.err);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int x = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::string> alphabet;
    for (int v = 2; v <= n; ++v) alphabet.push_back(std::to_string(v));
    const Palette pal = Palette::standard(x);
    for (const Label& s : pal.letters()) alphabet.push_back(s);
    std::shuffle(alphabet.begin(), alphabet.end(), rng);
    std::string seq;
    for (int t = 0; t < n; ++t) seq += (t ? "," : "") + alphabet[t];

    const CliResult decoded = run_cli({"decode"}, seq);
    const CliResult encoded = run_cli({"encode"}, decoded.out);
    o.require(decoded.code == 0 && encoded.code == 0 && encoded.out == seq + "\n",
              "sequence round trip " + seq);
    const CliResult again = run_cli({"decode"}, encoded.out);
    o.require(again.out == decoded.out, "JSON round trip " + decoded.out);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"encode worked example (11,b,r,2,g,8,5,10,4,6,3)", encode_worked_example},
      {"decode worked example (5,6,7,4,10,b,r,3,11,g,9)", decode_worked_example},
      {"involution worked example ((1)(2,4,3)(5))", involution_worked_example},
      {"exhaustive bijection n<=6 x<=3", exhaustive_bijection},
      {"exhaustive involution n<=6 x<=3", exhaustive_involution},
      {"identity sweep n<=8 0<=x<=5 (eq1-eq4)", identity_sweep},
      {"Stirling table vs brute force, overflow at boundary", table_correctness},
      {"CLI contract and 1000 encode|decode round trips", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
