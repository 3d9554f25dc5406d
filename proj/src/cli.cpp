#include "ccperm/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ccperm/codec.hpp"
#include "ccperm/error.hpp"
#include "ccperm/involution.hpp"
#include "ccperm/json_io.hpp"
#include "ccperm/stirling.hpp"
#include "ccperm/verify.hpp"
#include "text.hpp"

namespace ccperm::cli {
namespace {

struct Options {
  std::string input;
  std::string file;
  std::string format;
  std::string palette;
  std::string perm;
  std::string colors;
  std::string identity;
  int n = -1;
  int x = -1;
  int max_n = -1;
};

std::string read_input(const Options& opt, std::istream& in) {
  const bool has_arg = !opt.input.empty() && opt.input != "-";
  const bool has_file = !opt.file.empty();
  if (has_arg && has_file) {
    throw ParseError("give the input either as an argument or with --file, not both");
  }
  if (has_arg) return opt.input;
  if (has_file) {
    std::ifstream f(opt.file);
    if (!f) throw ParseError("cannot read " + opt.file);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<Palette> palette_option(const Options& opt) {
  if (opt.palette.empty()) return std::nullopt;
  return Palette::parse(opt.palette);
}

// The sequence, checked against --palette when one is given.
EncodedSequence read_sequence(const Options& opt, std::istream& in,
                              const std::optional<Palette>& pal) {
  EncodedSequence s = EncodedSequence::parse(read_input(opt, in));
  if (pal) {
    for (const Label& l : s.letters()) {
      if (!pal->contains(l)) {
        throw ParseError("letter '" + l + "' is not in the palette");
      }
    }
  }
  return s;
}

CycleColoredPermutation read_colored(const Options& opt, std::istream& in) {
  if (!opt.perm.empty()) {
    if (!opt.input.empty() || !opt.file.empty()) {
      throw ParseError("--perm cannot be combined with another input");
    }
    std::vector<Label> colors;
    for (std::string_view c : detail::split_commas(opt.colors)) {
      colors.emplace_back(c);
    }
    return CycleColoredPermutation::from_cycle_colors(parse_cycles(opt.perm),
                                                      colors);
  }
  return json_io::parse_colored(read_input(opt, in));
}

int resolve_max_n(const Options& opt, const std::optional<std::string>& env,
                  int fallback) {
  if (opt.max_n >= 0) return opt.max_n;
  if (env && !env->empty()) {
    auto v = detail::parse_int(detail::trim(*env));
    if (!v || *v < 1 || *v > 64) {
      throw ParseError(std::string(kMaxNEnv) + " must be an integer in 1..64");
    }
    return static_cast<int>(*v);
  }
  return fallback;
}

void add_input(CLI::App* sub, Options& opt, const std::string& what) {
  sub->add_option("input", opt.input, what + " (reads standard input if omitted)");
  sub->add_option("--file", opt.file, "read the input from a file");
}

int cmd_encode(const Options& opt, std::istream& in, std::ostream& out) {
  out << encode(read_colored(opt, in)).to_string() << '\n';
  return kSuccess;
}

int cmd_decode(const Options& opt, std::istream& in, std::ostream& out) {
  const auto pal = palette_option(opt);
  out << json_io::to_json(decode(read_sequence(opt, in, pal))).dump() << '\n';
  return kSuccess;
}

int cmd_phi(const Options& opt, std::istream& in, std::ostream& out) {
  const CycleColoredPermutation c = read_colored(opt, in);
  const std::optional<Relation> r = minimal_relation(c);
  const CycleColoredPermutation image = phi(c);
  if (opt.format == "json") {
    json_io::Json j;
    j["relation"] = r ? json_io::Json{r->i, r->j} : json_io::Json(nullptr);
    j["relations"] = json_io::to_json(relations(c));
    j["k_before"] = cycle_count(c.perm());
    j["k_after"] = cycle_count(image.perm());
    j["result"] = json_io::to_json(image);
    out << j.dump() << '\n';
    return kSuccess;
  }
  if (r) {
    out << '(' << r->i << ',' << r->j << ")\n";
  } else {
    out << "fixed point\n";
  }
  out << json_io::to_json(image).dump() << '\n';
  return kSuccess;
}

int cmd_decompose(const Options& opt, std::istream& in, std::ostream& out) {
  const auto pal = palette_option(opt);
  const CcpGraph g = seq_to_graph(read_sequence(opt, in, pal));
  out << json_io::to_json(decompose(g, pal ? &*pal : nullptr)).dump() << '\n';
  return kSuccess;
}

int cmd_dot(const Options& opt, std::istream& in, std::ostream& out) {
  const auto pal = palette_option(opt);
  const CcpGraph g = seq_to_graph(read_sequence(opt, in, pal));
  out << to_dot(g, pal ? &*pal : nullptr);
  return kSuccess;
}

int cmd_table(const Options& opt, std::ostream& out) {
  if (opt.n < 0) throw InvalidArgument("--n must be >= 0");
  const StirlingTable t(opt.n);
  if (opt.format == "json") {
    out << json_io::to_json(t).dump() << '\n';
    return kSuccess;
  }
  for (int n = 0; n <= t.n_max(); ++n) {
    out << n << ':';
    for (Natural v : t.row(n)) out << ' ' << v;
    out << '\n';
  }
  return kSuccess;
}

int cmd_verify(const Options& opt, const std::optional<std::string>& env,
               std::ostream& out) {
  EnumerationLimits limits;
  VerificationReport report;
  if (opt.identity == "eq1" || opt.identity == "eq2") {
    if (opt.x < 0) throw InvalidArgument("--x is required and must be >= 0");
    limits.max_permutation_n = resolve_max_n(opt, env, limits.max_permutation_n);
    report = opt.identity == "eq1" ? verify_unsigned(opt.n, opt.x, limits)
                                   : verify_signed(opt.n, opt.x, limits);
  } else {
    limits.max_colored_n = resolve_max_n(opt, env, limits.max_colored_n);
    std::optional<Palette> pal = palette_option(opt);
    if (!pal) {
      if (opt.x < 1) throw InvalidArgument("--x must be >= 1 without --palette");
      pal = Palette::standard(opt.x);
    } else if (opt.x >= 0 && opt.x != static_cast<int>(pal->size())) {
      throw InvalidArgument("--x disagrees with the --palette size");
    }
    report = opt.identity == "bijection" ? verify_bijection(opt.n, *pal, limits)
                                         : verify_involution(opt.n, *pal, limits);
  }
  out << json_io::to_json(report).dump() << '\n';
  return report.pass ? kSuccess : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_n) {
  CLI::App app{"Cycle-colored permutations: codec, involution and Stirling checks",
               "ccperm"};
  app.require_subcommand(1);
  Options opt;

  auto* encode_cmd = app.add_subcommand(
      "encode", "cycle-colored permutation (JSON) -> sequence");
  add_input(encode_cmd, opt, "coloring JSON");
  encode_cmd->add_option("--perm", opt.perm,
                         "permutation in cycle notation instead of JSON");
  encode_cmd->add_option("--colors", opt.colors,
                         "comma-separated colors, one per canonical cycle")
      ->needs(encode_cmd->get_option("--perm"));

  auto* decode_cmd = app.add_subcommand(
      "decode", "sequence -> cycle-colored permutation (JSON)");
  add_input(decode_cmd, opt, "sequence");
  decode_cmd->add_option("--palette", opt.palette, "allowed letters, in order");

  auto* phi_cmd = app.add_subcommand(
      "phi", "apply the sign-reversing involution to a coloring JSON");
  add_input(phi_cmd, opt, "coloring JSON");
  phi_cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "sequence -> letter paths and cycles (JSON)");
  add_input(decompose_cmd, opt, "sequence");
  decompose_cmd->add_option("--palette", opt.palette, "letter order");

  auto* dot_cmd = app.add_subcommand("dot", "sequence -> Graphviz DOT");
  add_input(dot_cmd, opt, "sequence");
  dot_cmd->add_option("--palette", opt.palette, "letter order");

  auto* table_cmd = app.add_subcommand("table", "unsigned Stirling numbers c(n,k)");
  table_cmd->add_option("--n", opt.n, "largest row")->required();
  table_cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification");
  verify_cmd->add_option("--identity", opt.identity)
      ->required()
      ->check(CLI::IsMember({"eq1", "eq2", "bijection", "involution"}));
  verify_cmd->add_option("--n", opt.n)->required();
  verify_cmd->add_option("--x", opt.x, "number of colors");
  verify_cmd->add_option("--palette", opt.palette, "explicit letters (colored checks)");
  verify_cmd->add_option("--max-n", opt.max_n, "enumeration guard")
      ->check(CLI::Range(1, 64));
  verify_cmd->add_option("--format", opt.format, "json")
      ->check(CLI::IsMember({"json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kMalformedInput;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(opt, in, out);
    if (decode_cmd->parsed()) return cmd_decode(opt, in, out);
    if (phi_cmd->parsed()) return cmd_phi(opt, in, out);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, in, out);
    if (dot_cmd->parsed()) return cmd_dot(opt, in, out);
    if (table_cmd->parsed()) return cmd_table(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, env_max_n, out);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimitOrOverflow;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kLimitOrOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace ccperm::cli
