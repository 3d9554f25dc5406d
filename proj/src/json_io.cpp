#include "ccperm/json_io.hpp"

#include <algorithm>
#include <string>

#include "ccperm/error.hpp"

namespace ccperm::json_io {

Json to_json(const CycleColoredPermutation& c) {
  Json cycles = Json::array();
  for (const Cycle& cyc : c.cycles().cycles) {
    cycles.push_back({{"elements", cyc}, {"color", c.coloring().at(cyc.front())}});
  }
  return {{"n", c.size()}, {"cycles", std::move(cycles)}};
}

CycleColoredPermutation colored_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("missing integer field \"n\"");
  }
  if (!j.contains("cycles") || !j["cycles"].is_array()) {
    throw ParseError("missing array field \"cycles\"");
  }
  const auto declared = j["n"].get<long long>();

  std::vector<Cycle> cycles;
  std::vector<Label> colors;
  for (const Json& entry : j["cycles"]) {
    if (!entry.is_object() || !entry.contains("elements") ||
        !entry["elements"].is_array() || !entry.contains("color") ||
        !entry["color"].is_string()) {
      throw ParseError("each cycle needs \"elements\" and \"color\"");
    }
    Cycle cyc;
    for (const Json& v : entry["elements"]) {
      if (!v.is_number_integer()) throw ParseError("cycle elements must be integers");
      const auto e = v.get<long long>();
      if (e < 1 || e > declared) {
        throw ParseError("cycle element " + std::to_string(e) + " outside 1.." +
                         std::to_string(declared));
      }
      cyc.push_back(static_cast<Element>(e));
    }
    cycles.push_back(std::move(cyc));
    colors.push_back(entry["color"].get<std::string>());
  }

  Permutation p = Permutation::from_cycles(cycles);
  if (p.size() != declared) {
    throw ParseError("cycles cover 1.." + std::to_string(p.size()) +
                     " but n = " + std::to_string(declared));
  }
  CycleColoring coloring;
  for (std::size_t t = 0; t < cycles.size(); ++t) {
    const Element id = *std::min_element(cycles[t].begin(), cycles[t].end());
    coloring.emplace(id, colors[t]);
  }
  return CycleColoredPermutation(std::move(p), std::move(coloring));
}

CycleColoredPermutation parse_colored(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return colored_from_json(j);
}

Json to_json(const RelationSet& relations) {
  Json out = Json::array();
  for (const Relation& r : relations) out.push_back({r.i, r.j});
  return out;
}

Json to_json(const GraphDecomposition& d) {
  Json paths = Json::array();
  for (const LetterPath& p : d.paths) {
    paths.push_back({{"letter", p.letter}, {"vertices", p.vertices}});
  }
  Json cycles = Json::array();
  for (const Cycle& c : d.cycles) cycles.push_back(c);
  return {{"paths", std::move(paths)}, {"cycles", std::move(cycles)}};
}

Json to_json(const VerificationReport& r) {
  Json out = {{"identity", r.identity}, {"n", r.n}, {"x", r.x}};
  if (!r.palette.empty()) out["palette"] = r.palette;
  out["left"] = r.left;
  out["right"] = r.right;
  out["pass"] = r.pass;
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"left", c.left},
                      {"right", c.right},
                      {"pass", c.pass}});
  }
  out["checks"] = std::move(checks);
  Json counts = Json::object();
  for (const auto& [name, value] : r.counts) counts[name] = std::to_string(value);
  out["counts"] = std::move(counts);
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

Json to_json(const StirlingTable& t) {
  Json rows = Json::array();
  for (int n = 0; n <= t.n_max(); ++n) {
    Json row = Json::array();
    for (Natural v : t.row(n)) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  return {{"n_max", t.n_max()}, {"rows", std::move(rows)}};
}

}  // namespace ccperm::json_io
