#include "trapgame/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace trapgame {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string idx(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& field(const json& obj, const std::string& parent,
                  const std::string& key) {
  if (!obj.is_object()) throw ParseError(parent, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(parent.empty() ? key : parent + "." + key,
                     "missing required field");
  }
  return *it;
}

// Numbers: integers convert exactly, doubles take their exact binary value,
// strings go through the rational parser ("3/7", "0.25", "12").
Rat rat_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rat(v.get<std::uint64_t>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(path, "value must be finite");
    return Rat(d);
  }
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected a number or a rational string");
}

int int_field(const json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(path, "expected an integer");
  }
  const auto wide = v.get<std::int64_t>();
  if (wide < -(1LL << 31) || wide >= (1LL << 31)) {
    throw ParseError(path, "integer out of range");
  }
  return static_cast<int>(wide);
}

// Wire boxes are 1-based; in memory they are 0-based.
Box box_field(const json& v, const std::string& path, int n) {
  const int b = int_field(v, path);
  if (b < 1 || b > n) {
    throw ParseError(path, "box index must be between 1 and " +
                               std::to_string(n));
  }
  return b - 1;
}

BoxSet box_set_field(const json& v, const std::string& path, int n) {
  if (!v.is_array() || v.empty()) {
    throw ParseError(path, "expected a nonempty array of box indices");
  }
  BoxSet s;
  s.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.push_back(box_field(v[i], idx(path, i), n));
  }
  std::sort(s.begin(), s.end());
  if (!is_sorted_unique(s)) {
    throw ParseError(path, "box indices must be distinct");
  }
  return s;
}

Hypergraph parse_hypergraph(const json& v, int n) {
  const std::string kind =
      field(v, "hypergraph", "kind").is_string()
          ? field(v, "hypergraph", "kind").get<std::string>()
          : throw ParseError("hypergraph.kind", "expected a string");
  if (kind == "complete") return Hypergraph::complete();
  if (kind == "one_uniform") {
    auto it = v.find("boxes");
    if (it == v.end()) return Hypergraph::one_uniform();
    // A subset restricts which boxes may be opened: explicit singletons.
    const BoxSet boxes = box_set_field(*it, "hypergraph.boxes", n);
    std::vector<BoxSet> singles;
    singles.reserve(boxes.size());
    for (Box b : boxes) singles.push_back({b});
    return Hypergraph::explicit_edges(std::move(singles));
  }
  if (kind == "explicit") {
    const json& ev = field(v, "hypergraph", "edges");
    if (!ev.is_array() || ev.empty()) {
      throw ParseError("hypergraph.edges", "expected a nonempty array");
    }
    std::vector<BoxSet> edges;
    edges.reserve(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
      edges.push_back(box_set_field(ev[i], idx("hypergraph.edges", i), n));
    }
    return Hypergraph::explicit_edges(std::move(edges));
  }
  throw ParseError("hypergraph.kind",
                   "unknown kind \"" + kind +
                       "\" (expected complete, one_uniform, or explicit)");
}

ordered strategy_json(const char* set_key, const std::vector<BoxSet>& sets,
                      const std::vector<Rat>& probs) {
  ordered arr = ordered::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ordered atom;
    ordered boxes = ordered::array();
    for (Box b : sets[i]) boxes.push_back(b + 1);
    atom[set_key] = std::move(boxes);
    atom["prob"] = rat_string(probs[i]);
    arr.push_back(std::move(atom));
  }
  return arr;
}

}  // namespace

GameInstance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");

  const json& rv = field(doc, "", "rewards");
  if (!rv.is_array() || rv.empty()) {
    throw ParseError("rewards", "expected a nonempty array");
  }
  std::vector<Rat> rewards;
  rewards.reserve(rv.size());
  for (std::size_t i = 0; i < rv.size(); ++i) {
    Rat r = rat_field(rv[i], idx("rewards", i));
    if (r < 0) throw ParseError(idx("rewards", i), "reward must be nonnegative");
    rewards.push_back(std::move(r));
  }
  const int n = static_cast<int>(rewards.size());

  const int k = int_field(field(doc, "", "k"), "k");
  if (k < 1 || k > n) {
    throw ParseError("k", "trap count must be between 1 and the box count");
  }

  Hypergraph h = Hypergraph::complete();
  if (auto it = doc.find("hypergraph"); it != doc.end()) {
    h = parse_hypergraph(*it, n);
  }

  try {
    return GameInstance(std::move(rewards), k, std::move(h));
  } catch (const InvalidInstanceError& e) {
    throw ParseError("", e.what());
  }
}

GameInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string result_json(const Solution& sol, const Certificates* certs) {
  ordered doc;
  doc["value"] = rat_string(sol.value);
  doc["value_float"] = to_double(sol.value);
  doc["method"] = method_name(sol.method);

  std::vector<BoxSet> opens;
  std::vector<Rat> sprobs;
  for (const auto& a : sol.searcher.atoms) {
    opens.push_back(a.open);
    sprobs.push_back(a.prob);
  }
  doc["searcher_strategy"] = strategy_json("edge", opens, sprobs);

  std::vector<BoxSet> traps;
  std::vector<Rat> hprobs;
  for (const auto& a : sol.hider.atoms) {
    traps.push_back(a.traps);
    hprobs.push_back(a.prob);
  }
  doc["hider_strategy"] = strategy_json("boxes", traps, hprobs);

  if (certs) {
    ordered c;
    c["searcher_guarantee"] = rat_string(certs->searcher_guarantee);
    c["hider_guarantee"] = rat_string(certs->hider_guarantee);
    doc["certificates"] = std::move(c);
  } else {
    doc["certificates"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

ParsedResult parse_result_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");

  ParsedResult out;
  out.value = rat_field(field(doc, "", "value"), "value");
  out.value_float = doc.value("value_float", to_double(out.value));
  out.method = field(doc, "", "method").get<std::string>();

  const json& sv = field(doc, "", "searcher_strategy");
  if (!sv.is_array()) throw ParseError("searcher_strategy", "expected an array");
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const std::string p = idx("searcher_strategy", i);
    const json& atom = sv[i];
    BoxSet edge;
    {
      const json& ev = field(atom, p, "edge");
      if (!ev.is_array() || ev.empty()) {
        throw ParseError(p + ".edge", "expected a nonempty array");
      }
      for (std::size_t j = 0; j < ev.size(); ++j) {
        const int b = int_field(ev[j], idx(p + ".edge", j));
        if (b < 1) throw ParseError(idx(p + ".edge", j), "box index must be positive");
        edge.push_back(b - 1);
      }
      std::sort(edge.begin(), edge.end());
    }
    out.searcher.atoms.push_back(
        {std::move(edge), rat_field(field(atom, p, "prob"), p + ".prob")});
  }

  const json& hv = field(doc, "", "hider_strategy");
  if (!hv.is_array()) throw ParseError("hider_strategy", "expected an array");
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const std::string p = idx("hider_strategy", i);
    const json& atom = hv[i];
    BoxSet traps;
    {
      const json& bv = field(atom, p, "boxes");
      if (!bv.is_array() || bv.empty()) {
        throw ParseError(p + ".boxes", "expected a nonempty array");
      }
      for (std::size_t j = 0; j < bv.size(); ++j) {
        const int b = int_field(bv[j], idx(p + ".boxes", j));
        if (b < 1) throw ParseError(idx(p + ".boxes", j), "box index must be positive");
        traps.push_back(b - 1);
      }
      std::sort(traps.begin(), traps.end());
    }
    out.hider.atoms.push_back(
        {std::move(traps), rat_field(field(atom, p, "prob"), p + ".prob")});
  }

  if (auto it = doc.find("certificates"); it != doc.end() && !it->is_null()) {
    out.searcher_guarantee =
        rat_field(field(*it, "certificates", "searcher_guarantee"),
                  "certificates.searcher_guarantee");
    out.hider_guarantee =
        rat_field(field(*it, "certificates", "hider_guarantee"),
                  "certificates.hider_guarantee");
  }
  return out;
}

}  // namespace trapgame
