#pragma once

// JSON instance and result documents. Box indices are 1-based on the wire
// and 0-based in memory. Exact values travel as "num/den" strings; floats
// are advisory companions.

#include "trapgame/game.hpp"

#include <optional>
#include <string>

namespace trapgame {

struct ParseError : GameError {
  std::string path;  // dotted field path, e.g. "hypergraph.edges[2][0]"

  ParseError(std::string field_path, const std::string& message)
      : GameError(field_path.empty() ? message : field_path + ": " + message),
        path(std::move(field_path)) {}
};

// Instance schema:
//   {
//     "rewards": [10, "5/2", "0.75", ...],   // nonnegative
//     "k": 1,
//     "hypergraph": {"kind": "complete"}                  // default
//                 | {"kind": "one_uniform", "boxes": [1, 3]}  // optional subset
//                 | {"kind": "explicit", "edges": [[1,2],[3]]}
//   }
GameInstance parse_instance_json(const std::string& text);
GameInstance load_instance(const std::string& path);

// Serializes a solution (certificates optional) to the result schema:
// value/"value_float", method, searcher_strategy, hider_strategy,
// certificates.
std::string result_json(const Solution& sol, const Certificates* certs);

struct ParsedResult {
  Rat value;
  double value_float = 0;
  std::string method;
  SearcherStrategy searcher;
  HiderStrategy hider;
  std::optional<Rat> searcher_guarantee;
  std::optional<Rat> hider_guarantee;
};

ParsedResult parse_result_json(const std::string& text);

}  // namespace trapgame
