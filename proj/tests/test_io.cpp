#include <doctest.h>

#include "trapgame/io.hpp"
#include "trapgame/solve.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace trapgame;

namespace {

std::string err_path(const std::string& text) {
  try {
    parse_instance_json(text);
  } catch (const ParseError& e) {
    return e.path;
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("minimal instance defaults to the complete hypergraph") {
  auto g = parse_instance_json(R"({"rewards": [10, 10, 1], "k": 1})");
  CHECK(g.n() == 3);
  CHECK(g.k() == 1);
  CHECK(g.hypergraph().kind == Hypergraph::Kind::Complete);
  CHECK(g.reward(0) == 10);
}

TEST_CASE("rewards accept integers, exact strings, and binary floats") {
  auto g = parse_instance_json(
      R"({"rewards": [3, "5/2", "0.3", 0.25], "k": 2})");
  CHECK(g.reward(0) == 3);
  CHECK(g.reward(1) == Rat(5, 2));
  CHECK(g.reward(2) == Rat(3, 10));   // string decimals parse exactly
  CHECK(g.reward(3) == Rat(1, 4));    // 0.25 is exact in binary
}

TEST_CASE("hypergraph kinds parse with 1-based boxes") {
  auto one = parse_instance_json(
      R"({"rewards": [1, 2, 3], "k": 1, "hypergraph": {"kind": "one_uniform"}})");
  CHECK(one.hypergraph().kind == Hypergraph::Kind::OneUniform);

  auto subset = parse_instance_json(
      R"({"rewards": [1, 2, 3], "k": 1,
          "hypergraph": {"kind": "one_uniform", "boxes": [1, 3]}})");
  REQUIRE(subset.hypergraph().kind == Hypergraph::Kind::Explicit);
  CHECK(subset.hypergraph().edges ==
        std::vector<BoxSet>{{0}, {2}});

  auto exp = parse_instance_json(
      R"({"rewards": [1, 2, 3], "k": 1,
          "hypergraph": {"kind": "explicit", "edges": [[3, 1], [2]]}})");
  CHECK(exp.hypergraph().edges ==
        std::vector<BoxSet>{{1}, {0, 2}});
}

TEST_CASE("parse errors carry the failing field path") {
  CHECK(err_path(R"({"k": 1})") == "rewards");
  CHECK(err_path(R"({"rewards": [], "k": 1})") == "rewards");
  CHECK(err_path(R"({"rewards": [1, -2], "k": 1})") == "rewards[1]");
  CHECK(err_path(R"({"rewards": [1, "x"], "k": 1})") == "rewards[1]");
  CHECK(err_path(R"({"rewards": [1, 2]})") == "k");
  CHECK(err_path(R"({"rewards": [1, 2], "k": 0})") == "k");
  CHECK(err_path(R"({"rewards": [1, 2], "k": 3})") == "k");
  CHECK(err_path(R"({"rewards": [1, 2], "k": "two"})") == "k");
  CHECK(err_path(
            R"({"rewards": [1, 2], "k": 1, "hypergraph": {"kind": "blob"}})") ==
        "hypergraph.kind");
  CHECK(err_path(
            R"({"rewards": [1, 2], "k": 1,
                "hypergraph": {"kind": "explicit", "edges": [[1, 3]]}})") ==
        "hypergraph.edges[0][1]");
  CHECK(err_path(
            R"({"rewards": [1, 2], "k": 1,
                "hypergraph": {"kind": "explicit", "edges": [[1, 1]]}})") ==
        "hypergraph.edges[0]");
  CHECK(err_path("not json at all") == "");
  CHECK(err_path(R"([1, 2, 3])") == "");
}

TEST_CASE("result files round-trip exactly") {
  GameInstance g({Rat(10), Rat(10), Rat(1)}, 1);
  auto sol = solve_any(g);
  auto certs = certify(g, sol.searcher, sol.hider);

  std::string text = result_json(sol, &certs);
  auto parsed = parse_result_json(text);
  CHECK(parsed.value == sol.value);
  CHECK(parsed.method == "single_trap");
  REQUIRE(parsed.searcher.atoms.size() == sol.searcher.atoms.size());
  for (std::size_t i = 0; i < sol.searcher.atoms.size(); ++i) {
    CHECK(parsed.searcher.atoms[i].open == sol.searcher.atoms[i].open);
    CHECK(parsed.searcher.atoms[i].prob == sol.searcher.atoms[i].prob);
  }
  REQUIRE(parsed.hider.atoms.size() == sol.hider.atoms.size());
  REQUIRE(parsed.searcher_guarantee.has_value());
  CHECK(*parsed.searcher_guarantee == certs.searcher_guarantee);
  CHECK(*parsed.hider_guarantee == certs.hider_guarantee);

  // Re-running the sweeps from the parsed strategies reproduces the
  // stored certificates.
  auto again = certify(g, parsed.searcher, parsed.hider);
  CHECK(again.searcher_guarantee == *parsed.searcher_guarantee);
  CHECK(again.hider_guarantee == *parsed.hider_guarantee);

  std::string bare = result_json(sol, nullptr);
  auto parsed2 = parse_result_json(bare);
  CHECK_FALSE(parsed2.searcher_guarantee.has_value());
}

TEST_CASE("value serializes as an exact fraction string") {
  GameInstance g({Rat(10), Rat(10), Rat(1)}, 1, Hypergraph::one_uniform());
  auto sol = solve_any(g);
  std::string text = result_json(sol, nullptr);
  CHECK(text.find("\"5/1\"") != std::string::npos);
  CHECK(text.find("\"one_uniform\"") != std::string::npos);
  CHECK(text.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("load_instance reads files and reports open failures") {
  const std::string path = "io_test_instance.json";
  {
    std::ofstream out(path);
    out << R"({"rewards": [4, 4], "k": 1})";
  }
  auto g = load_instance(path);
  CHECK(g.n() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_instance("definitely_missing.json"), ParseError);
}
