#include <doctest.h>

#include "trapgame/one_uniform.hpp"

#include <random>

using namespace trapgame;

namespace {

// Random marginal vectors summing to exactly k with every entry in [0,1]:
// scale random weights to total k, then water-fill any excess above 1
// into the unsaturated entries. Terminates because entries pinned at 1
// never receive again.
std::vector<Rat> random_marginals(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> weight(1, 100);
  std::vector<Int> w(n);
  Int total = 0;
  for (auto& x : w) {
    x = weight(rng);
    total += x;
  }
  std::vector<Rat> m(n);
  for (int i = 0; i < n; ++i) m[i] = Rat(Int(k) * w[i], total);
  for (;;) {
    Rat excess = 0;
    std::vector<int> open;
    for (int i = 0; i < n; ++i) {
      if (m[i] > 1) {
        excess += m[i] - 1;
        m[i] = 1;
      } else if (m[i] < 1) {
        open.push_back(i);
      }
    }
    if (excess == 0) return m;
    REQUIRE(!open.empty());  // impossible while k <= n
    const Rat share = excess / int(open.size());
    for (int i : open) m[i] += share;
  }
}

}  // namespace

TEST_CASE("reciprocal-sum aggregate") {
  std::vector<Rat> r = {Rat(10), Rat(10), Rat(1)};
  CHECK(lambda_of(r, {0, 1}) == 5);
  CHECK(lambda_of(r, {0, 1, 2}) == Rat(5, 6));
  CHECK_THROWS_AS(lambda_of(r, {}), DomainError);
  std::vector<Rat> z = {Rat(0), Rat(1)};
  CHECK_THROWS_AS(lambda_of(z, {0}), DomainError);
}

TEST_CASE("value curve of the three-box example") {
  GameInstance g({Rat(10), Rat(10), Rat(1)}, 1, Hypergraph::one_uniform());
  auto curve = value_curve(g);
  REQUIRE(curve.points.size() == 3);
  CHECK(curve.points[0] == std::pair<int, Rat>{1, Rat(0)});
  CHECK(curve.points[1] == std::pair<int, Rat>{2, Rat(5)});
  CHECK(curve.points[2] == std::pair<int, Rat>{3, Rat(5, 3)});
  CHECK(curve.at(2) == 5);
  CHECK_THROWS_AS(curve.at(4), DomainError);
}

TEST_CASE("three-box example solution") {
  GameInstance g({Rat(10), Rat(10), Rat(1)}, 1, Hypergraph::one_uniform());
  auto res = solve_one_uniform(g);
  CHECK(res.t_star == 2);
  CHECK(res.support == BoxSet{0, 1});
  CHECK(res.searcher_probs ==
        std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
  CHECK(res.hider_marginals ==
        std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
  CHECK(res.solution.value == 5);
  CHECK(res.solution.method == Method::OneUniform);
  check_solution(g, res.solution);
}

TEST_CASE("prefix choice prefers the smallest maximizer") {
  // Equal rewards make every prefix beyond k equally good; t* stays minimal.
  GameInstance g({Rat(6), Rat(6), Rat(6)}, 1, Hypergraph::one_uniform());
  auto res = solve_one_uniform(g);
  // t=2: 1/(2/6) = 3; t=3: 2/(3/6) = 4. Larger prefix wins here.
  CHECK(res.t_star == 3);
  CHECK(res.solution.value == 4);

  GameInstance g2({Rat(4), Rat(4), Rat(1), Rat(1)}, 1,
                  Hypergraph::one_uniform());
  auto res2 = solve_one_uniform(g2);
  // t=2 gives 2; adding reward-1 boxes only hurts.
  CHECK(res2.t_star == 2);
  CHECK(res2.solution.value == 2);
  check_solution(g2, res2.solution);
}

TEST_CASE("zero-reward boxes never enter the support") {
  GameInstance g({Rat(10), Rat(0), Rat(10), Rat(1)}, 1,
                 Hypergraph::one_uniform());
  auto res = solve_one_uniform(g);
  CHECK(res.support == BoxSet{0, 2});
  CHECK(res.solution.value == 5);
  CHECK(res.searcher_probs[1] == 0);
  check_solution(g, res.solution);
}

TEST_CASE("degenerate when at most k boxes are available") {
  GameInstance g({Rat(3), Rat(4)}, 2, Hypergraph::one_uniform());
  auto res = solve_one_uniform(g);
  CHECK(res.solution.value == 0);
  check_solution(g, res.solution);

  GameInstance g2({Rat(3)}, 1, Hypergraph::one_uniform());
  CHECK(solve_one_uniform(g2).solution.value == 0);
}

TEST_CASE("non-singleton edges are out of regime") {
  GameInstance g({Rat(1), Rat(2)}, 1,
                 Hypergraph::explicit_edges({{0}, {0, 1}}));
  CHECK_THROWS_AS(solve_one_uniform(g), RegimeError);
  GameInstance c({Rat(1), Rat(2)}, 1);
  CHECK_THROWS_AS(solve_one_uniform(c), RegimeError);
}

TEST_CASE("explicit singleton subsets restrict the universe") {
  GameInstance g({Rat(10), Rat(10), Rat(1)}, 1,
                 Hypergraph::explicit_edges({{0}, {2}}));
  auto res = solve_one_uniform(g);
  // Only boxes 0 and 2 can be opened: lambda(10,1) = 10/11, t* = 2.
  CHECK(res.solution.value == Rat(10, 11));
  check_solution(g, res.solution);
}

TEST_CASE("curve rises exactly while the next reward covers the value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_int_distribution<int> reward(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    std::uniform_int_distribution<int> trap(1, n);
    std::vector<Rat> rewards(n);
    for (auto& r : rewards) r = reward(rng);
    GameInstance g(rewards, trap(rng), Hypergraph::one_uniform());
    for (const auto& step : curve_steps(g)) {
      CHECK(step.rises == step.reward_covers_value);
    }
  }
}

TEST_CASE("rotation mixture reproduces the pinned two-trap example") {
  HiderStrategy h =
      rotation_mixture({Rat(2, 3), Rat(2, 3), Rat(2, 3)}, 2);
  REQUIRE(h.atoms.size() == 3);
  CHECK(h.atoms[0].traps == BoxSet{0, 1});
  CHECK(h.atoms[1].traps == BoxSet{0, 2});
  CHECK(h.atoms[2].traps == BoxSet{1, 2});
  for (const auto& a : h.atoms) CHECK(a.prob == Rat(1, 3));
}

TEST_CASE("rotation mixture matches arbitrary marginals exactly") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    auto marginals = random_marginals(rng, n, k);
    HiderStrategy h = rotation_mixture(marginals, k);

    Rat total = 0;
    std::vector<Rat> realized(n, Rat(0));
    for (const auto& a : h.atoms) {
      REQUIRE(a.traps.size() == static_cast<std::size_t>(k));
      REQUIRE(is_sorted_unique(a.traps));
      CHECK(a.prob > 0);
      total += a.prob;
      for (Box b : a.traps) realized[b] += a.prob;
    }
    CHECK(total == 1);
    CHECK(realized == marginals);
  }
}

TEST_CASE("rotation mixture rejects inconsistent marginals") {
  CHECK_THROWS_AS(rotation_mixture({Rat(1, 2), Rat(1, 2)}, 2), DomainError);
  CHECK_THROWS_AS(rotation_mixture({Rat(3, 2), Rat(1, 2)}, 2), DomainError);
  CHECK_THROWS_AS(rotation_mixture({Rat(1, 2), Rat(1, 4)}, 1), DomainError);
}
