#include "trapgame/solve.hpp"

#include "trapgame/equal_rewards.hpp"
#include "trapgame/k1.hpp"
#include "trapgame/lp_oracle.hpp"
#include "trapgame/n4k2.hpp"
#include "trapgame/one_uniform.hpp"

namespace trapgame {

namespace {

bool singletons_only(const Hypergraph& hg) {
  if (hg.kind == Hypergraph::Kind::OneUniform) return true;
  if (hg.kind != Hypergraph::Kind::Explicit) return false;
  for (const auto& e : hg.edges) {
    if (e.size() != 1) return false;
  }
  return true;
}

// With k = n-1 every viable edge is a singleton, so the game collapses to
// the singleton closed form over whatever singleton edges exist.
Solution reduce_to_singletons(const GameInstance& g) {
  std::vector<BoxSet> singles;
  for (Box b = 0; b < g.n(); ++b) {
    if (g.hypergraph().contains({b}, g.n())) singles.push_back({b});
  }
  if (singles.empty()) {
    // No singleton edge: every edge of the hypergraph is always trapped.
    Solution sol;
    sol.value = 0;
    sol.searcher = SearcherStrategy::point_mass(g.hypergraph().edges.front());
    BoxSet traps(g.k());
    for (int i = 0; i < g.k(); ++i) traps[i] = i;
    sol.hider = HiderStrategy::point_mass(std::move(traps));
    sol.method = Method::Degenerate;
    return sol;
  }
  GameInstance reduced(g.rewards(), g.k(),
                       Hypergraph::explicit_edges(std::move(singles)));
  return solve_one_uniform(reduced).solution;
}

}  // namespace

Solution solve_any(const GameInstance& g, const EnumerationLimits& lim) {
  if (singletons_only(g.hypergraph())) {
    return solve_one_uniform(g).solution;
  }
  if (g.hypergraph().kind == Hypergraph::Kind::Complete) {
    if (g.rewards_all_equal()) return solve_equal_rewards(g, lim);
    if (g.k() == 1) return solve_single_trap(g);
    if (g.n() == 4 && g.k() == 2 && g.rewards_all_positive()) {
      return solve_four_box(g);
    }
  }
  if (g.k() == g.n() - 1) {
    return reduce_to_singletons(g);
  }
  return solve_oracle(g, lim);
}

Solution solve_with(const GameInstance& g, Method method,
                    const EnumerationLimits& lim) {
  switch (method) {
    case Method::OneUniform:
      return solve_one_uniform(g).solution;
    case Method::EqualRewards:
      return solve_equal_rewards(g, lim);
    case Method::SingleTrap:
      return solve_single_trap(g);
    case Method::FourBox:
      return solve_four_box(g);
    case Method::ExactLP:
      return solve_oracle(g, lim);
    case Method::Degenerate:
      break;
  }
  throw RegimeError("method cannot be forced");
}

}  // namespace trapgame
