#include "trapgame/k1.hpp"

#include <numeric>

namespace trapgame {

Rat split_product(const std::vector<Rat>& rewards, const BoxSet& side) {
  Rat total = std::accumulate(rewards.begin(), rewards.end(), Rat(0));
  Rat in_side = 0;
  for (Box b : side) in_side += rewards.at(b);
  const Rat out_side = total - in_side;
  const Rat direct = in_side * out_side;
  const Rat via_diff = (total * total - (in_side - out_side) * (in_side - out_side)) / 4;
  if (direct != via_diff) {
    throw std::logic_error("side-product identity violated");
  }
  return direct;
}

Solution solve_single_trap(const GameInstance& g, int exact_limit) {
  if (g.hypergraph().kind != Hypergraph::Kind::Complete) {
    throw RegimeError("single-trap solver needs the complete hypergraph");
  }
  if (g.k() != 1) {
    throw RegimeError("single-trap solver needs exactly one trap");
  }
  const int n = g.n();
  Solution sol;
  if (n == 1 || g.total_reward() == 0) {
    // Either the lone box is always trapped or nothing is worth opening.
    sol.value = 0;
    BoxSet all(n);
    std::iota(all.begin(), all.end(), 0);
    sol.searcher = SearcherStrategy::point_mass(std::move(all));
    sol.hider = HiderStrategy::point_mass({0});
    sol.method = Method::Degenerate;
    return sol;
  }

  const PartitionResult split = best_partition(g.rewards(), exact_limit);
  const BoxSet other = set_complement(split.side, n);
  const Rat& total = g.total_reward();
  const Rat side_sum = g.edge_reward(split.side);
  const Rat other_sum = total - side_sum;

  sol.value = side_sum * other_sum / total;
  sol.method = Method::SingleTrap;
  if (other_sum != 0) {
    sol.searcher.atoms.push_back({split.side, other_sum / total});
  }
  if (side_sum != 0 && !other.empty()) {
    sol.searcher.atoms.push_back({other, side_sum / total});
  }
  for (Box b = 0; b < n; ++b) {
    if (g.reward(b) != 0) {
      sol.hider.atoms.push_back({{b}, g.reward(b) / total});
    }
  }
  return sol;
}

}  // namespace trapgame
