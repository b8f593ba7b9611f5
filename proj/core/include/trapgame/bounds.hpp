#pragma once

// General value bounds and a desk-scale checker for the proportional
// support conjecture: that some edge family, opened with probabilities
// inversely proportional to edge rewards, achieves the game value.

#include "trapgame/game.hpp"

#include <cstdint>
#include <optional>

namespace trapgame {

// R0/(k+1) * (k/(k+1))^k with R0 the total reward. Requires the complete
// hypergraph.
Rat value_upper_bound(const GameInstance& g);

// Guarantee of opening each box independently with probability 1/(k+1):
// (k/(k+1))^k * (R0 - r([k]))/(k+1), where r([k]) sums the k largest
// rewards. Requires the complete hypergraph.
Rat value_lower_bound(const GameInstance& g);

// Exact worst-case expected payoff of independent opening with a given
// probability, by exhaustive sweep of the hider's pure strategies.
Rat independent_open_guarantee(const GameInstance& g, const Rat& open_prob,
                               const EnumerationLimits& lim = {});

struct PartitionBound {
  std::vector<BoxSet> edges;
  Rat lambda;          // 1 / sum of reciprocal edge rewards
  long min_free_edges; // min over trap sets of edges untouched by traps
  Rat guaranteed;      // min_free_edges * lambda, a lower bound on value
  SearcherStrategy strategy;  // open edge E with probability lambda/r(E)
};

// Lower bound from mixing over an explicit edge family with probabilities
// proportional to reciprocal edge rewards. Edges must belong to the
// hypergraph and have positive reward. When the family partitions all
// boxes into t parts, min_free_edges equals t - k (asserted).
PartitionBound partition_bound(const GameInstance& g,
                               const std::vector<BoxSet>& edges,
                               const EnumerationLimits& lim = {});

struct ConjectureReport {
  Rat lp_value;            // exact game value
  Rat best;                // best proportional-family guarantee found
  Rat gap;                 // lp_value - best, always >= 0
  std::vector<BoxSet> witness;  // family attaining best
  bool consistent = false; // gap == 0
  bool complete = false;   // enumeration finished (or gap hit 0 early)
  std::uint64_t supports_examined = 0;
};

// Evaluates candidate families: the supports of the dispatcher's and the
// LP oracle's optimal searcher strategies first, then all families of at
// most max_support viable edges in increasing-size lexicographic order,
// stopping early once the gap reaches zero or the budget is spent.
ConjectureReport check_conjecture(const GameInstance& g, int max_support = 8,
                                  std::uint64_t budget = 200000,
                                  const EnumerationLimits& lim = {});

}  // namespace trapgame
