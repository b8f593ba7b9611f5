#pragma once

// Closed form for a single trap on the complete hypergraph. The searcher
// splits the boxes into two near-balanced halves and opens one of them,
// weighted toward the lighter half; the hider traps box i with
// probability r_i / total.

#include "trapgame/game.hpp"
#include "trapgame/partition.hpp"

namespace trapgame {

// Product of the two side sums, computed directly and via the difference
// identity 4 r(S) r(~S) = total^2 - (r(S) - r(~S))^2; throws logic_error
// if the two disagree.
Rat split_product(const std::vector<Rat>& rewards, const BoxSet& side);

// Requires the complete hypergraph and exactly one trap (RegimeError
// otherwise). exact_limit bounds the partition search size.
Solution solve_single_trap(const GameInstance& g, int exact_limit = 40);

}  // namespace trapgame
