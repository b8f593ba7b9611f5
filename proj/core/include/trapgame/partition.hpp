#pragma once

// Minimum-difference two-way partition of the reward vector, with a
// deterministic canonical representative. Used by the single-trap solver,
// whose optimal searcher mixes between one side and its complement.

#include "trapgame/game.hpp"
#include "trapgame/rational.hpp"
#include "trapgame/subsets.hpp"

#include <vector>

namespace trapgame {

struct PartitionResult {
  // Canonical side, as sorted indices into the input vector. Contains the
  // box with the largest reward (ties by lowest index); among minimizers
  // with that box, the side is lexicographically smallest when boxes are
  // ranked by decreasing reward. Zero-reward boxes land in the complement.
  BoxSet side;
  Rat difference;  // |sum(side) - sum(complement)|, minimized
};

// Exact search: the optimal difference comes from a complete
// Karmarkar-Karp branch and bound, then the canonical side is rebuilt by
// a pruned lexicographic scan. Throws CapacityError when the vector has
// more than exact_limit entries (the search is exponential in the worst
// case) or when the rebuild exceeds its node budget.
PartitionResult best_partition(const std::vector<Rat>& rewards,
                               int exact_limit = 40);

}  // namespace trapgame
