#pragma once

// Closed form for four boxes, two traps, complete hypergraph, positive
// rewards. With boxes ranked r1 >= r2 >= r3 >= r4, one of three searcher
// supports is optimal and each yields a perfect equalizer:
//   - Singletons: open one box, {1} {2} {3} {4};
//   - SharedPair: open {1}, {2}, or the pair {3,4};
//   - TailPairs:  open {1}, {2}, {3}, {1,4}, {2,4}, or {3,4}.
// Opening probabilities are proportional to reciprocal edge rewards. The
// game value is the largest of the three candidate values, and the hider
// side is rebuilt from the matching linear system with a deterministic
// corner pick inside its feasible region.

#include "trapgame/game.hpp"

#include <array>

namespace trapgame {

enum class FourBoxRegime { Singletons, SharedPair, TailPairs };

struct FourBoxValues {
  Rat singletons;   // 2 / (1/r1 + 1/r2 + 1/r3 + 1/r4)
  Rat shared_pair;  // 1 / (1/r1 + 1/r2 + 1/(r3+r4))
  Rat tail_pairs;   // 2 / (1/r1 + 1/r2 + 1/r3 + 1/(r1+r4) + 1/(r2+r4) + 1/(r3+r4))
  FourBoxRegime chosen;  // attains the maximum; ties prefer the order above

  const Rat& chosen_value() const;
};

// All functions below work in ranked space: index i refers to the box
// with the (i+1)-th largest reward. r must be sorted decreasing and
// positive (DomainError otherwise).
FourBoxValues four_box_values(const std::array<Rat, 4>& r);

SearcherStrategy four_box_searcher(const std::array<Rat, 4>& r,
                                   FourBoxRegime regime);

// Hider mixtures over trap pairs. Each requires its regime to be optimal
// (RegimeError otherwise); the corner pick inside the feasibility region
// is deterministic, so repeated calls agree.
HiderStrategy four_box_hider(const std::array<Rat, 4>& r,
                             FourBoxRegime regime);

// Requires n = 4, k = 2, complete hypergraph, positive rewards
// (RegimeError otherwise). Strategies are mapped back to original box
// indices.
Solution solve_four_box(const GameInstance& g);

}  // namespace trapgame
