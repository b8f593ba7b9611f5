#pragma once

// Front door: route an instance to the most specific exact solver.
//   1. singleton-only hypergraphs -> prefix closed form;
//   2. complete hypergraph: equal rewards -> uniform mixtures;
//      k = 1 -> balanced split; n = 4, k = 2 (positive rewards) -> the
//      four-box regimes;
//   3. k = n-1 -> only singleton edges are viable, reduce to case 1;
//   4. anything else -> exact LP over enumerated pure strategies.

#include "trapgame/game.hpp"

namespace trapgame {

Solution solve_any(const GameInstance& g, const EnumerationLimits& lim = {});

// Force a particular solver; throws RegimeError when it does not apply
// to the instance and CapacityError when it would exceed the limits.
Solution solve_with(const GameInstance& g, Method method,
                    const EnumerationLimits& lim = {});

}  // namespace trapgame
