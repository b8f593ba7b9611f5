#pragma once

// Reference solver: enumerate pure strategies, build the payoff matrix,
// and solve the matrix game exactly. Works for any instance within the
// enumeration limits and is the ground truth the closed-form solvers are
// tested against.

#include "trapgame/game.hpp"
#include "trapgame/simplex.hpp"

namespace trapgame {

struct PayoffMatrix {
  std::vector<BoxSet> rows;  // viable searcher edges
  std::vector<BoxSet> cols;  // trap sets
  std::vector<std::vector<Rat>> entries;  // entries[row][col]
};

PayoffMatrix build_payoff_matrix(const GameInstance& g,
                                 const EnumerationLimits& lim = {});

// Solves the game described by a prebuilt matrix. Atoms with zero
// probability are dropped from the returned strategies.
Solution solve_lp(const GameInstance& g, const PayoffMatrix& matrix);

Solution solve_oracle(const GameInstance& g, const EnumerationLimits& lim = {});

}  // namespace trapgame
