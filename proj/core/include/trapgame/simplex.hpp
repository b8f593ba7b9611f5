#pragma once

// Exact solver for finite two-player zero-sum matrix games. The row player
// maximizes, the column player minimizes. Arithmetic is exact throughout:
// the matrix is shifted positive, scaled to integers, and the resulting
// linear program is solved with integer-pivoting simplex (all tableau
// entries stay integral; each pivot divides out the previous pivot value
// exactly). The returned strategies are certified optimal against every
// pure strategy before returning.

#include "trapgame/rational.hpp"

#include <vector>

namespace trapgame {

struct MatrixGameSolution {
  Rat value;
  std::vector<Rat> row_strategy;  // maximizer mixture over rows
  std::vector<Rat> col_strategy;  // minimizer mixture over columns
  int pivots = 0;
};

// payoff[i][j] is the amount the column player pays the row player when
// row i meets column j. Requires a nonempty rectangular matrix; throws
// std::invalid_argument otherwise and std::logic_error if the computed
// strategies fail certification (which would indicate a solver bug).
MatrixGameSolution solve_matrix_game(
    const std::vector<std::vector<Rat>>& payoff);

}  // namespace trapgame
