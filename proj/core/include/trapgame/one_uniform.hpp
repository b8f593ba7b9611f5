#pragma once

// Closed-form solution for games whose hypergraph has only singleton
// edges. With boxes ordered by decreasing reward, the searcher restricts
// attention to the top t boxes for the best prefix size t, opening box j
// with probability proportional to 1/r_j, and the hider equalizes with
// per-box trap marginals realized exactly by a rotation mixture.

#include "trapgame/game.hpp"

namespace trapgame {

// Harmonic-mean style aggregate: 1 / sum_{i in a} (1/rewards[i]).
// Throws DomainError when a is empty or touches a nonpositive reward.
Rat lambda_of(const std::vector<Rat>& rewards, const BoxSet& a);

struct ValueCurve {
  int k = 0;
  // Guaranteed payoff of the best mixture over the top t boxes, for
  // t = k .. (number of positive-reward singleton boxes).
  std::vector<std::pair<int, Rat>> points;

  const Rat& at(int t) const;
};

struct CurveStep {
  int t;
  bool rises;                  // curve value at t >= value at t-1
  bool reward_covers_value;    // t-th reward >= curve value at t
};

struct OneUniformSolution {
  int t_star = 0;                   // prefix size the searcher mixes over
  BoxSet support;                   // those boxes, ascending
  std::vector<Rat> searcher_probs;  // per box; zero off the support
  std::vector<Rat> hider_marginals; // per box; sums to k when not degenerate
  Solution solution;
};

// Requires a hypergraph whose edges are all singletons (the one-uniform
// kind, or an explicit edge list containing only singletons); throws
// RegimeError otherwise. Instances where at most k boxes have positive
// reward and an edge are degenerate with value zero.
ValueCurve value_curve(const GameInstance& g);
OneUniformSolution solve_one_uniform(const GameInstance& g);

// The two sides of the prefix-growth criterion for each t > k: the curve
// rises at t exactly when the t-th reward still covers the curve value.
std::vector<CurveStep> curve_steps(const GameInstance& g);

// Realizes per-box marginals (each in [0,1], summing to exactly k) as an
// explicit mixture over k-box trap sets. Atom probabilities are the
// lengths of the rotation pieces; every atom has exactly k distinct boxes
// and the mixture reproduces the marginals exactly.
HiderStrategy rotation_mixture(const std::vector<Rat>& marginals, int k);

}  // namespace trapgame
