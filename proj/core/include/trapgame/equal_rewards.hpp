#pragma once

// Closed forms for the complete hypergraph when every box carries the same
// reward. Opening a uniformly random m-subset is optimal for the best m,
// and hiding on a uniformly random k-subset equalizes; the value admits a
// simple product expression that also yields the large-n limits.

#include "trapgame/game.hpp"

namespace trapgame {

// Expected payoff of opening a uniformly random m-subset against k traps
// on n boxes of equal reward: reward * m * prod_{i<k} (n-m-i)/(n-i).
// Requires 1 <= k <= n and 0 <= m <= n; zero whenever m > n-k.
Rat random_open_payoff(int n, int k, int m, const Rat& reward);

// Same quantity in floating point, for sizes where exact evaluation is
// not wanted.
double random_open_payoff_fp(int n, int k, int m, double reward);

// Smallest maximizer of random_open_payoff over m: ceil((n-k)/(k+1)).
int optimal_open_count(int n, int k);

struct EqualRewardsSummary {
  int m_star = 0;
  Rat value;
};

// Value and optimal open count without materializing strategies; works
// for large n.
EqualRewardsSummary equal_rewards_value(int n, int k, const Rat& reward);

// Full solution with the uniform mixtures materialized; requires a
// complete hypergraph with equal rewards (RegimeError otherwise) and
// instance sizes within the enumeration limits (CapacityError).
Solution solve_equal_rewards(const GameInstance& g,
                             const EnumerationLimits& lim = {});

// Large-n limit of value/(n*reward) for fixed k: (1/(k+1)) (k/(k+1))^k.
Rat asymptotic_value_fraction(int k);

struct ThetaRegime {
  int m_star = 0;  // optimal open count, independent of n in this regime
  Rat limit;       // limit of value/reward as n grows with k = theta*n
};

// Proportional regime k ~ theta*n for theta in (0, 1].
ThetaRegime asymptotic_fixed_theta(const Rat& theta);

}  // namespace trapgame
