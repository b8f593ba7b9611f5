#pragma once

// Sampling-based validation of strategies. Deterministic for a given
// seed: trials run in fixed blocks of 65536 with per-block derived seeds,
// so results do not depend on how blocks might be distributed across
// workers. The generator is std::mt19937_64 (identified in the report).

#include "trapgame/game.hpp"

#include <cstdint>
#include <string>

namespace trapgame {

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double std_error = 0;  // sample stdev / sqrt(trials)
  Rat exact;             // expected payoff computed exactly
  double exact_fp = 0;
  double z_score = 0;
  bool pass = false;     // |mean - exact| <= 3 * std_error
  std::string rng = "mt19937_64";
};

// Plays the two mixtures against each other trials times. Strategies are
// validated first; atom probabilities are converted to floating
// cumulative weights once.
SimulationReport simulate(const GameInstance& g, const SearcherStrategy& s,
                          const HiderStrategy& h, std::uint64_t trials,
                          std::uint64_t seed);

// Exact per-box trap probabilities of a hider mixture.
std::vector<Rat> exact_marginals(int n, const HiderStrategy& h);

// Observed per-box trap frequencies over sampled trap sets.
std::vector<double> empirical_marginals(int n, const HiderStrategy& h,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

}  // namespace trapgame
