#include "trapgame/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace trapgame {

namespace {

constexpr std::uint64_t kBlock = 65536;

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  // Distinct stream per block; the multiplier spreads nearby seeds.
  return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * (block + 1)));
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Cumulative weights for inverse-transform sampling.
template <typename Atom>
std::vector<double> cumulative(const std::vector<Atom>& atoms) {
  std::vector<double> cum;
  cum.reserve(atoms.size());
  double acc = 0;
  for (const auto& a : atoms) {
    acc += to_double(a.prob);
    cum.push_back(acc);
  }
  cum.back() = 1.0;  // guard against accumulated rounding
  return cum;
}

std::size_t pick(const std::vector<double>& cum, double u) {
  return std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
}

// Streaming mean and scaled variance; merging is associative and keeps
// constant inputs exact, so block order and grouping never matter.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double d = o.mean - mean;
    const std::uint64_t total = n + o.n;
    mean += d * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(n) *
                     static_cast<double>(o.n) / static_cast<double>(total);
    n = total;
  }
};

}  // namespace

SimulationReport simulate(const GameInstance& g, const SearcherStrategy& s,
                          const HiderStrategy& h, std::uint64_t trials,
                          std::uint64_t seed) {
  validate_strategy(g, s);
  validate_strategy(g, h);
  if (trials < 1) throw DomainError("simulation needs at least one trial");

  std::vector<double> s_cum = cumulative(s.atoms);
  std::vector<double> h_cum = cumulative(h.atoms);
  std::vector<std::uint64_t> s_masks, h_masks;
  std::vector<double> s_gain;
  const bool masks = g.n() <= 64;
  for (const auto& a : s.atoms) {
    if (masks) s_masks.push_back(set_mask(a.open));
    s_gain.push_back(to_double(g.edge_reward(a.open)));
  }
  for (const auto& a : h.atoms) {
    if (masks) h_masks.push_back(set_mask(a.traps));
  }

  Moments total;
  for (std::uint64_t block = 0; block * kBlock < trials; ++block) {
    auto eng = block_engine(seed, block);
    const std::uint64_t count = std::min(kBlock, trials - block * kBlock);
    Moments part;
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::size_t si = pick(s_cum, uniform01(eng));
      const std::size_t hi = pick(h_cum, uniform01(eng));
      const bool miss = masks
                            ? (s_masks[si] & h_masks[hi]) == 0
                            : sets_disjoint(s.atoms[si].open, h.atoms[hi].traps);
      part.add(miss ? s_gain[si] : 0.0);
    }
    total.merge(part);
  }

  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.mean = total.mean;
  report.exact = expected_payoff(g, s, h);
  report.exact_fp = to_double(report.exact);
  const double variance =
      trials > 1 ? std::max(total.m2, 0.0) / static_cast<double>(trials - 1)
                 : 0.0;
  report.std_error = std::sqrt(variance / static_cast<double>(trials));
  const double dev = report.mean - report.exact_fp;
  report.z_score = report.std_error > 0 ? dev / report.std_error : 0.0;
  report.pass = std::abs(dev) <= 3 * report.std_error;
  return report;
}

std::vector<Rat> exact_marginals(int n, const HiderStrategy& h) {
  std::vector<Rat> out(n, Rat(0));
  for (const auto& a : h.atoms) {
    for (Box b : a.traps) {
      if (b < 0 || b >= n) throw DomainError("trap index out of range");
      out[b] += a.prob;
    }
  }
  return out;
}

std::vector<double> empirical_marginals(int n, const HiderStrategy& h,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  std::vector<double> cum = cumulative(h.atoms);
  std::vector<std::uint64_t> counts(n, 0);
  for (std::uint64_t block = 0; block * kBlock < trials; ++block) {
    auto eng = block_engine(seed, block);
    const std::uint64_t count = std::min(kBlock, trials - block * kBlock);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto& traps = h.atoms[pick(cum, uniform01(eng))].traps;
      for (Box b : traps) {
        if (b < 0 || b >= n) throw DomainError("trap index out of range");
        ++counts[b];
      }
    }
  }
  std::vector<double> out(n);
  for (int b = 0; b < n; ++b) {
    out[b] = static_cast<double>(counts[b]) / static_cast<double>(trials);
  }
  return out;
}

}  // namespace trapgame
