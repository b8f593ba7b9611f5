#include "trapgame/equal_rewards.hpp"

namespace trapgame {

namespace {

void check_nk(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("equal-reward formulas need 1 <= k <= n");
  }
}

}  // namespace

Rat random_open_payoff(int n, int k, int m, const Rat& reward) {
  check_nk(n, k);
  if (m < 0 || m > n) throw DomainError("open count must lie in 0..n");
  if (m == 0 || m > n - k) return 0;
  Rat p = reward * m;
  for (int i = 0; i < k; ++i) {
    p *= Rat(n - m - i, n - i);
  }
  return p;
}

double random_open_payoff_fp(int n, int k, int m, double reward) {
  check_nk(n, k);
  if (m < 0 || m > n) throw DomainError("open count must lie in 0..n");
  if (m == 0 || m > n - k) return 0.0;
  double p = reward * m;
  for (int i = 0; i < k; ++i) {
    p *= static_cast<double>(n - m - i) / static_cast<double>(n - i);
  }
  return p;
}

int optimal_open_count(int n, int k) {
  check_nk(n, k);
  return (n - k + (k + 1) - 1) / (k + 1);  // ceil((n-k)/(k+1))
}

EqualRewardsSummary equal_rewards_value(int n, int k, const Rat& reward) {
  EqualRewardsSummary out;
  out.m_star = optimal_open_count(n, k);
  out.value = random_open_payoff(n, k, out.m_star, reward);
  return out;
}

Solution solve_equal_rewards(const GameInstance& g,
                             const EnumerationLimits& lim) {
  if (g.hypergraph().kind != Hypergraph::Kind::Complete) {
    throw RegimeError("equal-reward solver needs the complete hypergraph");
  }
  if (!g.rewards_all_equal()) {
    throw RegimeError("equal-reward solver needs identical rewards");
  }
  const int n = g.n();
  const int k = g.k();
  Solution sol;
  if (k == n) {
    BoxSet traps(n);
    for (int i = 0; i < n; ++i) traps[i] = i;
    sol.value = 0;
    sol.searcher = SearcherStrategy::point_mass({0});
    sol.hider = HiderStrategy::point_mass(std::move(traps));
    sol.method = Method::Degenerate;
    return sol;
  }

  const auto summary = equal_rewards_value(n, k, g.reward(0));
  sol.value = summary.value;
  sol.method = Method::EqualRewards;

  if (binomial(n, summary.m_star) > Int(lim.max_rows) ||
      binomial(n, k) > Int(lim.max_cols)) {
    throw CapacityError("uniform mixtures too large to materialize");
  }
  const auto opens = k_subsets(n, summary.m_star);
  const Rat ps(1, Int(opens.size()));
  for (const auto& s : opens) sol.searcher.atoms.push_back({s, ps});
  const auto traps = k_subsets(n, k);
  const Rat ph(1, Int(traps.size()));
  for (const auto& t : traps) sol.hider.atoms.push_back({t, ph});
  return sol;
}

Rat asymptotic_value_fraction(int k) {
  if (k < 1) throw DomainError("trap count must be positive");
  return Rat(1, k + 1) * rat_pow(Rat(k, k + 1), k);
}

ThetaRegime asymptotic_fixed_theta(const Rat& theta) {
  if (theta <= 0 || theta > 1) {
    throw DomainError("theta must lie in (0, 1]");
  }
  ThetaRegime out;
  out.m_star = static_cast<int>(ceil_rat((1 - theta) / theta));
  out.limit = Rat(out.m_star) * rat_pow(1 - theta, out.m_star);
  return out;
}

}  // namespace trapgame
