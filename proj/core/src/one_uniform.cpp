#include "trapgame/one_uniform.hpp"

#include <algorithm>

namespace trapgame {

Rat lambda_of(const std::vector<Rat>& rewards, const BoxSet& a) {
  if (a.empty()) throw DomainError("aggregate of an empty box set");
  Rat recip = 0;
  for (Box b : a) {
    const Rat& r = rewards.at(b);
    if (r <= 0) throw DomainError("aggregate requires positive rewards");
    recip += 1 / r;
  }
  return 1 / recip;
}

const Rat& ValueCurve::at(int t) const {
  for (const auto& [tt, v] : points) {
    if (tt == t) return v;
  }
  throw DomainError("curve has no point at t = " + std::to_string(t));
}

namespace {

// Boxes usable by the singleton solver: positive reward and present as a
// singleton edge, ordered by decreasing reward (ties by index).
// Throws RegimeError if the hypergraph has a non-singleton edge.
std::vector<Box> singleton_universe(const GameInstance& g) {
  const auto& hg = g.hypergraph();
  if (hg.kind == Hypergraph::Kind::Complete) {
    throw RegimeError("singleton solver needs singleton-only edges");
  }
  if (hg.kind == Hypergraph::Kind::Explicit) {
    for (const auto& e : hg.edges) {
      if (e.size() != 1) {
        throw RegimeError("hypergraph has a non-singleton edge");
      }
    }
  }
  std::vector<Box> out;
  for (Box b : g.boxes_by_reward()) {
    if (g.reward(b) > 0 && hg.contains({b}, g.n())) out.push_back(b);
  }
  return out;
}

// Per-t guaranteed payoffs over the sorted universe, t = k .. |universe|.
std::vector<std::pair<int, Rat>> curve_points(const GameInstance& g,
                                              const std::vector<Box>& univ) {
  std::vector<std::pair<int, Rat>> pts;
  const int k = g.k();
  const int m = static_cast<int>(univ.size());
  if (m < k) return pts;
  pts.reserve(m - k + 1);
  Rat recip = 0;
  for (int t = 1; t <= m; ++t) {
    recip += 1 / g.reward(univ[t - 1]);
    if (t >= k) pts.emplace_back(t, Rat(t - k) / recip);
  }
  return pts;
}

}  // namespace

ValueCurve value_curve(const GameInstance& g) {
  ValueCurve curve;
  curve.k = g.k();
  curve.points = curve_points(g, singleton_universe(g));
  return curve;
}

std::vector<CurveStep> curve_steps(const GameInstance& g) {
  auto univ = singleton_universe(g);
  auto pts = curve_points(g, univ);
  std::vector<CurveStep> steps;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CurveStep s;
    s.t = pts[i].first;
    s.rises = pts[i].second >= pts[i - 1].second;
    s.reward_covers_value = g.reward(univ[s.t - 1]) >= pts[i].second;
    steps.push_back(s);
  }
  return steps;
}

HiderStrategy rotation_mixture(const std::vector<Rat>& marginals, int k) {
  const int n = static_cast<int>(marginals.size());
  if (k < 1 || k > n) throw DomainError("marginal realization needs 1 <= k <= n");
  Rat total = 0;
  for (const Rat& y : marginals) {
    if (y < 0 || y > 1) {
      throw DomainError("marginals must lie in [0, 1]");
    }
    total += y;
  }
  if (total != k) {
    throw DomainError("marginals must sum to exactly k");
  }

  // Place box i on the circle of circumference k as the arc
  // [prefix[i], prefix[i+1]). A uniformly random offset in [0, 1) plus the
  // integer shifts 0..k-1 picks exactly k points, hence k distinct boxes.
  // The offset distribution is piecewise constant between consecutive
  // fractional parts of the prefix sums, so finitely many atoms suffice.
  std::vector<Rat> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + marginals[i];

  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (int i = 1; i < n; ++i) {
    const Rat f = prefix[i] - floor_rat(prefix[i]);
    cuts.push_back(f);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  HiderStrategy mix;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const Rat len = cuts[p + 1] - cuts[p];
    const Rat theta = (cuts[p] + cuts[p + 1]) / 2;
    BoxSet traps;
    traps.reserve(k);
    for (int j = 0; j < k; ++j) {
      const Rat point = theta + j;
      // box index i with prefix[i] <= point < prefix[i+1]
      const auto it =
          std::upper_bound(prefix.begin(), prefix.end(), point);
      traps.push_back(static_cast<int>(it - prefix.begin()) - 1);
    }
    mix.atoms.push_back({std::move(traps), len});
  }
  return mix;
}

OneUniformSolution solve_one_uniform(const GameInstance& g) {
  OneUniformSolution out;
  const int n = g.n();
  const int k = g.k();
  auto univ = singleton_universe(g);
  out.searcher_probs.assign(n, Rat(0));
  out.hider_marginals.assign(n, Rat(0));

  if (static_cast<int>(univ.size()) <= k) {
    // The hider can cover every profitable edge: the value is zero.
    out.solution.value = 0;
    out.solution.method = Method::Degenerate;
    BoxSet edge;
    if (g.hypergraph().kind == Hypergraph::Kind::Explicit) {
      edge = g.hypergraph().edges.front();
    } else {
      edge = {0};
    }
    out.searcher_probs[edge[0]] = 1;
    out.solution.searcher = SearcherStrategy::point_mass(std::move(edge));
    BoxSet traps(univ.begin(), univ.end());
    std::sort(traps.begin(), traps.end());
    for (Box b = 0; b < n && static_cast<int>(traps.size()) < k; ++b) {
      if (!set_contains(traps, b)) {
        traps.insert(std::lower_bound(traps.begin(), traps.end(), b), b);
      }
    }
    for (Box b : traps) out.hider_marginals[b] = 1;
    out.solution.hider = HiderStrategy::point_mass(std::move(traps));
    return out;
  }

  auto pts = curve_points(g, univ);
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].second > pts[best].second) best = i;  // smallest maximizer
  }
  out.t_star = pts[best].first;
  const Rat value = pts[best].second;

  out.support.assign(univ.begin(), univ.begin() + out.t_star);
  std::sort(out.support.begin(), out.support.end());

  BoxSet prefix_set(out.support);
  const Rat lam = lambda_of(g.rewards(), prefix_set);
  for (Box b : out.support) {
    out.searcher_probs[b] = lam / g.reward(b);
    out.hider_marginals[b] = 1 - value / g.reward(b);
  }

  out.solution.value = value;
  out.solution.method = Method::OneUniform;
  for (Box b : out.support) {
    out.solution.searcher.atoms.push_back({{b}, out.searcher_probs[b]});
  }
  out.solution.hider = rotation_mixture(out.hider_marginals, k);
  return out;
}

}  // namespace trapgame
