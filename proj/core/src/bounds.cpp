#include "trapgame/bounds.hpp"

#include "trapgame/lp_oracle.hpp"
#include "trapgame/solve.hpp"

#include <algorithm>

namespace trapgame {

namespace {

void need_complete(const GameInstance& g, const char* who) {
  if (g.hypergraph().kind != Hypergraph::Kind::Complete) {
    throw RegimeError(std::string(who) + " requires the complete hypergraph");
  }
}

// Sum of the k largest rewards.
Rat top_reward_sum(const GameInstance& g) {
  Rat sum = 0;
  for (int i = 0; i < g.k(); ++i) sum += g.reward(g.boxes_by_reward()[i]);
  return sum;
}

}  // namespace

Rat value_upper_bound(const GameInstance& g) {
  need_complete(g, "the upper bound");
  const int k = g.k();
  return g.total_reward() / (k + 1) * rat_pow(Rat(k, k + 1), k);
}

Rat value_lower_bound(const GameInstance& g) {
  need_complete(g, "the lower bound");
  const int k = g.k();
  return rat_pow(Rat(k, k + 1), k) * (g.total_reward() - top_reward_sum(g)) /
         (k + 1);
}

Rat independent_open_guarantee(const GameInstance& g, const Rat& open_prob,
                               const EnumerationLimits& lim) {
  need_complete(g, "the independent-open guarantee");
  if (open_prob < 0 || open_prob > 1) {
    throw DomainError("open probability must lie in [0, 1]");
  }
  // Against traps H the expected payoff is p (1-p)^k r(~H): a box pays
  // off when it is opened and every trapped box stays closed.
  const Rat factor = open_prob * rat_pow(1 - open_prob, g.k());
  bool first = true;
  Rat worst = 0;
  for (const auto& h : hider_pure_strategies(g, lim)) {
    const Rat payoff = factor * (g.total_reward() - g.edge_reward(h));
    if (first || payoff < worst) {
      worst = payoff;
      first = false;
    }
  }
  return worst;
}

PartitionBound partition_bound(const GameInstance& g,
                               const std::vector<BoxSet>& edges,
                               const EnumerationLimits& lim) {
  if (edges.empty()) throw DomainError("edge family must be nonempty");
  PartitionBound out;
  out.edges = edges;
  Rat recip = 0;
  std::vector<Rat> rewards;
  for (const auto& e : edges) {
    if (!g.hypergraph().contains(e, g.n())) {
      throw DomainError("family edge is not an edge of the hypergraph");
    }
    const Rat r = g.edge_reward(e);
    if (r <= 0) {
      throw DomainError("family edges must have positive reward");
    }
    rewards.push_back(r);
    recip += 1 / r;
  }
  out.lambda = 1 / recip;

  const bool masks = g.n() <= 64;
  std::vector<std::uint64_t> edge_masks;
  if (masks) {
    for (const auto& e : edges) edge_masks.push_back(set_mask(e));
  }
  long min_free = -1;
  for (const auto& h : hider_pure_strategies(g, lim)) {
    const std::uint64_t hm = masks ? set_mask(h) : 0;
    long free_edges = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const bool ok = masks ? (edge_masks[i] & hm) == 0
                            : sets_disjoint(edges[i], h);
      if (ok) ++free_edges;
    }
    if (min_free < 0 || free_edges < min_free) min_free = free_edges;
  }
  out.min_free_edges = min_free;
  out.guaranteed = out.lambda * min_free;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.strategy.atoms.push_back({edges[i], out.lambda / rewards[i]});
  }

  // A family that partitions every box leaves exactly t - k parts free.
  std::size_t covered = 0;
  bool disjoint = true;
  std::uint64_t seen = 0;
  if (masks) {
    for (const auto& m : edge_masks) {
      if (seen & m) disjoint = false;
      seen |= m;
    }
    covered = static_cast<std::size_t>(__builtin_popcountll(seen));
  } else {
    BoxSet all;
    for (const auto& e : edges) all.insert(all.end(), e.begin(), e.end());
    std::sort(all.begin(), all.end());
    disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    covered = all.size();
  }
  if (disjoint && covered == static_cast<std::size_t>(g.n())) {
    const long expected = static_cast<long>(edges.size()) - g.k();
    if (min_free != std::max(expected, 0L)) {
      throw std::logic_error("partition family has unexpected free-edge count");
    }
  }
  return out;
}

namespace {

// Family guarantee for the conjecture search; returns nothing when an
// edge has zero reward (the proportional mixture is undefined there).
std::optional<Rat> family_guarantee(const std::vector<Rat>& edge_rewards,
                                    const std::vector<std::uint64_t>& edge_masks,
                                    const std::vector<std::uint64_t>& trap_masks,
                                    const std::vector<std::size_t>& pick) {
  Rat recip = 0;
  for (std::size_t i : pick) {
    if (edge_rewards[i] <= 0) return std::nullopt;
    recip += 1 / edge_rewards[i];
  }
  long min_free = -1;
  for (const std::uint64_t hm : trap_masks) {
    long free_edges = 0;
    for (std::size_t i : pick) {
      if ((edge_masks[i] & hm) == 0) ++free_edges;
    }
    if (min_free < 0 || free_edges < min_free) min_free = free_edges;
    if (min_free == 0) return Rat(0);
  }
  return Rat(min_free) / recip;
}

}  // namespace

ConjectureReport check_conjecture(const GameInstance& g, int max_support,
                                  std::uint64_t budget,
                                  const EnumerationLimits& lim) {
  ConjectureReport report;
  const Solution lp = solve_oracle(g, lim);
  report.lp_value = lp.value;
  report.best = 0;

  const auto viable = searcher_pure_strategies(g, lim);
  const auto traps = hider_pure_strategies(g, lim);
  if (g.n() > 64) {
    throw CapacityError("conjecture checker supports at most 64 boxes");
  }
  std::vector<Rat> edge_rewards;
  std::vector<std::uint64_t> edge_masks;
  for (const auto& e : viable) {
    edge_rewards.push_back(g.edge_reward(e));
    edge_masks.push_back(set_mask(e));
  }
  std::vector<std::uint64_t> trap_masks;
  for (const auto& h : traps) trap_masks.push_back(set_mask(h));

  auto index_of = [&](const BoxSet& e) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < viable.size(); ++i) {
      if (viable[i] == e) return i;
    }
    return std::nullopt;
  };
  auto consider = [&](const std::vector<std::size_t>& pick) {
    ++report.supports_examined;
    const auto bound =
        family_guarantee(edge_rewards, edge_masks, trap_masks, pick);
    if (!bound) return;
    if (*bound > report.lp_value) {
      throw std::logic_error("family guarantee exceeded the game value");
    }
    if (*bound > report.best) {
      report.best = *bound;
      report.witness.clear();
      for (std::size_t i : pick) report.witness.push_back(viable[i]);
    }
  };

  // Seed with the supports of the two exact solutions; the structured
  // closed forms are all proportional families, so on their domains the
  // dispatcher's support already closes the gap.
  for (const Solution& sol : {solve_any(g, lim), lp}) {
    std::vector<std::size_t> pick;
    bool usable = true;
    for (const auto& atom : sol.searcher.atoms) {
      const auto idx = index_of(atom.open);
      if (!idx) {
        usable = false;
        break;
      }
      pick.push_back(*idx);
    }
    if (usable && !pick.empty()) consider(pick);
    if (report.best == report.lp_value) break;
  }

  // Exhaustive pass: families by increasing size, lexicographic within a
  // size, until the budget runs out or the gap closes.
  bool exhausted_all = true;
  if (report.best != report.lp_value) {
    const std::size_t ecount = viable.size();
    bool stop = false;
    for (int size = 1; size <= max_support && !stop; ++size) {
      if (static_cast<std::size_t>(size) > ecount) break;
      std::vector<std::size_t> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        if (report.supports_examined >= budget) {
          stop = true;
          exhausted_all = false;
          break;
        }
        consider(pick);
        if (report.best == report.lp_value) {
          stop = true;
          break;
        }
        int i = size - 1;
        while (i >= 0 && pick[i] == ecount - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  report.gap = report.lp_value - report.best;
  report.consistent = report.gap == 0;
  report.complete = report.consistent || exhausted_all;
  return report;
}

}  // namespace trapgame
