#include "trapgame/game.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace trapgame {

namespace {

// Validates that s is a sorted duplicate-free subset of {0..n-1}.
void check_box_set(const BoxSet& s, int n, const char* role) {
  if (s.empty()) {
    throw InvalidStrategyError(std::string(role) + " must be nonempty");
  }
  if (!is_sorted_unique(s)) {
    throw InvalidStrategyError(std::string(role) +
                               " must be sorted and duplicate-free");
  }
  if (s.front() < 0 || s.back() >= n) {
    throw InvalidStrategyError(std::string(role) +
                               " has a box index out of range");
  }
}

bool edge_less(const BoxSet& a, const BoxSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Hypergraph Hypergraph::explicit_edges(std::vector<BoxSet> edges) {
  if (edges.empty()) {
    throw InvalidInstanceError("explicit hypergraph needs at least one edge");
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.empty() || !is_sorted_unique(e)) {
      throw InvalidInstanceError("hypergraph edge must be a nonempty set");
    }
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Kind::Explicit, std::move(edges)};
}

bool Hypergraph::contains(const BoxSet& edge, int n) const {
  if (edge.empty() || !is_sorted_unique(edge) || edge.front() < 0 ||
      edge.back() >= n) {
    return false;
  }
  switch (kind) {
    case Kind::Complete:
      return true;
    case Kind::OneUniform:
      return edge.size() == 1;
    case Kind::Explicit:
      return std::binary_search(edges.begin(), edges.end(), edge, edge_less);
  }
  return false;
}

GameInstance::GameInstance(std::vector<Rat> rewards, int trap_count,
                           Hypergraph hypergraph)
    : rewards_(std::move(rewards)),
      trap_count_(trap_count),
      hypergraph_(std::move(hypergraph)) {
  if (rewards_.empty()) {
    throw InvalidInstanceError("instance needs at least one box");
  }
  for (const Rat& r : rewards_) {
    if (r < 0) throw InvalidInstanceError("box rewards must be nonnegative");
  }
  const int n_boxes = n();
  if (trap_count_ < 1 || trap_count_ > n_boxes) {
    throw InvalidInstanceError("trap count must satisfy 1 <= k <= n");
  }
  if (hypergraph_.kind == Hypergraph::Kind::Explicit) {
    for (const auto& e : hypergraph_.edges) {
      if (e.back() >= n_boxes) {
        throw InvalidInstanceError("hypergraph edge has a box index out of range");
      }
    }
  }
  total_reward_ = std::accumulate(rewards_.begin(), rewards_.end(), Rat(0));
  by_reward_.resize(n_boxes);
  std::iota(by_reward_.begin(), by_reward_.end(), 0);
  std::stable_sort(by_reward_.begin(), by_reward_.end(),
                   [&](Box a, Box b) { return rewards_[a] > rewards_[b]; });
}

Rat GameInstance::edge_reward(const BoxSet& edge) const {
  Rat sum = 0;
  for (Box b : edge) sum += rewards_.at(b);
  return sum;
}

bool GameInstance::rewards_all_equal() const {
  return std::all_of(rewards_.begin(), rewards_.end(),
                     [&](const Rat& r) { return r == rewards_.front(); });
}

bool GameInstance::rewards_all_positive() const {
  return std::all_of(rewards_.begin(), rewards_.end(),
                     [](const Rat& r) { return r > 0; });
}

SearcherStrategy SearcherStrategy::point_mass(BoxSet edge) {
  return {{{std::move(edge), Rat(1)}}};
}

HiderStrategy HiderStrategy::point_mass(BoxSet traps) {
  return {{{std::move(traps), Rat(1)}}};
}

namespace {

template <typename Atom, typename SetOf>
void validate_atoms(const std::vector<Atom>& atoms, SetOf set_of,
                    const char* what) {
  if (atoms.empty()) {
    throw InvalidStrategyError(std::string(what) + " strategy has no atoms");
  }
  Rat total = 0;
  for (const Atom& a : atoms) {
    if (a.prob < 0) {
      throw InvalidStrategyError(std::string(what) +
                                 " strategy has a negative probability");
    }
    total += a.prob;
  }
  if (total != 1) {
    throw InvalidStrategyError(std::string(what) +
                               " strategy probabilities must sum to exactly 1");
  }
  std::vector<const BoxSet*> seen;
  seen.reserve(atoms.size());
  for (const Atom& a : atoms) seen.push_back(&set_of(a));
  std::sort(seen.begin(), seen.end(),
            [](const BoxSet* a, const BoxSet* b) { return *a < *b; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (*seen[i - 1] == *seen[i]) {
      throw InvalidStrategyError(std::string(what) +
                                 " strategy has duplicate atoms");
    }
  }
}

}  // namespace

void validate_strategy(const GameInstance& g, const SearcherStrategy& s) {
  validate_atoms(
      s.atoms, [](const SearcherAtom& a) -> const BoxSet& { return a.open; },
      "searcher");
  for (const auto& a : s.atoms) {
    if (!g.hypergraph().contains(a.open, g.n())) {
      throw InvalidStrategyError("searcher atom is not an edge of the hypergraph");
    }
  }
}

void validate_strategy(const GameInstance& g, const HiderStrategy& s) {
  validate_atoms(
      s.atoms, [](const HiderAtom& a) -> const BoxSet& { return a.traps; },
      "hider");
  for (const auto& a : s.atoms) {
    check_box_set(a.traps, g.n(), "trap set");
    if (static_cast<int>(a.traps.size()) != g.k()) {
      throw InvalidStrategyError("trap set must contain exactly k boxes");
    }
  }
}

Rat payoff(const GameInstance& g, const BoxSet& open, const BoxSet& traps) {
  if (!g.hypergraph().contains(open, g.n())) {
    throw InvalidStrategyError("opened set is not an edge of the hypergraph");
  }
  check_box_set(traps, g.n(), "trap set");
  if (static_cast<int>(traps.size()) != g.k()) {
    throw InvalidStrategyError("trap set must contain exactly k boxes");
  }
  return sets_disjoint(open, traps) ? g.edge_reward(open) : Rat(0);
}

Rat expected_payoff(const GameInstance& g, const SearcherStrategy& s,
                    const BoxSet& traps) {
  validate_strategy(g, s);
  check_box_set(traps, g.n(), "trap set");
  if (static_cast<int>(traps.size()) != g.k()) {
    throw InvalidStrategyError("trap set must contain exactly k boxes");
  }
  Rat total = 0;
  for (const auto& a : s.atoms) {
    if (a.prob != 0 && sets_disjoint(a.open, traps)) {
      total += a.prob * g.edge_reward(a.open);
    }
  }
  return total;
}

Rat expected_payoff(const GameInstance& g, const BoxSet& open,
                    const HiderStrategy& h) {
  validate_strategy(g, h);
  if (!g.hypergraph().contains(open, g.n())) {
    throw InvalidStrategyError("opened set is not an edge of the hypergraph");
  }
  Rat miss = 0;
  for (const auto& a : h.atoms) {
    if (sets_disjoint(open, a.traps)) miss += a.prob;
  }
  return miss * g.edge_reward(open);
}

Rat expected_payoff(const GameInstance& g, const SearcherStrategy& s,
                    const HiderStrategy& h) {
  validate_strategy(g, s);
  validate_strategy(g, h);
  Rat total = 0;
  for (const auto& sa : s.atoms) {
    if (sa.prob == 0) continue;
    Rat miss = 0;
    for (const auto& ha : h.atoms) {
      if (sets_disjoint(sa.open, ha.traps)) miss += ha.prob;
    }
    total += sa.prob * miss * g.edge_reward(sa.open);
  }
  return total;
}

std::vector<BoxSet> searcher_pure_strategies(const GameInstance& g,
                                             const EnumerationLimits& lim) {
  const int n = g.n();
  const int max_open = n - g.k();
  std::vector<BoxSet> rows;
  switch (g.hypergraph().kind) {
    case Hypergraph::Kind::OneUniform: {
      rows = subsets_up_to(n, 1);
      break;
    }
    case Hypergraph::Kind::Complete: {
      if (n > lim.max_complete_n) {
        throw CapacityError("complete hypergraph too large to enumerate: n = " +
                            std::to_string(n));
      }
      if (subsets_up_to_count(n, max_open) > Int(lim.max_rows)) {
        throw CapacityError("viable edge count exceeds the row limit");
      }
      rows = subsets_up_to(n, max_open);
      break;
    }
    case Hypergraph::Kind::Explicit: {
      for (const auto& e : g.hypergraph().edges) {
        if (static_cast<int>(e.size()) <= max_open) rows.push_back(e);
      }
      break;
    }
  }
  if (rows.size() > lim.max_rows) {
    throw CapacityError("viable edge count exceeds the row limit");
  }
  return rows;
}

std::vector<BoxSet> hider_pure_strategies(const GameInstance& g,
                                          const EnumerationLimits& lim) {
  if (binomial(g.n(), g.k()) > Int(lim.max_cols)) {
    throw CapacityError("trap set count exceeds the column limit");
  }
  return k_subsets(g.n(), g.k());
}

Rat searcher_guarantee(const GameInstance& g, const SearcherStrategy& s,
                       const EnumerationLimits& lim) {
  validate_strategy(g, s);
  auto traps = hider_pure_strategies(g, lim);
  const bool masks = g.n() <= 64;
  std::vector<std::uint64_t> atom_masks;
  std::vector<Rat> atom_gain;
  for (const auto& a : s.atoms) {
    if (masks) atom_masks.push_back(set_mask(a.open));
    atom_gain.push_back(a.prob * g.edge_reward(a.open));
  }
  bool first = true;
  Rat worst = 0;
  for (const auto& h : traps) {
    const std::uint64_t hm = masks ? set_mask(h) : 0;
    Rat total = 0;
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
      const bool miss = masks ? (atom_masks[i] & hm) == 0
                              : sets_disjoint(s.atoms[i].open, h);
      if (miss) total += atom_gain[i];
    }
    if (first || total < worst) {
      worst = total;
      first = false;
    }
  }
  return worst;
}

Rat hider_guarantee(const GameInstance& g, const HiderStrategy& h,
                    const EnumerationLimits& lim) {
  validate_strategy(g, h);
  auto rows = searcher_pure_strategies(g, lim);
  if (rows.empty()) return 0;  // every edge is always trapped
  const bool masks = g.n() <= 64;
  std::vector<std::uint64_t> trap_masks;
  for (const auto& a : h.atoms) {
    if (masks) trap_masks.push_back(set_mask(a.traps));
  }
  Rat best = 0;
  bool first = true;
  for (const auto& edge : rows) {
    const std::uint64_t em = masks ? set_mask(edge) : 0;
    Rat miss = 0;
    for (std::size_t i = 0; i < h.atoms.size(); ++i) {
      const bool ok = masks ? (em & trap_masks[i]) == 0
                            : sets_disjoint(edge, h.atoms[i].traps);
      if (ok) miss += h.atoms[i].prob;
    }
    Rat total = miss * g.edge_reward(edge);
    if (first || total > best) {
      best = total;
      first = false;
    }
  }
  return best;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::OneUniform: return "one_uniform";
    case Method::EqualRewards: return "equal_rewards";
    case Method::SingleTrap: return "single_trap";
    case Method::FourBox: return "four_box";
    case Method::ExactLP: return "lp";
    case Method::Degenerate: return "degenerate";
  }
  return "unknown";
}

Certificates certify(const GameInstance& g, const SearcherStrategy& s,
                     const HiderStrategy& h, const EnumerationLimits& lim) {
  validate_strategy(g, s);
  validate_strategy(g, h);
  Certificates out;
  auto traps = hider_pure_strategies(g, lim);
  auto rows = searcher_pure_strategies(g, lim);
  const bool masks = g.n() <= 64;

  std::vector<std::uint64_t> atom_masks, trap_atom_masks;
  std::vector<Rat> atom_gain;
  for (const auto& a : s.atoms) {
    if (masks) atom_masks.push_back(set_mask(a.open));
    atom_gain.push_back(a.prob * g.edge_reward(a.open));
  }
  for (const auto& a : h.atoms) {
    if (masks) trap_atom_masks.push_back(set_mask(a.traps));
  }

  out.searcher_payoffs.reserve(traps.size());
  for (const auto& hp : traps) {
    const std::uint64_t hm = masks ? set_mask(hp) : 0;
    Rat total = 0;
    for (std::size_t i = 0; i < s.atoms.size(); ++i) {
      const bool miss = masks ? (atom_masks[i] & hm) == 0
                              : sets_disjoint(s.atoms[i].open, hp);
      if (miss) total += atom_gain[i];
    }
    out.searcher_payoffs.push_back(std::move(total));
  }

  out.hider_payoffs.reserve(rows.size());
  for (const auto& edge : rows) {
    const std::uint64_t em = masks ? set_mask(edge) : 0;
    Rat miss = 0;
    for (std::size_t i = 0; i < h.atoms.size(); ++i) {
      const bool ok = masks ? (em & trap_atom_masks[i]) == 0
                            : sets_disjoint(edge, h.atoms[i].traps);
      if (ok) miss += h.atoms[i].prob;
    }
    out.hider_payoffs.push_back(miss * g.edge_reward(edge));
  }

  out.searcher_guarantee =
      *std::min_element(out.searcher_payoffs.begin(), out.searcher_payoffs.end());
  out.hider_guarantee =
      out.hider_payoffs.empty()
          ? Rat(0)
          : *std::max_element(out.hider_payoffs.begin(), out.hider_payoffs.end());
  return out;
}

Certificates check_solution(const GameInstance& g, const Solution& sol,
                            const EnumerationLimits& lim) {
  Certificates c = certify(g, sol.searcher, sol.hider, lim);
  if (c.searcher_guarantee != sol.value || c.hider_guarantee != sol.value) {
    throw std::logic_error(
        "solution failed self-certification: guarantees " +
        rat_string(c.searcher_guarantee) + " / " + rat_string(c.hider_guarantee) +
        " vs claimed value " + rat_string(sol.value));
  }
  return c;
}

}  // namespace trapgame
