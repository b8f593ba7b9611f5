#pragma once

// Core model of the search game: a set of boxes with nonnegative rewards,
// a hider who places k traps, and a searcher who opens one edge of a
// hypergraph over the boxes. The searcher collects the summed reward of the
// opened boxes unless the opened set touches a trap, in which case the
// payoff is zero. The searcher maximizes, the hider minimizes.

#include "trapgame/rational.hpp"
#include "trapgame/subsets.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trapgame {

struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The instance itself is malformed (bad sizes, negative rewards, ...).
struct InvalidInstanceError : GameError {
  using GameError::GameError;
};

// A strategy violates its invariants or does not fit the instance.
struct InvalidStrategyError : GameError {
  using GameError::GameError;
};

// An operation was called outside its mathematical domain.
struct DomainError : GameError {
  using GameError::GameError;
};

// A specialized solver was asked to handle an instance outside its regime.
struct RegimeError : GameError {
  using GameError::GameError;
};

// An exact computation would exceed the configured enumeration limits.
struct CapacityError : GameError {
  using GameError::GameError;
};

struct Hypergraph {
  enum class Kind { Complete, OneUniform, Explicit };

  Kind kind = Kind::Complete;
  // Explicit only: edges sorted by (size, lexicographic), deduplicated.
  std::vector<BoxSet> edges;

  static Hypergraph complete() { return {Kind::Complete, {}}; }
  static Hypergraph one_uniform() { return {Kind::OneUniform, {}}; }
  static Hypergraph explicit_edges(std::vector<BoxSet> edges);

  // Membership test for a sorted candidate edge against box count n.
  bool contains(const BoxSet& edge, int n) const;
};

class GameInstance {
 public:
  GameInstance(std::vector<Rat> rewards, int trap_count,
               Hypergraph hypergraph = Hypergraph::complete());

  int n() const { return static_cast<int>(rewards_.size()); }
  int k() const { return trap_count_; }
  const std::vector<Rat>& rewards() const { return rewards_; }
  const Rat& reward(Box b) const { return rewards_.at(b); }
  const Hypergraph& hypergraph() const { return hypergraph_; }

  const Rat& total_reward() const { return total_reward_; }
  Rat edge_reward(const BoxSet& edge) const;

  // Box indices ordered by decreasing reward, ties by increasing index.
  const std::vector<Box>& boxes_by_reward() const { return by_reward_; }

  bool rewards_all_equal() const;
  bool rewards_all_positive() const;

 private:
  std::vector<Rat> rewards_;
  int trap_count_;
  Hypergraph hypergraph_;
  Rat total_reward_;
  std::vector<Box> by_reward_;
};

struct SearcherAtom {
  BoxSet open;  // an edge of the hypergraph
  Rat prob;
};

struct SearcherStrategy {
  std::vector<SearcherAtom> atoms;

  static SearcherStrategy point_mass(BoxSet edge);
};

struct HiderAtom {
  BoxSet traps;  // exactly k boxes
  Rat prob;
};

struct HiderStrategy {
  std::vector<HiderAtom> atoms;

  static HiderStrategy point_mass(BoxSet traps);
};

// Throw InvalidStrategyError unless: all probabilities nonnegative and
// summing to exactly 1, atoms distinct, every open set an edge of the
// instance's hypergraph / every trap set of size k with valid box indices.
void validate_strategy(const GameInstance& g, const SearcherStrategy& s);
void validate_strategy(const GameInstance& g, const HiderStrategy& s);

// Pure-strategy payoff to the searcher: edge reward if no opened box is
// trapped, zero otherwise. Validates both arguments.
Rat payoff(const GameInstance& g, const BoxSet& open, const BoxSet& traps);

Rat expected_payoff(const GameInstance& g, const SearcherStrategy& s,
                    const HiderStrategy& h);
Rat expected_payoff(const GameInstance& g, const SearcherStrategy& s,
                    const BoxSet& traps);
Rat expected_payoff(const GameInstance& g, const BoxSet& open,
                    const HiderStrategy& h);

struct EnumerationLimits {
  int max_complete_n = 12;        // complete hypergraph edge enumeration
  std::size_t max_rows = 50000;   // searcher pure strategies
  std::size_t max_cols = 50000;   // hider pure strategies
};

// Searcher pure strategies kept by the exact solver: edges with at most
// n-k boxes (larger edges always touch a trap and are weakly dominated).
// Complete hypergraphs enumerate by increasing size, lexicographic within
// size; explicit hypergraphs keep their canonical edge order filtered for
// size. Throws CapacityError when the limits would be exceeded.
std::vector<BoxSet> searcher_pure_strategies(const GameInstance& g,
                                             const EnumerationLimits& lim = {});

// All k-element trap sets in lexicographic order.
std::vector<BoxSet> hider_pure_strategies(const GameInstance& g,
                                          const EnumerationLimits& lim = {});

// Worst-case expected payoff of a searcher mixture over all trap sets.
Rat searcher_guarantee(const GameInstance& g, const SearcherStrategy& s,
                       const EnumerationLimits& lim = {});

// Best-response expected payoff against a hider mixture over all viable
// edges (the value the hider concedes).
Rat hider_guarantee(const GameInstance& g, const HiderStrategy& h,
                    const EnumerationLimits& lim = {});

enum class Method {
  OneUniform,
  EqualRewards,
  SingleTrap,
  FourBox,
  ExactLP,
  Degenerate,
};

std::string method_name(Method m);

struct Certificates {
  // Expected payoff of the searcher mixture against each hider pure
  // strategy, in hider_pure_strategies order.
  std::vector<Rat> searcher_payoffs;
  // Expected payoff of each viable edge against the hider mixture, in
  // searcher_pure_strategies order.
  std::vector<Rat> hider_payoffs;
  Rat searcher_guarantee;  // min of searcher_payoffs
  Rat hider_guarantee;     // max of hider_payoffs
};

Certificates certify(const GameInstance& g, const SearcherStrategy& s,
                     const HiderStrategy& h, const EnumerationLimits& lim = {});

struct Solution {
  Rat value;
  SearcherStrategy searcher;
  HiderStrategy hider;
  Method method = Method::ExactLP;
};

// Full optimality check: both guarantees must equal the claimed value.
// Returns the certificates; throws std::logic_error on any mismatch.
Certificates check_solution(const GameInstance& g, const Solution& sol,
                            const EnumerationLimits& lim = {});

}  // namespace trapgame
