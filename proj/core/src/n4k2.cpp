#include "trapgame/n4k2.hpp"

#include <algorithm>

namespace trapgame {

namespace {

void check_ranked(const std::array<Rat, 4>& r) {
  for (int i = 0; i < 4; ++i) {
    if (r[i] <= 0) throw DomainError("four-box formulas need positive rewards");
    if (i > 0 && r[i] > r[i - 1]) {
      throw DomainError("four-box rewards must be sorted decreasing");
    }
  }
}

// Reciprocals of the singles and of the pairs involving the last box.
struct Recips {
  Rat s1, s2, s3, s4;      // 1/r_i
  Rat p14, p24, p34, p12, p13, p23;  // 1/(r_i + r_j)

  explicit Recips(const std::array<Rat, 4>& r)
      : s1(1 / r[0]), s2(1 / r[1]), s3(1 / r[2]), s4(1 / r[3]),
        p14(1 / (r[0] + r[3])), p24(1 / (r[1] + r[3])),
        p34(1 / (r[2] + r[3])), p12(1 / (r[0] + r[1])),
        p13(1 / (r[0] + r[2])), p23(1 / (r[1] + r[2])) {}
};

struct PairProbs {
  // Order: {0,1}, {0,2}, {0,3}, {1,2}, {1,3}, {2,3} in ranked space.
  std::array<Rat, 6> q;

  HiderStrategy to_strategy() const {
    static const std::array<BoxSet, 6> kPairs = {
        BoxSet{0, 1}, BoxSet{0, 2}, BoxSet{0, 3},
        BoxSet{1, 2}, BoxSet{1, 3}, BoxSet{2, 3}};
    Rat total = 0;
    HiderStrategy out;
    for (int i = 0; i < 6; ++i) {
      if (q[i] < 0) {
        throw std::logic_error("four-box hider produced a negative probability");
      }
      total += q[i];
      if (q[i] != 0) out.atoms.push_back({kPairs[i], q[i]});
    }
    if (total != 1) {
      throw std::logic_error("four-box hider probabilities do not sum to 1");
    }
    return out;
  }
};

// Deterministic point inside { xl <= x <= xu, yl <= y <= yu,
// sl <= x+y <= su }: x takes its smallest feasible position (including
// the bound implied by y's cap), then y is pushed just far enough.
// Feasibility of the region implies every assertion below holds.
struct Corner {
  Rat x, y;

  Corner(const Rat& xl, const Rat& xu, const Rat& yl, const Rat& yu,
         const Rat& sl, const Rat& su) {
    x = std::max(xl, sl - yu);
    y = std::max(yl, sl - x);
    if (x > xu || y > yu || x + y > su) {
      throw std::logic_error("four-box hider corner fell outside its region");
    }
  }
};

PairProbs hider_singletons(const std::array<Rat, 4>& r, const Rat& value) {
  const Recips c(r);
  // Shorthands for the equalizer solution: with x = q{2,3}/V and
  // y = q{1,3}/V, the remaining pair probabilities are affine in x, y.
  const Rat half_a = (-c.s1 - c.s2 + c.s3 + c.s4) / 2;
  const Rat half_b = (-c.s1 + c.s2 - c.s3 + c.s4) / 2;
  const Rat half_c = (c.s1 + c.s2 + c.s3 - c.s4) / 2;

  const Rat xl = std::max(Rat(0), -half_a);
  const Rat xu = std::min(c.p12, c.p34 - half_a);
  const Rat yl = std::max(Rat(0), -half_b);
  const Rat yu = std::min(c.p13, c.p24 - half_b);
  const Rat sl = std::max(c.s1 - c.p14, half_c - c.p23);
  const Rat su = std::min(c.s1, half_c);

  const Corner pick(xl, xu, yl, yu, sl, su);
  PairProbs out;
  out.q[0] = (pick.x + half_a) * value;          // {0,1}
  out.q[1] = (pick.y + half_b) * value;          // {0,2}
  out.q[2] = (half_c - pick.x - pick.y) * value; // {0,3}
  out.q[3] = (c.s1 - pick.x - pick.y) * value;   // {1,2}
  out.q[4] = pick.y * value;                     // {1,3}
  out.q[5] = pick.x * value;                     // {2,3}
  return out;
}

PairProbs hider_shared_pair(const std::array<Rat, 4>& r, const Rat& value) {
  const Recips c(r);
  // x = q{0,2}/V and y = q{1,2}/V; the two traps never both sit in the
  // shared pair.
  const Rat xl = std::max(Rat(0), c.s2 - c.p23);
  const Rat xu = c.p24;
  const Rat yl = std::max(Rat(0), c.s1 - c.p13);
  const Rat yu = c.p14;
  const Rat sl = c.s1 + c.s2 - c.s3 + c.p34;
  const Rat su = c.s4 - c.p34;

  const Corner pick(xl, xu, yl, yu, sl, su);
  PairProbs out;
  out.q[0] = value * c.p34;              // {0,1}
  out.q[1] = pick.x * value;             // {0,2}
  out.q[2] = (c.s2 - pick.x) * value;    // {0,3}
  out.q[3] = pick.y * value;             // {1,2}
  out.q[4] = (c.s1 - pick.y) * value;    // {1,3}
  out.q[5] = 0;                          // {2,3}
  return out;
}

PairProbs hider_tail_pairs(const std::array<Rat, 4>& r, const Rat& value) {
  const Recips c(r);
  PairProbs out;
  out.q[0] = value * c.p34;                          // {0,1}
  out.q[1] = value * c.p24;                          // {0,2}
  out.q[3] = value * c.p14;                          // {1,2}
  out.q[2] = 1 - value * (c.p24 + c.p34 + c.s1);     // {0,3}
  out.q[4] = 1 - value * (c.p14 + c.p34 + c.s2);     // {1,3}
  out.q[5] = 1 - value * (c.p14 + c.p24 + c.s3);     // {2,3}
  return out;
}

}  // namespace

const Rat& FourBoxValues::chosen_value() const {
  switch (chosen) {
    case FourBoxRegime::Singletons: return singletons;
    case FourBoxRegime::SharedPair: return shared_pair;
    case FourBoxRegime::TailPairs: return tail_pairs;
  }
  throw std::logic_error("unreachable");
}

FourBoxValues four_box_values(const std::array<Rat, 4>& r) {
  check_ranked(r);
  const Recips c(r);
  FourBoxValues out;
  out.singletons = 2 / (c.s1 + c.s2 + c.s3 + c.s4);
  out.shared_pair = 1 / (c.s1 + c.s2 + c.p34);
  out.tail_pairs = 2 / (c.s1 + c.s2 + c.s3 + c.p14 + c.p24 + c.p34);
  if (out.singletons >= out.shared_pair && out.singletons >= out.tail_pairs) {
    out.chosen = FourBoxRegime::Singletons;
  } else if (out.shared_pair >= out.tail_pairs) {
    out.chosen = FourBoxRegime::SharedPair;
  } else {
    out.chosen = FourBoxRegime::TailPairs;
  }
  return out;
}

SearcherStrategy four_box_searcher(const std::array<Rat, 4>& r,
                                   FourBoxRegime regime) {
  check_ranked(r);
  std::vector<BoxSet> support;
  switch (regime) {
    case FourBoxRegime::Singletons:
      support = {{0}, {1}, {2}, {3}};
      break;
    case FourBoxRegime::SharedPair:
      support = {{0}, {1}, {2, 3}};
      break;
    case FourBoxRegime::TailPairs:
      support = {{0}, {1}, {2}, {0, 3}, {1, 3}, {2, 3}};
      break;
  }
  std::vector<Rat> weight;
  Rat total = 0;
  for (const auto& edge : support) {
    Rat sum = 0;
    for (Box b : edge) sum += r[b];
    weight.push_back(1 / sum);
    total += weight.back();
  }
  SearcherStrategy out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    out.atoms.push_back({support[i], weight[i] / total});
  }
  return out;
}

HiderStrategy four_box_hider(const std::array<Rat, 4>& r,
                             FourBoxRegime regime) {
  const FourBoxValues vals = four_box_values(r);
  const Rat* mine = nullptr;
  switch (regime) {
    case FourBoxRegime::Singletons: mine = &vals.singletons; break;
    case FourBoxRegime::SharedPair: mine = &vals.shared_pair; break;
    case FourBoxRegime::TailPairs: mine = &vals.tail_pairs; break;
  }
  if (*mine < vals.singletons || *mine < vals.shared_pair ||
      *mine < vals.tail_pairs) {
    throw RegimeError("requested four-box regime is not optimal here");
  }
  PairProbs probs;
  switch (regime) {
    case FourBoxRegime::Singletons:
      probs = hider_singletons(r, *mine);
      break;
    case FourBoxRegime::SharedPair:
      probs = hider_shared_pair(r, *mine);
      break;
    case FourBoxRegime::TailPairs:
      probs = hider_tail_pairs(r, *mine);
      break;
  }
  return probs.to_strategy();
}

Solution solve_four_box(const GameInstance& g) {
  if (g.hypergraph().kind != Hypergraph::Kind::Complete || g.n() != 4 ||
      g.k() != 2) {
    throw RegimeError("four-box solver requires n=4, k=2 on the complete hypergraph");
  }
  if (!g.rewards_all_positive()) {
    throw RegimeError("four-box solver needs positive rewards");
  }
  const auto& order = g.boxes_by_reward();
  std::array<Rat, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = g.reward(order[i]);

  const FourBoxValues vals = four_box_values(r);
  SearcherStrategy searcher = four_box_searcher(r, vals.chosen);
  HiderStrategy hider = four_box_hider(r, vals.chosen);

  // Translate ranked indices back to original boxes.
  auto map_edge = [&](const BoxSet& e) {
    BoxSet out;
    for (Box b : e) out.push_back(order[b]);
    std::sort(out.begin(), out.end());
    return out;
  };
  Solution sol;
  sol.value = vals.chosen_value();
  sol.method = Method::FourBox;
  for (auto& a : searcher.atoms) {
    sol.searcher.atoms.push_back({map_edge(a.open), a.prob});
  }
  for (auto& a : hider.atoms) {
    sol.hider.atoms.push_back({map_edge(a.traps), a.prob});
  }
  return sol;
}

}  // namespace trapgame
