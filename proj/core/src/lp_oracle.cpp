#include "trapgame/lp_oracle.hpp"

namespace trapgame {

PayoffMatrix build_payoff_matrix(const GameInstance& g,
                                 const EnumerationLimits& lim) {
  PayoffMatrix out;
  out.rows = searcher_pure_strategies(g, lim);
  out.cols = hider_pure_strategies(g, lim);
  const bool masks = g.n() <= 64;
  std::vector<std::uint64_t> col_masks;
  if (masks) {
    col_masks.reserve(out.cols.size());
    for (const auto& c : out.cols) col_masks.push_back(set_mask(c));
  }
  out.entries.reserve(out.rows.size());
  for (const auto& row : out.rows) {
    const Rat gain = g.edge_reward(row);
    const std::uint64_t rm = masks ? set_mask(row) : 0;
    std::vector<Rat> line(out.cols.size(), Rat(0));
    for (std::size_t j = 0; j < out.cols.size(); ++j) {
      const bool miss = masks ? (rm & col_masks[j]) == 0
                              : sets_disjoint(row, out.cols[j]);
      if (miss) line[j] = gain;
    }
    out.entries.push_back(std::move(line));
  }
  return out;
}

namespace {

// Fallback when no edge can avoid the traps: the value is zero and any
// pair of pure strategies is optimal.
Solution all_trapped_solution(const GameInstance& g) {
  BoxSet edge;
  if (g.hypergraph().kind == Hypergraph::Kind::Explicit) {
    edge = g.hypergraph().edges.front();
  } else {
    edge = {0};
  }
  BoxSet traps(g.k());
  for (int i = 0; i < g.k(); ++i) traps[i] = i;
  Solution sol;
  sol.value = 0;
  sol.searcher = SearcherStrategy::point_mass(std::move(edge));
  sol.hider = HiderStrategy::point_mass(std::move(traps));
  sol.method = Method::Degenerate;
  return sol;
}

}  // namespace

Solution solve_lp(const GameInstance& g, const PayoffMatrix& matrix) {
  if (matrix.rows.empty()) return all_trapped_solution(g);
  MatrixGameSolution lp = solve_matrix_game(matrix.entries);
  Solution sol;
  sol.value = lp.value;
  sol.method = Method::ExactLP;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    if (lp.row_strategy[i] != 0) {
      sol.searcher.atoms.push_back({matrix.rows[i], lp.row_strategy[i]});
    }
  }
  for (std::size_t j = 0; j < matrix.cols.size(); ++j) {
    if (lp.col_strategy[j] != 0) {
      sol.hider.atoms.push_back({matrix.cols[j], lp.col_strategy[j]});
    }
  }
  return sol;
}

Solution solve_oracle(const GameInstance& g, const EnumerationLimits& lim) {
  return solve_lp(g, build_payoff_matrix(g, lim));
}

}  // namespace trapgame
