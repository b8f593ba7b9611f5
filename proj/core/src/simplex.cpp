#include "trapgame/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace trapgame {

namespace {

// Integer-pivoting simplex on: maximize sum(y) subject to N y <= b, y >= 0,
// where column j of N is structural variable j and b is the uniform
// right-hand side. All entries of N must be positive, which also bounds the
// feasible region. The tableau stores integers with a shared denominator d;
// a pivot on (r, c) maps T[i][j] to (T[r][c] T[i][j] - T[i][c] T[r][j]) / d
// for i != r, leaves row r unchanged, and sets d to the old T[r][c]. Every
// division is exact.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Int>>& n_mat, const Int& rhs)
      : m_(n_mat.size()), h_(n_mat[0].size()), cols_(h_ + m_ + 1), d_(1) {
    t_.assign(m_ + 1, std::vector<Int>(cols_, 0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < h_; ++j) t_[i][j] = n_mat[i][j];
      t_[i][h_ + i] = 1;
      t_[i][cols_ - 1] = rhs;
    }
    for (std::size_t j = 0; j < h_; ++j) t_[m_][j] = -1;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = h_ + i;
  }

  int run() {
    // Dantzig's rule keeps pivot counts low on these instances; Bland's
    // rule takes over after a generous budget to guarantee termination.
    const int bland_after = 64 + 4 * static_cast<int>(m_ + h_);
    const int hard_cap = 10000 + 16 * static_cast<int>(m_ + h_);
    int pivots = 0;
    while (true) {
      const std::size_t c =
          pivots < bland_after ? pick_dantzig() : pick_bland();
      if (c == cols_) break;  // no negative reduced cost: optimal
      const std::size_t r = ratio_test(c);
      pivot(r, c);
      if (++pivots > hard_cap) {
        throw std::logic_error("simplex failed to terminate");
      }
    }
    return pivots;
  }

  Rat objective() const { return Rat(t_[m_][cols_ - 1], d_); }

  // Structural solution y, from the basic rows.
  std::vector<Rat> structural() const {
    std::vector<Rat> y(h_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < h_) y[basis_[i]] = Rat(t_[i][cols_ - 1], d_);
    }
    return y;
  }

  // Dual solution u, from the reduced costs on the slack columns.
  std::vector<Rat> dual() const {
    std::vector<Rat> u(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) u[i] = Rat(t_[m_][h_ + i], d_);
    return u;
  }

 private:
  // Most negative reduced cost; ties broken by smallest column index.
  // Returns cols_ when no reduced cost is negative.
  std::size_t pick_dantzig() const {
    std::size_t best = cols_;
    for (std::size_t j = 0; j + 1 < cols_; ++j) {
      if (t_[m_][j] < 0 && (best == cols_ || t_[m_][j] < t_[m_][best])) {
        best = j;
      }
    }
    return best;
  }

  std::size_t pick_bland() const {
    for (std::size_t j = 0; j + 1 < cols_; ++j) {
      if (t_[m_][j] < 0) return j;
    }
    return cols_;
  }

  // Leaving row: minimize rhs / column entry over positive entries, by
  // cross-multiplication; ties broken by smallest basis label (Bland).
  std::size_t ratio_test(std::size_t c) const {
    std::size_t best = m_ + 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (t_[i][c] <= 0) continue;
      if (best == m_ + 1) {
        best = i;
        continue;
      }
      const Int lhs = t_[i][cols_ - 1] * t_[best][c];
      const Int rhs = t_[best][cols_ - 1] * t_[i][c];
      if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[best])) best = i;
    }
    if (best == m_ + 1) {
      throw std::logic_error("simplex detected an unbounded direction");
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Int piv = t_[r][c];
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      auto& row = t_[i];
      const Int tic = row[c];
      if (tic == 0) {
        if (piv != d_) {
          for (auto& v : row) {
            if (v != 0) v = v * piv / d_;
          }
        }
        continue;
      }
      const auto& prow = t_[r];
      for (std::size_t j = 0; j < cols_; ++j) {
        row[j] = (piv * row[j] - tic * prow[j]) / d_;
      }
    }
    d_ = piv;
    basis_[r] = c;
  }

  std::size_t m_, h_, cols_;
  Int d_;
  std::vector<std::vector<Int>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

MatrixGameSolution solve_matrix_game(
    const std::vector<std::vector<Rat>>& payoff) {
  const std::size_t m = payoff.size();
  if (m == 0 || payoff[0].empty()) {
    throw std::invalid_argument("payoff matrix must be nonempty");
  }
  const std::size_t h = payoff[0].size();
  for (const auto& row : payoff) {
    if (row.size() != h) {
      throw std::invalid_argument("payoff matrix must be rectangular");
    }
  }

  // Shift so every entry is >= 1; the shifted value is then positive.
  Rat min_entry = payoff[0][0];
  for (const auto& row : payoff) {
    for (const Rat& v : row) min_entry = std::min(min_entry, v);
  }
  const Rat sigma = min_entry < 1 ? Rat(1) - min_entry : Rat(0);

  // Scale the shifted matrix to integers with one common denominator.
  Int den = 1;
  for (const auto& row : payoff) {
    for (const Rat& v : row) {
      const Int dv = denominator(v + sigma);
      den = den / gcd(den, dv) * dv;
    }
  }
  std::vector<std::vector<Int>> n_mat(m, std::vector<Int>(h));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const Rat v = payoff[i][j] + sigma;
      n_mat[i][j] = numerator(v) * (den / denominator(v));
    }
  }

  Tableau tab(n_mat, den);
  MatrixGameSolution out;
  out.pivots = tab.run();

  // Objective equals 1/v' where v' is the value of the shifted game.
  const Rat z = tab.objective();
  if (z <= 0) throw std::logic_error("simplex produced a nonpositive objective");
  out.value = 1 / z - sigma;

  std::vector<Rat> y = tab.structural();
  std::vector<Rat> u = tab.dual();
  Rat ysum = 0, usum = 0;
  for (const Rat& v : y) ysum += v;
  for (const Rat& v : u) usum += v;
  if (ysum <= 0 || usum <= 0) {
    throw std::logic_error("simplex produced an empty optimal mixture");
  }
  out.col_strategy.reserve(h);
  for (const Rat& v : y) out.col_strategy.push_back(v / ysum);
  out.row_strategy.reserve(m);
  for (const Rat& v : u) out.row_strategy.push_back(v / usum);

  // Certify against every pure strategy before returning.
  for (std::size_t j = 0; j < h; ++j) {
    Rat col = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (out.row_strategy[i] != 0) col += out.row_strategy[i] * payoff[i][j];
    }
    if (col < out.value) {
      throw std::logic_error("row strategy fails to guarantee the value");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rat row = 0;
    for (std::size_t j = 0; j < h; ++j) {
      if (out.col_strategy[j] != 0) row += payoff[i][j] * out.col_strategy[j];
    }
    if (row > out.value) {
      throw std::logic_error("column strategy fails to guarantee the value");
    }
  }
  return out;
}

}  // namespace trapgame
