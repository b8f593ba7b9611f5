#include "trapgame/partition.hpp"

#include "trapgame/game.hpp"

#include <algorithm>
#include <numeric>

namespace trapgame {

namespace {

// Complete Karmarkar-Karp search for the smallest achievable difference.
// vals is kept sorted in decreasing order; each step merges the two
// largest entries either subtractively (the two on opposite sides, tried
// first) or additively (same side).
class KkSearch {
 public:
  explicit KkSearch(std::vector<Rat> vals) : vals_(std::move(vals)) {
    std::sort(vals_.begin(), vals_.end(), std::greater<>());
    best_ = std::accumulate(vals_.begin(), vals_.end(), Rat(0));
    // Scaled to a common denominator, every signed sum keeps the parity of
    // the total, so an odd scaled total caps how small the difference gets.
    Int scale = 1;
    for (const Rat& v : vals_) scale = lcm(scale, denominator(v));
    const Int scaled_total = numerator(best_) * (scale / denominator(best_));
    if (scaled_total % 2 != 0) floor_ = Rat(Int(1), scale);
  }

  Rat run() {
    descend();
    return best_;
  }

 private:
  void descend() {
    if (best_ == floor_) return;
    const std::size_t sz = vals_.size();
    if (sz == 1) {
      best_ = std::min(best_, vals_[0]);
      return;
    }
    Rat rest = 0;
    for (std::size_t i = 1; i < sz; ++i) rest += vals_[i];
    if (vals_[0] >= rest) {
      // The largest entry dominates: putting everything else opposite it
      // is optimal for this subproblem.
      best_ = std::min(best_, vals_[0] - rest);
      return;
    }
    const Rat a = vals_[0];
    const Rat b = vals_[1];
    vals_.erase(vals_.begin(), vals_.begin() + 2);

    insert_sorted(a - b);
    descend();
    remove_sorted(a - b);

    insert_sorted(a + b);
    descend();
    remove_sorted(a + b);

    vals_.insert(vals_.begin(), b);
    vals_.insert(vals_.begin(), a);
  }

  void insert_sorted(const Rat& v) {
    vals_.insert(
        std::upper_bound(vals_.begin(), vals_.end(), v, std::greater<>()), v);
  }

  void remove_sorted(const Rat& v) {
    vals_.erase(std::find(vals_.begin(), vals_.end(), v));
  }

  std::vector<Rat> vals_;
  Rat best_;
  Rat floor_ = 0;
};

// Lexicographically smallest subset of ranks first..n-1 (by the decreasing
// reward order) summing exactly to target. Include-first depth search:
// a subset containing the current rank precedes every subset without it,
// except that the empty completion wins once the target reaches zero.
class LexRebuild {
 public:
  LexRebuild(const std::vector<Rat>& sorted_vals) : vals_(sorted_vals) {
    suffix_.assign(vals_.size() + 1, Rat(0));
    for (std::size_t i = vals_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + vals_[i];
    }
  }

  bool find(std::size_t first, Rat target, std::vector<int>& out) {
    out.clear();
    nodes_ = 0;
    return descend(first, std::move(target), out);
  }

 private:
  bool descend(std::size_t i, Rat target, std::vector<int>& out) {
    if (target == 0) return true;
    if (++nodes_ > kNodeBudget) {
      throw CapacityError("partition rebuild exceeded its node budget");
    }
    if (i >= vals_.size() || target < 0 || target > suffix_[i]) return false;
    out.push_back(static_cast<int>(i));
    if (descend(i + 1, target - vals_[i], out)) return true;
    out.pop_back();
    return descend(i + 1, std::move(target), out);
  }

  static constexpr long kNodeBudget = 20'000'000;
  const std::vector<Rat>& vals_;
  std::vector<Rat> suffix_;
  long nodes_ = 0;
};

}  // namespace

PartitionResult best_partition(const std::vector<Rat>& rewards,
                               int exact_limit) {
  const int n = static_cast<int>(rewards.size());
  if (n == 0) throw DomainError("partition of an empty reward vector");
  for (const Rat& r : rewards) {
    if (r < 0) throw DomainError("partition rewards must be nonnegative");
  }
  if (n > exact_limit) {
    throw CapacityError("reward vector exceeds the exact partition limit");
  }

  // Rank boxes by decreasing reward, ties by original index.
  std::vector<int> rank_to_box(n);
  std::iota(rank_to_box.begin(), rank_to_box.end(), 0);
  std::stable_sort(rank_to_box.begin(), rank_to_box.end(),
                   [&](int a, int b) { return rewards[a] > rewards[b]; });
  std::vector<Rat> sorted_vals(n);
  for (int i = 0; i < n; ++i) sorted_vals[i] = rewards[rank_to_box[i]];

  const Rat total = std::accumulate(sorted_vals.begin(), sorted_vals.end(),
                                    Rat(0));
  const Rat diff = KkSearch(sorted_vals).run();

  // The canonical side holds rank 0 and sums to (total +- diff) / 2;
  // take the lexicographically smaller rebuild over the feasible targets.
  LexRebuild rebuild(sorted_vals);
  std::vector<int> best_ranks;
  bool have = false;
  for (const Rat& target : {(total + diff) / 2, (total - diff) / 2}) {
    std::vector<int> ranks{0};
    std::vector<int> tail;
    if (!rebuild.find(1, target - sorted_vals[0], tail)) continue;
    ranks.insert(ranks.end(), tail.begin(), tail.end());
    if (!have || ranks < best_ranks) {
      best_ranks = std::move(ranks);
      have = true;
    }
    if (diff == 0) break;  // both targets coincide
  }
  if (!have) {
    throw std::logic_error("partition rebuild found no side at the optimum");
  }

  PartitionResult out;
  out.difference = diff;
  for (int rank : best_ranks) out.side.push_back(rank_to_box[rank]);
  std::sort(out.side.begin(), out.side.end());
  return out;
}

}  // namespace trapgame
