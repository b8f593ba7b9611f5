#include "trapgame/subsets.hpp"

#include <algorithm>

namespace trapgame {

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: product of i consecutive ints
  }
  return result;
}

std::vector<BoxSet> k_subsets(int n, int k) {
  std::vector<BoxSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  BoxSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance to the next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<BoxSet> subsets_up_to(int n, int max_size) {
  std::vector<BoxSet> out;
  for (int size = 1; size <= std::min(max_size, n); ++size) {
    auto layer = k_subsets(n, size);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Int subsets_up_to_count(int n, int max_size) {
  Int total = 0;
  for (int size = 1; size <= std::min(max_size, n); ++size) {
    total += binomial(n, size);
  }
  return total;
}

bool is_sorted_unique(const BoxSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

bool sets_disjoint(const BoxSet& a, const BoxSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

bool set_contains(const BoxSet& s, Box b) {
  return std::binary_search(s.begin(), s.end(), b);
}

BoxSet set_complement(const BoxSet& s, int n) {
  BoxSet out;
  out.reserve(n - s.size());
  std::size_t j = 0;
  for (Box b = 0; b < n; ++b) {
    if (j < s.size() && s[j] == b) ++j;
    else out.push_back(b);
  }
  return out;
}

std::uint64_t set_mask(const BoxSet& s) {
  std::uint64_t m = 0;
  for (Box b : s) m |= std::uint64_t(1) << b;
  return m;
}

}  // namespace trapgame
