#pragma once

// Small combinatorics toolkit: binomial coefficients and deterministic
// subset enumeration over box indices 0..n-1. All enumeration orders are
// part of the library contract (matrix rows, strategy atom order, and
// certificate vectors all inherit them).

#include "trapgame/rational.hpp"

#include <cstdint>
#include <vector>

namespace trapgame {

using Box = int;
using BoxSet = std::vector<Box>;  // strictly increasing box indices

Int binomial(int n, int k);

// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<BoxSet> k_subsets(int n, int k);

// All nonempty subsets of size <= max_size, ordered by size then
// lexicographically within each size.
std::vector<BoxSet> subsets_up_to(int n, int max_size);

// Number of sets subsets_up_to would produce, computed without enumerating.
Int subsets_up_to_count(int n, int max_size);

bool is_sorted_unique(const BoxSet& s);
bool sets_disjoint(const BoxSet& a, const BoxSet& b);
bool set_contains(const BoxSet& s, Box b);

// Sorted complement of s within {0..n-1}.
BoxSet set_complement(const BoxSet& s, int n);

std::uint64_t set_mask(const BoxSet& s);  // requires max element < 64

}  // namespace trapgame
