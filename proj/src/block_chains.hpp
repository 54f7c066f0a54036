// Greedy chain consumption over the 2-descent blocks. Shared by the raw
// capacity sequence of the forward map and by the adjusted 2-descent count,
// which must agree on whether the first block stays empty.

#pragma once

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat::detail {

// Block boundaries with sentinels: D[0] = 0, D[k] = k-th 2-descent for
// k = 1..r, D[r+1] = n. Block k is the interval ]D[k], D[k+1]].
std::vector<int> block_bounds(const Permutation& p);

// Left window boundaries t_k, one per block k = 1..r; index 0 holds the
// unconstrained t_0 = 0. t_k is the smallest 2-descent opening the maximal
// run of consecutive-integer 2-descents that ends at the k-th one.
std::vector<int> window_tops(const Permutation& p);

// One greedy pass from the last block down to the first. Block k consumes
// the position- and value-increasing sequence of pending 2-inversion starts
// at or after t_k whose total chain length is maximal, preferring the
// lexicographically greatest position tuple on ties; chains follow
// start -> target links while the target starts a pending 2-inversion.
// Entry k of the result is the number of 2-inversions block k consumed.
std::vector<int> greedy_block_capacities(const Permutation& p);

} // namespace permstat::detail
