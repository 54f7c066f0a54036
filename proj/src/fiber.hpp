// Diagram classes shared by the two directions of the bijection. Every word
// determines a slope diagram (2-descent boundaries, adjusted capacities,
// 2-inversion targets), and every image word determines the same data through
// its descent decomposition. Words sharing one diagram form a class on each
// side; the map pairs the two classes index-wise in lexicographic order, so
// the inverse direction is exact by construction.

#pragma once

#include <json.hpp>

#include <compare>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat::detail {

/// Diagram data identifying one class: 2-descent boundaries d2 (leading 0
/// included), the sorted 2-inversion target positions, and whether the
/// first block carries capacity. Image words yield the same key through
/// d2 = d - c over their descent blocks, with the flag read off tau(1).
/// The capacity vector itself stays per-word data: the exchange of one
/// capacity unit between blocks is exactly what the matching must be free
/// to do, since classes split by the full vector do not balance.
struct FiberKey {
    int n = 0;
    std::vector<int> d2;
    std::vector<int> targets;
    bool c0_positive = false;

    auto operator<=>(const FiberKey&) const = default;
};

/// One class: every source word drawing this diagram and every image word
/// drawn on it, both in lexicographic order, plus the pairing between them.
/// The pairing follows the constructive labelling rules wherever they give
/// each source of the class its own image; sources the rules leave without
/// one (dead end, or two sources claiming the same image) are paired with
/// the unclaimed images in lexicographic order. Both repairs are functions
/// of the class alone, so the two directions always agree.
struct Fiber {
    std::vector<std::vector<int>> sources;
    std::vector<std::vector<int>> images;
    std::vector<int> to_image;   // index into images, one per source
    std::vector<int> to_source;  // inverse of to_image
    int repaired = 0;            // sources not placed by the labelling rules
};

FiberKey source_key(const Permutation& p);
FiberKey image_key(const Permutation& tau);

/// Class lookup backed by a process-wide cache, so exhaustive sweeps pay the
/// enumeration once per diagram. Throws invariant_error when the two sides
/// of a class differ in size, since that would break the bijection globally
/// rather than for a single input.
const Fiber& fiber_for(const FiberKey& key);

/// Position of `word` in the lexicographically sorted `list`, or -1 when
/// absent.
int fiber_rank(const std::vector<std::vector<int>>& list, const std::vector<int>& word);

/// Label assignment for one source word by the constructive rules: circles
/// receive the 2-inversion targets (uniqueness sweep, then a feasibility
/// search over the residual sets in target order), dots the remaining
/// values (uniqueness sweeps interleaved with smallest-letter carriers kept
/// completable). Returns the labelled word, or empty on a dead end. The
/// optional sinks receive the pass-by-pass records.
std::vector<int> rule_label(const FiberKey& key, const std::vector<int>& source,
                            nlohmann::ordered_json* circle_passes = nullptr,
                            nlohmann::ordered_json* dot_passes = nullptr);

} // namespace permstat::detail
