#pragma once

#include <json.hpp>

#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// Left boundaries t_k of the candidate windows, one per block k = 1..r;
/// index 0 holds the unconstrained t_0 = 0. t_k is the smallest 2-descent
/// opening the maximal run of consecutive-integer 2-descents that ends at
/// the k-th one.
std::vector<int> tops(const Permutation& p);

/// Raw capacity sequence c0[k], k = 0..r: blocks are processed from the last
/// to the first, each taking the longest chain-weighted increasing sequence
/// of 2-inversion starts at or after t_k from the shrinking pool (ties go to
/// the lexicographically greatest position tuple).
std::vector<int> compute_c0(const Permutation& p);

/// Capacity adjustment sweep: walking i = 1..n-1 over the raw diagram, a
/// descending dot pair at a position that is not a 2-descent adds one unit
/// of capacity to the block containing i, taken from the nearest later
/// block that still has one.
std::vector<int> adjust_capacities(const Permutation& p, std::vector<int> c0);

enum class VertexKind { Dot, Circle };
enum class Slope { Asc, Desc };

/// Unlabelled (then labelled) slope diagram: vertex i is a circle when it
/// falls in a capacity interval ]d2_k, d2_k + c_k]; rel[i] relates vertices
/// i and i+1.
struct SlopeGraph {
    int n = 0;
    std::vector<VertexKind> kind; // size n+1, index 0 unused
    std::vector<Slope> rel;       // size n, rel[i] for i = 1..n-1
    std::vector<int> label;       // size n+1, 0 = unassigned

    std::vector<int> circles() const;
    std::vector<int> dots() const;
};

/// Letters p(u_1)..p(u_m) over the positions u_k that start no 2-inversion.
struct OmegaWord {
    std::vector<int> positions;
    std::vector<int> letters;
};
OmegaWord omega_word(const Permutation& p);

SlopeGraph build_graph(const Permutation& p, const std::vector<int>& c);

/// Writes the circle labels of the image of p into g. Trace, when non-null,
/// receives the pass-by-pass record of the labelling rules, or a fallback
/// marker when the class pairing had to step in for this word.
void label_circles(SlopeGraph& g, const Permutation& p,
                   nlohmann::ordered_json* trace = nullptr);

/// Writes the dot labels of the image of p into g.
void label_dots(SlopeGraph& g, const Permutation& p,
                nlohmann::ordered_json* trace = nullptr);

Permutation phi(const Permutation& p);

/// Same as phi but fills `trace` with the intermediate data (block data,
/// capacities, omega word, graph, labelling passes).
Permutation phi_traced(const Permutation& p, nlohmann::ordered_json& trace);

} // namespace permstat
