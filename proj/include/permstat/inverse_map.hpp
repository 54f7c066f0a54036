#pragma once

#include <json.hpp>

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Block data recovered from the image word: descent boundaries d[k] with
/// the leading 0 restored when the word fixes 1, per-block exceedance
/// counts c[k], the implied 2-descent boundaries d2[k] = d[k] - c[k], and
/// the window boundaries t[k] rebuilt from consecutive runs of the d2[k].
struct TauDecomposition {
    int r = 0;
    std::vector<int> d;
    std::vector<int> c;
    std::vector<int> d2;
    std::vector<int> t; // index 0 holds t_0 = 0
};

TauDecomposition decompose(const Permutation& tau);

enum class Arrow { Unknown, Asc, Desc };

/// Partially known preimage diagram: boxed abscissas, one pending arc per
/// exceedance value (source position 0 while undetermined, narrowed by its
/// window), and the pairwise slope arrows derived so far.
struct Skeleton {
    struct Arc {
        int end = 0;              // arc lands at end from end's value minus one
        int src = 0;              // 0 while undetermined
        std::vector<int> window;  // candidate source positions, ascending
    };

    int n = 0;
    std::vector<int> boxes;
    std::vector<Arc> arcs;          // sorted by end
    std::vector<Arrow> arrows;      // size n, arrows[i] for i = 1..n-1
};

/// Skeleton as drawn directly from the decomposition, before any deduction:
/// initial windows (with the boxed-predecessor exclusion applied) and only
/// the immediately forced arrows.
Skeleton build_skeleton(const Permutation& tau);

/// Closes the skeleton under the static deduction rules: arrow refinement,
/// source ordering between exchangeable exceedance values, window strikes,
/// forced arcs, and per-candidate consistency lookahead.
Skeleton propagate(const Permutation& tau, Skeleton sk);

Permutation phi_inverse(const Permutation& tau);

/// Same as phi_inverse but records the decomposition, the skeleton, and the
/// step-by-step labelling into `trace`.
Permutation phi_inverse_traced(const Permutation& tau, nlohmann::ordered_json& trace);

} // namespace permstat
