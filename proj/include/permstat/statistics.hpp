#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Positions i < n with p(i) > p(i+1).
std::vector<int> descent_set(const Permutation& p);
int des(const Permutation& p);
/// Sum of descent positions.
int maj(const Permutation& p);

/// Positions i with p(i) > i.
std::vector<int> exceedance_set(const Permutation& p);
/// Values p(i) over the exceedance positions, in position order.
std::vector<int> exceedance_values(const Permutation& p);
int exc(const Permutation& p);

/// Number of pairs i < j with p(i) > p(j).
int inv(const Permutation& p);
/// des of the inverse permutation.
int ides(const Permutation& p);

/// Positions i < n with p(i) > p(i+1) + 1.
std::vector<int> two_descent_set(const Permutation& p);
int des2(const Permutation& p);
/// Sum of 2-descent positions.
int maj2(const Permutation& p);

/// Pairs (i, j), i < j, with p(i) = p(j) + 1, sorted by first component.
/// Each position occurs at most once as a first and at most once as a
/// second component, so the set has a well-defined list of start positions.
using TwoInversionSet = std::vector<std::pair<int, int>>;
TwoInversionSet two_inversion_set(const Permutation& p);
int inv2(const Permutation& p);

/// des2 plus one when the chained prefix condition fails (see des2_prefix_ok).
int des2_tilde(const Permutation& p);

/// The condition distinguishing des2_tilde from des2: process the 2-descent
/// blocks from last to first, each greedily absorbing the longest chain
/// bundle of pending 2-inversion starts that fits its window (positions and
/// values increasing, first start at or after the window top). The condition
/// holds when that sweep leaves nothing for the leading block, i.e. every
/// 2-inversion is paid for by a proper 2-descent.
bool des2_prefix_ok(const Permutation& p);

/// Positions i < n with p(i) < p(i+1) - 1, the mirror notion of a
/// 2-descent. Plain ascents by exactly one do not count; otherwise the
/// joint distribution with asc2_tilde and ides would not match the
/// (maj - exc, des, exc) side, already at n = 2.
std::vector<int> two_ascent_set(const Permutation& p);
int asc2(const Permutation& p);
int amaj2(const Permutation& p);
/// asc2 plus one when p(1) != 1.
int asc2_tilde(const Permutation& p);

enum class Vector { LHS, RHS, HL };

/// Statistic triple attached to one of the three tracked vectors:
///   LHS = (maj2, des2_tilde, inv2)
///   RHS = (maj - exc, des, exc)
///   HL  = (amaj2, asc2_tilde, ides)
struct StatTriple {
    int x = 0;
    int y = 0;
    int z = 0;
    Vector vector = Vector::LHS;

    bool operator==(const StatTriple&) const = default;
};

StatTriple stat_vector(const Permutation& p, Vector v);

/// Names accepted by the CLI: des, exc, maj, inv, ides, des2, inv2, maj2,
/// asc2, amaj2, asc2t, des2t. Throws validation_error on unknown tokens.
int statistic_by_name(const Permutation& p, const std::string& name);
const std::vector<std::string>& statistic_names();

const char* vector_name(Vector v);
Vector vector_by_name(const std::string& name);

} // namespace permstat
