#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// Largest n accepted by the image table builder (the table stores two
/// encoded words per permutation, so memory grows as n!).
inline constexpr int kTableCap = 10;

/// Sparse polynomial in three commuting variables, exponents keyed as
/// (a, b, c) with signed 64-bit coefficients. 12! fits comfortably, and n
/// is capped well below the point where coefficients could overflow.
struct Polynomial3 {
    std::map<std::array<int, 3>, std::int64_t> terms;

    void add(int a, int b, int c, std::int64_t coeff = 1);
    std::int64_t total() const;

    /// Sets the middle variable to 1, folding its exponent away.
    Polynomial3 collapse_middle() const;

    bool operator==(const Polynomial3&) const = default;

    /// {"n": .., "vector": .., "terms": [[a, b, c, coeff], ..]} with the
    /// terms in exponent order.
    std::string to_json(int n, const std::string& vector_label) const;
    static Polynomial3 from_json(const std::string& text);

    /// Header "a,b,c,coeff" followed by one row per term.
    std::string to_csv() const;
};

/// Joint distribution of the chosen statistic vector over all of S_n,
/// optionally split across `jobs` worker threads by rank ranges. Results
/// are cached on disk when PERMSTAT_CACHE_DIR is set.
Polynomial3 joint_distribution(int n, Vector v, int jobs = 1);

struct IdentityReport {
    bool ok = true;
    std::string detail; // first discrepancy, empty when ok
};

/// Compares two joint distributions term by term; with collapse_middle the
/// comparison happens after setting the middle variable of both to 1.
IdentityReport verify_identity(int n, Vector lhs, Vector rhs, int jobs = 1,
                               bool collapse_middle = false);

/// Image-to-preimage table over all of S_n, with both sides encoded via
/// Permutation::encode. A collision throws invariant_error naming both
/// preimage words. Requires n <= kTableCap.
std::map<std::uint64_t, std::uint64_t> image_table(int n, int jobs = 1);

/// Coefficients of [n]_q! = prod_{i=1..n} (1 + q + ... + q^{i-1}),
/// ascending powers.
std::vector<std::int64_t> q_factorial(int n);

/// Distributions by statistic value over S_n.
std::vector<std::int64_t> maj_distribution(int n);
std::vector<std::int64_t> des_distribution(int n);
std::vector<std::int64_t> exc_distribution(int n);

/// Cache directory from PERMSTAT_CACHE_DIR, empty when unset.
std::string cache_dir();

} // namespace permstat
