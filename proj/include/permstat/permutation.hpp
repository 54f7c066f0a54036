#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permstat/errors.hpp"

namespace permstat {

/// One-line words over {1..n} in one-line notation, 1-based access.
///
/// Text forms:
///  - canonical: comma-separated values, no whitespace ("4,2,5,7,3,6,9,8,1")
///  - compact digits, input accepted and output produced only for n <= 9
///    ("425736981"); rejected on input for larger n because digits would be
///    ambiguous.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    /// Parses either text form; throws validation_error naming the offending
    /// value on malformed input.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }

    /// Value at position i, 1-based.
    int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }

    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    /// (a * b)(i) = a(b(i)).
    friend Permutation compose(const Permutation& a, const Permutation& b);

    /// Canonical comma-separated form.
    std::string str() const;
    /// Digit form; requires n <= 9.
    std::string compact() const;
    /// Digit form when n <= 9, canonical form otherwise.
    std::string display() const;

    /// Packs the word into 4-bit nibbles; requires n <= 15. Useful as a map
    /// key for exhaustive tables.
    std::uint64_t encode() const;
    static Permutation decode(std::uint64_t packed, int n);

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

/// n!, which must fit in 64 bits (n <= 20).
std::uint64_t factorial(int n);

/// Largest n accepted by the exhaustive enumeration helpers.
inline constexpr int kEnumerationCap = 12;

/// Calls fn for every permutation of [n] in lexicographic order.
/// Throws capacity_error when n exceeds kEnumerationCap.
void enumerate(int n, const std::function<void(const Permutation&)>& fn);

/// Calls fn for ranks [begin, end) of the lexicographic order; suitable for
/// splitting an exhaustive sweep into contiguous chunks.
void enumerate_range(int n, std::uint64_t begin, std::uint64_t end,
                     const std::function<void(const Permutation&)>& fn);

/// Permutation with the given lexicographic rank (0-based).
Permutation unrank(int n, std::uint64_t rank);

} // namespace permstat
