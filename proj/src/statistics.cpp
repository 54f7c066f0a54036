#include "permstat/statistics.hpp"

#include <numeric>

#include "block_chains.hpp"

namespace permstat {

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> s;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) s.push_back(i);
    return s;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

int maj(const Permutation& p) {
    const auto s = descent_set(p);
    return std::accumulate(s.begin(), s.end(), 0);
}

std::vector<int> exceedance_set(const Permutation& p) {
    std::vector<int> s;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) s.push_back(i);
    return s;
}

std::vector<int> exceedance_values(const Permutation& p) {
    std::vector<int> vals;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) vals.push_back(p(i));
    return vals;
}

int exc(const Permutation& p) { return static_cast<int>(exceedance_set(p).size()); }

int inv(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

int ides(const Permutation& p) { return des(p.inverse()); }

std::vector<int> two_descent_set(const Permutation& p) {
    std::vector<int> s;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1) + 1) s.push_back(i);
    return s;
}

int des2(const Permutation& p) {
    return static_cast<int>(two_descent_set(p).size());
}

int maj2(const Permutation& p) {
    const auto s = two_descent_set(p);
    return std::accumulate(s.begin(), s.end(), 0);
}

TwoInversionSet two_inversion_set(const Permutation& p) {
    // p(i) = p(j) + 1 with i < j: index positions by value.
    const int n = p.size();
    std::vector<int> pos(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(p(i))] = i;
    TwoInversionSet s;
    for (int i = 1; i <= n; ++i) {
        const int v = p(i);
        if (v >= 2 && pos[static_cast<size_t>(v - 1)] > i)
            s.emplace_back(i, pos[static_cast<size_t>(v - 1)]);
    }
    return s; // built in increasing i already
}

int inv2(const Permutation& p) {
    return static_cast<int>(two_inversion_set(p).size());
}

bool des2_prefix_ok(const Permutation& p) {
    return detail::greedy_block_capacities(p)[0] == 0;
}

int des2_tilde(const Permutation& p) {
    return des2(p) + (des2_prefix_ok(p) ? 0 : 1);
}

std::vector<int> two_ascent_set(const Permutation& p) {
    std::vector<int> s;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) < p(i + 1) - 1) s.push_back(i);
    return s;
}

int asc2(const Permutation& p) {
    return static_cast<int>(two_ascent_set(p).size());
}

int amaj2(const Permutation& p) {
    const auto s = two_ascent_set(p);
    return std::accumulate(s.begin(), s.end(), 0);
}

int asc2_tilde(const Permutation& p) {
    return asc2(p) + (p.size() > 0 && p(1) != 1 ? 1 : 0);
}

StatTriple stat_vector(const Permutation& p, Vector v) {
    switch (v) {
        case Vector::LHS: return {maj2(p), des2_tilde(p), inv2(p), v};
        case Vector::RHS: return {maj(p) - exc(p), des(p), exc(p), v};
        case Vector::HL:  return {amaj2(p), asc2_tilde(p), ides(p), v};
    }
    throw invariant_error("unreachable vector tag");
}

const std::vector<std::string>& statistic_names() {
    static const std::vector<std::string> names = {
        "des",  "exc",  "maj",   "inv",   "ides",  "des2",
        "inv2", "maj2", "asc2",  "amaj2", "asc2t", "des2t",
    };
    return names;
}

int statistic_by_name(const Permutation& p, const std::string& name) {
    if (name == "des") return des(p);
    if (name == "exc") return exc(p);
    if (name == "maj") return maj(p);
    if (name == "inv") return inv(p);
    if (name == "ides") return ides(p);
    if (name == "des2") return des2(p);
    if (name == "inv2") return inv2(p);
    if (name == "maj2") return maj2(p);
    if (name == "asc2") return asc2(p);
    if (name == "amaj2") return amaj2(p);
    if (name == "asc2t") return asc2_tilde(p);
    if (name == "des2t") return des2_tilde(p);
    throw validation_error("unknown statistic '" + name + "'");
}

const char* vector_name(Vector v) {
    switch (v) {
        case Vector::LHS: return "lhs";
        case Vector::RHS: return "rhs";
        case Vector::HL:  return "hl";
    }
    throw invariant_error("unreachable vector tag");
}

Vector vector_by_name(const std::string& name) {
    if (name == "lhs") return Vector::LHS;
    if (name == "rhs") return Vector::RHS;
    if (name == "hl") return Vector::HL;
    throw validation_error("unknown vector '" + name + "'");
}

} // namespace permstat
