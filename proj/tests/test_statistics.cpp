// Descent, exceedance, and 2-descent statistics, including the adjusted
// 2-descent count and the three tracked statistic vectors.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "permstat/errors.hpp"
#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

// Independent quadratic recount of the 2-inversion pairs.
int inv2_oracle(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) == p(j) + 1) ++count;
    return count;
}

} // namespace

TEST_CASE("classic descent statistics") {
    const Permutation p = P("425736981");
    CHECK(descent_set(p) == std::vector<int>{1, 4, 7, 8});
    CHECK(des(p) == 4);
    CHECK(maj(p) == 20);
    CHECK(inv(p) == 14);

    CHECK(des(Permutation::identity(6)) == 0);
    CHECK(maj(P("21")) == 1);
}

TEST_CASE("exceedances") {
    const Permutation p = P("425736981");
    CHECK(exceedance_set(p) == std::vector<int>{1, 3, 4, 7});
    CHECK(exceedance_values(p) == std::vector<int>{4, 5, 7, 9});
    CHECK(exc(p) == 4);

    const Permutation t = P("956382471");
    CHECK(exceedance_set(t) == std::vector<int>{1, 2, 3, 5});
    CHECK(exceedance_values(t) == std::vector<int>{9, 5, 6, 8});
    CHECK(exc(Permutation::identity(4)) == 0);
}

TEST_CASE("2-descents") {
    CHECK(two_descent_set(P("425736981")) == std::vector<int>{1, 4, 8});
    CHECK(maj2(P("425736981")) == 13);
    CHECK(two_descent_set(P("549321867")) == std::vector<int>{3, 7});
    CHECK(two_descent_set(P("34251")) == std::vector<int>{2, 4});
    // A drop by exactly one is a descent but not a 2-descent.
    CHECK(two_descent_set(P("21")).empty());
}

TEST_CASE("2-inversions") {
    const TwoInversionSet s = two_inversion_set(P("425736981"));
    CHECK(s == TwoInversionSet{{1, 5}, {2, 9}, {4, 6}, {7, 8}});
    CHECK(inv2(P("425736981")) == 4);
    // Starts need not have increasing partners.
    CHECK(two_inversion_set(P("549321867")) ==
          TwoInversionSet{{1, 2}, {2, 4}, {3, 7}, {4, 5}, {5, 6}, {7, 9}});
    CHECK(two_inversion_set(Permutation::identity(5)).empty());
}

TEST_CASE("2-inversion structure over S_n") {
    for (int n = 1; n <= 6; ++n) {
        enumerate(n, [&](const Permutation& p) {
            const TwoInversionSet s = two_inversion_set(p);
            CHECK(static_cast<int>(s.size()) == inv2_oracle(p));
            std::set<int> firsts, seconds;
            for (const auto& [i, j] : s) {
                CHECK(i < j);
                CHECK(p(i) == p(j) + 1);
                firsts.insert(i);
                seconds.insert(j);
            }
            // Partners are determined by value, so no position repeats on
            // either side, and the list is sorted by start.
            CHECK(firsts.size() == s.size());
            CHECK(seconds.size() == s.size());
            CHECK(std::is_sorted(s.begin(), s.end()));
        });
    }
}

TEST_CASE("adjusted 2-descent count on fixed words") {
    CHECK(des2_tilde(Permutation::identity(5)) == 0);
    CHECK(des2_tilde(P("21")) == 1);
    CHECK(des2_tilde(P("132")) == 1);
    CHECK(des2_tilde(P("213")) == 1);
    CHECK(des2_tilde(P("231")) == 2);
    CHECK(des2_tilde(P("312")) == 1);
    CHECK(des2_tilde(P("321")) == 1);
    CHECK(des2_tilde(P("34251")) == 3);
    CHECK(des2_tilde(P("425736981")) == 4);
    CHECK(des2_tilde(P("549321867")) == 3);

    CHECK(des2_prefix_ok(P("312")));
    CHECK_FALSE(des2_prefix_ok(P("34251")));
}

TEST_CASE("2-ascents are ascents by more than one") {
    const Permutation p = P("425736981");
    CHECK(two_ascent_set(p) == std::vector<int>{2, 3, 5, 6});
    CHECK(amaj2(p) == 16);
    CHECK(asc2_tilde(p) == 5);

    // Steps up by exactly one never count, so the identity has none.
    CHECK(two_ascent_set(Permutation::identity(5)).empty());
    CHECK(amaj2(Permutation::identity(5)) == 0);
    CHECK(asc2_tilde(Permutation::identity(3)) == 0);
    CHECK(two_ascent_set(P("1243")) == std::vector<int>{2});

    for (int n = 1; n <= 6; ++n) {
        enumerate(n, [&](const Permutation& q) {
            // Every pair is a 2-ascent, a descent, or a step up by one.
            int steps = 0;
            for (int i = 1; i < n; ++i)
                if (q(i + 1) == q(i) + 1) ++steps;
            CHECK(asc2(q) + des(q) + steps == n - 1);
            CHECK(asc2_tilde(q) == asc2(q) + (q(1) != 1 ? 1 : 0));

            // Complementing the values v -> n+1-v swaps the two notions.
            std::vector<int> flipped(q.word());
            for (int& v : flipped) v = n + 1 - v;
            CHECK(two_ascent_set(q) == two_descent_set(Permutation(flipped)));
        });
    }
}

TEST_CASE("statistic relations over S_n") {
    for (int n = 1; n <= 7; ++n) {
        enumerate(n, [&](const Permutation& p) {
            CHECK(inv2(p) == ides(p));
            const int d2t = des2_tilde(p);
            CHECK((d2t == des2(p) || d2t == des2(p) + 1));
            CHECK(maj2(p) <= maj(p));
            const auto d2 = two_descent_set(p);
            const auto d = descent_set(p);
            CHECK(std::includes(d.begin(), d.end(), d2.begin(), d2.end()));
        });
    }
}

TEST_CASE("statistic vectors") {
    const StatTriple lhs = stat_vector(P("34251"), Vector::LHS);
    CHECK(lhs.x == 6);
    CHECK(lhs.y == 3);
    CHECK(lhs.z == 2);

    const StatTriple rhs = stat_vector(P("32541"), Vector::RHS);
    CHECK(rhs.x == 6);
    CHECK(rhs.y == 3);
    CHECK(rhs.z == 2);

    const StatTriple a = stat_vector(P("425736981"), Vector::LHS);
    CHECK(a.x == 13);
    CHECK(a.y == 4);
    CHECK(a.z == 4);
    const StatTriple b = stat_vector(P("956382471"), Vector::RHS);
    CHECK(b.x == 13);
    CHECK(b.y == 4);
    CHECK(b.z == 4);

    const StatTriple h = stat_vector(P("425736981"), Vector::HL);
    CHECK(h.x == 16);
    CHECK(h.y == 5);
    CHECK(h.z == 4);
}

TEST_CASE("statistics by name cover every registered statistic") {
    const Permutation p = P("549321867");
    for (const auto& name : statistic_names()) {
        CHECK_NOTHROW(statistic_by_name(p, name));
    }
    CHECK(statistic_by_name(p, "des2t") == 3);
    CHECK(statistic_by_name(p, "maj2") == 10);
    CHECK(statistic_by_name(p, "inv2") == 6);
    CHECK_THROWS_AS(statistic_by_name(p, "majj"), validation_error);
}

TEST_CASE("vector names round-trip") {
    for (Vector v : {Vector::LHS, Vector::RHS, Vector::HL}) {
        CHECK(vector_by_name(vector_name(v)) == v);
    }
    CHECK_THROWS_AS(vector_by_name("middle"), validation_error);
}
