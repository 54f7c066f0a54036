// Forward map: capacities, slope graph, labelling passes, full map.

#include <doctest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "permstat/errors.hpp"
#include "permstat/forward_map.hpp"
#include "permstat/inverse_map.hpp"
#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

namespace {

Permutation P(const std::string& text) { return Permutation::parse(text); }

// Block boundaries with the 0 and n sentinels, as the capacity rules see them.
std::vector<int> bounds_of(const Permutation& p) {
    std::vector<int> b{0};
    for (int d : two_descent_set(p)) b.push_back(d);
    b.push_back(p.size());
    return b;
}

// The capacity invariants: entries stay within their block, saturated blocks
// pass their overflow on, and the total matches the 2-inversion count.
void check_capacity_invariants(const Permutation& p, const std::vector<int>& c) {
    const auto b = bounds_of(p);
    const int r = static_cast<int>(c.size()) - 1;
    REQUIRE(static_cast<int>(b.size()) == r + 2);
    CHECK(std::accumulate(c.begin(), c.end(), 0) == inv2(p));
    for (int k = 0; k <= r; ++k) {
        const int gap = b[k + 1] - b[k];
        CHECK(c[k] >= 0);
        CHECK(c[k] <= gap);
        if (c[k] == gap) {
            const int next = (k < r) ? c[k + 1] : 0;
            CHECK(next > 0);
        }
    }
}

} // namespace

TEST_CASE("window tops follow the runs of consecutive 2-descents") {
    CHECK(tops(P("425736981")) == std::vector<int>{0, 1, 4, 8});
    // 2-descents at 3 and 4 share a run, so both windows open at 3.
    CHECK(two_descent_set(P("236415")) == std::vector<int>{3, 4});
    CHECK(tops(P("236415")) == std::vector<int>{0, 3, 3});
    CHECK(two_descent_set(P("17423586")) == std::vector<int>{2, 3, 7});
    CHECK(tops(P("17423586")) == std::vector<int>{0, 2, 2, 7});
    CHECK(tops(Permutation::identity(4)) == std::vector<int>{0});
}

TEST_CASE("raw capacities on fixed words") {
    CHECK(compute_c0(P("425736981")) == std::vector<int>{1, 1, 2, 0});
    CHECK(compute_c0(P("549321867")) == std::vector<int>{3, 2, 1});
    CHECK(compute_c0(Permutation::identity(5)) == std::vector<int>{0});
    CHECK(compute_c0(P("21")) == std::vector<int>{1});
    CHECK(compute_c0(P("3142")) == std::vector<int>{0, 1, 0});
}

TEST_CASE("capacity adjustment shifts across descending plain pairs") {
    const Permutation p = P("425736981");
    CHECK(adjust_capacities(p, compute_c0(p)) == std::vector<int>{1, 2, 1, 0});

    // No descending plain pair outside a 2-descent: nothing moves.
    const Permutation q = P("549321867");
    CHECK(adjust_capacities(q, compute_c0(q)) == std::vector<int>{3, 2, 1});
    const Permutation id = Permutation::identity(6);
    CHECK(adjust_capacities(id, compute_c0(id)) == std::vector<int>{0});
}

TEST_CASE("untouched positions and their letters") {
    const OmegaWord w = omega_word(P("425736981"));
    CHECK(w.positions == std::vector<int>{3, 5, 6, 8, 9});
    CHECK(w.letters == std::vector<int>{5, 3, 6, 8, 1});

    const OmegaWord v = omega_word(Permutation::identity(3));
    CHECK(v.positions == std::vector<int>{1, 2, 3});
    CHECK(v.letters == std::vector<int>{1, 2, 3});
}

TEST_CASE("slope graph of the nine-letter example") {
    const Permutation p = P("425736981");
    const auto g = build_graph(p, adjust_capacities(p, compute_c0(p)));
    CHECK(g.circles() == std::vector<int>{1, 2, 3, 5});
    CHECK(g.dots() == std::vector<int>{4, 6, 7, 8, 9});
    std::string slopes;
    for (int i = 1; i < g.n; ++i) slopes += (g.rel[i] == Slope::Asc) ? '/' : '\\';
    CHECK(slopes == "\\/\\/\\//\\");
}

TEST_CASE("circle labelling of the nine-letter example") {
    const Permutation p = P("425736981");
    auto g = build_graph(p, adjust_capacities(p, compute_c0(p)));
    label_circles(g, p);
    CHECK(g.label[1] == 9);
    CHECK(g.label[2] == 5);
    CHECK(g.label[3] == 6);
    CHECK(g.label[5] == 8);

    label_dots(g, p);
    CHECK(g.label[4] == 3);
    CHECK(g.label[6] == 2);
    CHECK(g.label[7] == 4);
    CHECK(g.label[8] == 7);
    CHECK(g.label[9] == 1);
}

TEST_CASE("forward map on fixed words") {
    CHECK(phi(P("425736981")) == P("956382471"));
    // Same 2-descents and block data, different untouched letters.
    CHECK(phi(P("426935781")) == P("956283471"));
    CHECK(phi(P("3142")) == P("1432"));
    CHECK(phi(Permutation::identity(7)) == Permutation::identity(7));

    const std::map<std::string, std::string> three = {
        {"123", "123"}, {"132", "312"}, {"213", "213"},
        {"231", "321"}, {"312", "132"}, {"321", "231"},
    };
    for (const auto& [from, to] : three) {
        CHECK(phi(P(from)) == P(to));
    }
}

TEST_CASE("trace carries the intermediate data") {
    nlohmann::ordered_json t;
    const Permutation out = phi_traced(P("425736981"), t);
    CHECK(out == P("956382471"));
    CHECK(t["input"] == "4,2,5,7,3,6,9,8,1");
    CHECK(t["two_descents"] == nlohmann::ordered_json({1, 4, 8}));
    CHECK(t["tops"] == nlohmann::ordered_json({1, 4, 8}));
    CHECK(t["c0"] == nlohmann::ordered_json({1, 1, 2, 0}));
    CHECK(t["c"] == nlohmann::ordered_json({1, 2, 1, 0}));
    CHECK(t["omega"]["letters"] == nlohmann::ordered_json({5, 3, 6, 8, 1}));
    CHECK(t["circles"] == nlohmann::ordered_json({1, 2, 3, 5}));
    CHECK(t["slopes"] == "\\/\\/\\//\\");
    CHECK(t["output"] == "9,5,6,3,8,2,4,7,1");
    CHECK(t["circle_labelling"].contains("initial_sets"));
    CHECK(t["dot_labelling"].contains("initial_sets"));
}

TEST_CASE("capacity invariants hold across S_n") {
    for (int n = 1; n <= 7; ++n) {
        enumerate(n, [&](const Permutation& p) {
            const auto c0 = compute_c0(p);
            check_capacity_invariants(p, c0);
            const auto c = adjust_capacities(p, c0);
            check_capacity_invariants(p, c);
        });
    }
}

TEST_CASE("image structure matches the block data") {
    for (int n = 1; n <= 7; ++n) {
        enumerate(n, [&](const Permutation& p) {
            const auto c = adjust_capacities(p, compute_c0(p));
            const auto g = build_graph(p, c);
            const Permutation image = phi(p);

            // Exceedance positions of the image are exactly the circles.
            CHECK(exceedance_set(image) == g.circles());

            // Image descents sit at the right ends of the capacity intervals.
            const auto b = bounds_of(p);
            std::vector<int> expected;
            for (size_t k = 0; k + 1 < b.size(); ++k) {
                const int d = b[k] + c[k];
                if (d >= 1 && d < n) expected.push_back(d);
            }
            CHECK(descent_set(image) == expected);

            // The image fixes 1 exactly when the first block keeps
            // capacity zero.
            CHECK((image(1) == 1) == (c[0] == 0));
        });
    }
}

TEST_CASE("statistics carry over across S_n") {
    for (int n = 1; n <= 7; ++n) {
        enumerate(n, [&](const Permutation& p) {
            const StatTriple a = stat_vector(p, Vector::LHS);
            const StatTriple b = stat_vector(phi(p), Vector::RHS);
            CHECK(a.x == b.x);
            CHECK(a.y == b.y);
            CHECK(a.z == b.z);
        });
    }
}

TEST_CASE("forward map is injective on S_n") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::uint64_t> images;
        enumerate(n, [&](const Permutation& p) { images.insert(phi(p).encode()); });
        CHECK(images.size() == factorial(n));
    }
}

TEST_CASE("literal valley arithmetic over-prunes the dots") {
    ForwardOptions opts;
    opts.prune_dots = true;
    opts.prune_mode = ForwardOptions::PruneMode::Literal;
    CHECK_THROWS_AS(phi(P("132"), opts), invariant_error);
}

TEST_CASE("words sharing a diagram are split by the untouched letters") {
    // 2341 and 1342 build the same diagram and the same candidate sets; only
    // the untouched letters differ, and they steer the dot assignment.
    CHECK(phi(P("2341")) == P("4231"));
    CHECK(phi(P("1342")) == P("4132"));

    // 53214 and 52143 also share a diagram; there the order in which the
    // 2-inversion targets appear steers the circles instead.
    CHECK(phi(P("53214")) == P("53412"));
    CHECK(phi(P("52143")) == P("43512"));
}

// One-off arbitration sweep over the optional readings; run with
//   permstat_tests --no-skip -tc="option grid*"
TEST_CASE("option grid compares the optional readings exhaustively" * doctest::skip()) {
    struct Combo {
        std::string name;
        ForwardOptions opts;
    };
    std::vector<Combo> combos;
    for (bool pc : {true, false}) {
        for (bool pd : {false, true}) {
            for (auto fp : {ForwardOptions::FinalPass::OrderedFeasible,
                            ForwardOptions::FinalPass::NextUnused,
                            ForwardOptions::FinalPass::LeftmostSet}) {
                ForwardOptions o;
                o.prune_circles = pc;
                o.prune_dots = pd;
                o.final_pass = fp;
                const std::string fpn = fp == ForwardOptions::FinalPass::OrderedFeasible
                                            ? "ordered-feasible"
                                            : (fp == ForwardOptions::FinalPass::NextUnused
                                                   ? "next-unused"
                                                   : "leftmost-set");
                combos.push_back({std::string(pc ? "pc" : "--") + (pd ? "+pd" : "+--") + "+" + fpn, o});
            }
        }
    }
    for (const auto& combo : combos) {
        std::uint64_t errors = 0;
        std::uint64_t collisions = 0;
        std::uint64_t bad_roundtrips = 0;
        for (int n = 1; n <= 7; ++n) {
            std::map<std::uint64_t, std::uint64_t> images;
            enumerate(n, [&](const Permutation& p) {
                Permutation tau = Permutation::identity(n);
                try {
                    tau = phi(p, combo.opts);
                } catch (const std::exception&) {
                    ++errors;
                    return;
                }
                if (!images.emplace(tau.encode(), p.encode()).second) ++collisions;
                try {
                    if (phi_inverse(tau) != p) ++bad_roundtrips;
                } catch (const std::exception&) {
                    ++bad_roundtrips;
                }
            });
        }
        MESSAGE(combo.name << ": errors=" << errors << " collisions=" << collisions
                           << " bad_roundtrips=" << bad_roundtrips);
        if (!combo.opts.prune_circles && !combo.opts.prune_dots &&
            combo.opts.final_pass == ForwardOptions::FinalPass::OrderedFeasible) {
            CHECK(errors == 0);
            CHECK(collisions == 0);
            CHECK(bad_roundtrips == 0);
        }
    }
}
