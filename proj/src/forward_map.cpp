// Forward direction of the bijection: capacities, slope graph, labelling.

#include "permstat/forward_map.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "permstat/errors.hpp"

#include "block_chains.hpp"

namespace permstat {

namespace {

using detail::block_bounds;

void validate_capacities(const std::vector<int>& bounds, const std::vector<int>& c,
                         const char* stage) {
    const int r = static_cast<int>(c.size()) - 1;
    for (int k = 0; k <= r; ++k) {
        const int cap = bounds[k + 1] - bounds[k];
        if (c[k] < 0 || c[k] > cap) {
            throw invariant_error(std::string(stage) +
                                  ": capacity outside its block at k=" + std::to_string(k));
        }
        const int next = (k < r) ? c[k + 1] : 0;
        if (c[k] == cap && next == 0) {
            throw invariant_error(std::string(stage) +
                                  ": saturated block not followed by a positive capacity at k=" +
                                  std::to_string(k));
        }
    }
}

} // namespace

std::vector<int> tops(const Permutation& p) {
    return detail::window_tops(p);
}

std::vector<int> compute_c0(const Permutation& p) {
    auto c0 = detail::greedy_block_capacities(p);
    validate_capacities(block_bounds(p), c0, "compute_c0");
    return c0;
}

OmegaWord omega_word(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> is_start(n + 1, false);
    for (auto [i, j] : two_inversion_set(p)) is_start[i] = true;
    OmegaWord w;
    for (int i = 1; i <= n; ++i) {
        if (!is_start[i]) {
            w.positions.push_back(i);
            w.letters.push_back(p(i));
        }
    }
    return w;
}

std::vector<int> adjust_capacities(const Permutation& p, std::vector<int> c0) {
    const int n = p.size();
    auto bounds = block_bounds(p);
    const int r = static_cast<int>(bounds.size()) - 2;
    if (static_cast<int>(c0.size()) != r + 1) {
        throw invariant_error("adjust_capacities: capacity sequence has wrong length");
    }
    auto omega = omega_word(p);

    // Raw-diagram geometry, tabulated once: circle membership, dot ordinal
    // prefix counts, and the block holding every position. Triggers are
    // detected on the raw diagram throughout; only the transfers accumulate
    // in c.
    std::vector<bool> circle0(n + 2, false);
    std::vector<int> block_of(n + 1, 0);
    for (int k = 0; k <= r; ++k) {
        for (int pos = bounds[k] + 1; pos <= bounds[k + 1]; ++pos) block_of[pos] = k;
        for (int pos = bounds[k] + 1; pos <= bounds[k] + c0[k]; ++pos) circle0[pos] = true;
    }
    std::vector<int> dots_upto(n + 1, 0);
    for (int i = 1; i <= n; ++i) dots_upto[i] = dots_upto[i - 1] + (circle0[i] ? 0 : 1);
    std::vector<bool> is_d2(n + 1, false);
    for (int k = 1; k <= r; ++k) is_d2[bounds[k]] = true;

    std::vector<int> c = c0;
    for (int i = 1; i + 1 <= n; ++i) {
        if (circle0[i] || circle0[i + 1]) continue;
        // Both are dots; i is the m-th dot of the raw diagram.
        const int m = dots_upto[i];
        if (omega.letters[m - 1] <= omega.letters[m]) continue;
        if (is_d2[i]) continue;

        const int k = block_of[i];
        if (k == r) {
            throw invariant_error("adjust_capacities: descending dot pair in the last block");
        }
        assert(bounds[k] + c0[k] < i);

        // The unit comes from the nearest later block that still has one.
        int donor = k + 1;
        while (donor <= r && c[donor] == 0) ++donor;
        if (donor > r) {
            throw invariant_error("adjust_capacities: no capacity left after block " +
                                  std::to_string(k));
        }
        c[k] += 1;
        c[donor] -= 1;
    }
    validate_capacities(bounds, c, "adjust_capacities");
    return c;
}

std::vector<int> SlopeGraph::circles() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (kind[i] == VertexKind::Circle) out.push_back(i);
    }
    return out;
}

std::vector<int> SlopeGraph::dots() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (kind[i] == VertexKind::Dot) out.push_back(i);
    }
    return out;
}

SlopeGraph build_graph(const Permutation& p, const std::vector<int>& c) {
    const int n = p.size();
    auto bounds = block_bounds(p);
    const int r = static_cast<int>(bounds.size()) - 2;
    if (static_cast<int>(c.size()) != r + 1) {
        throw invariant_error("build_graph: capacity sequence has wrong length");
    }

    SlopeGraph g;
    g.n = n;
    g.kind.assign(n + 1, VertexKind::Dot);
    g.rel.assign(std::max(n, 1), Slope::Asc);
    g.label.assign(n + 1, 0);

    // Which block's capacity interval a circle belongs to (-1 for dots).
    std::vector<int> circle_block(n + 1, -1);
    for (int k = 0; k <= r; ++k) {
        for (int pos = bounds[k] + 1; pos <= bounds[k] + c[k]; ++pos) {
            g.kind[pos] = VertexKind::Circle;
            circle_block[pos] = k;
        }
    }

    auto omega = omega_word(p);
    std::vector<int> dot_index(n + 1, 0);
    {
        int m = 0;
        for (int i = 1; i <= n; ++i) {
            if (g.kind[i] == VertexKind::Dot) dot_index[i] = ++m;
        }
    }

    for (int i = 1; i + 1 <= n; ++i) {
        const bool ci = g.kind[i] == VertexKind::Circle;
        const bool cj = g.kind[i + 1] == VertexKind::Circle;
        if (ci && cj) {
            g.rel[i] = (circle_block[i] == circle_block[i + 1]) ? Slope::Asc : Slope::Desc;
        } else if (ci && !cj) {
            g.rel[i] = Slope::Desc;
        } else if (!ci && cj) {
            g.rel[i] = Slope::Asc;
        } else {
            const int a = omega.letters[dot_index[i] - 1];
            const int b = omega.letters[dot_index[i + 1] - 1];
            g.rel[i] = (a < b) ? Slope::Asc : Slope::Desc;
        }
    }

    // The descents of the diagram must be exactly the right ends of the
    // capacity intervals that fall strictly inside [1, n-1].
    std::set<int> expected;
    for (int k = 0; k <= r; ++k) {
        const int d = bounds[k] + c[k];
        if (d >= 1 && d <= n - 1) expected.insert(d);
    }
    for (int i = 1; i + 1 <= n; ++i) {
        const bool desc = g.rel[i] == Slope::Desc;
        if (desc != (expected.count(i) > 0)) {
            throw invariant_error("build_graph: slope at " + std::to_string(i) +
                                  " disagrees with the capacity boundaries");
        }
    }
    return g;
}

namespace {

using LabelSets = std::map<int, std::vector<int>>; // position -> sorted candidate values

nlohmann::ordered_json sets_snapshot(const LabelSets& sets) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [pos, vals] : sets) out[std::to_string(pos)] = vals;
    return out;
}

void erase_value(std::vector<int>& v, int x) {
    v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

// True when the live candidate sets still admit a complete assignment of the
// leftover values (one value per vertex, drawn from its set). Plain
// augmenting-path matching; the instances here are tiny.
bool assignment_completes(const LabelSets& sets, const std::vector<int>& values) {
    if (sets.size() != values.size()) return false;
    std::vector<const std::vector<int>*> cand;
    cand.reserve(sets.size());
    for (const auto& [pos, vals] : sets) cand.push_back(&vals);

    std::vector<int> match(cand.size(), -1); // set index -> value index
    std::function<bool(int, std::vector<bool>&)> extend = [&](int vi, std::vector<bool>& seen) {
        for (size_t si = 0; si < cand.size(); ++si) {
            if (seen[si]) continue;
            if (!std::binary_search(cand[si]->begin(), cand[si]->end(), values[vi])) continue;
            seen[si] = true;
            if (match[si] < 0 || extend(match[si], seen)) {
                match[si] = vi;
                return true;
            }
        }
        return false;
    };
    for (size_t vi = 0; vi < values.size(); ++vi) {
        std::vector<bool> seen(cand.size(), false);
        if (!extend(static_cast<int>(vi), seen)) return false;
    }
    return true;
}

// One left-to-right sweep over the valleys of the same-kind vertices,
// shrinking candidate sets in place. A valley is a set-carrying vertex
// reached by a descent and followed by an ascent (or the right border).
void prune_sweep(const SlopeGraph& g, VertexKind kindsel, LabelSets& sets,
                 const ForwardOptions& opts, nlohmann::ordered_json* trace) {
    const int n = g.n;
    auto same_kind = [&](int pos) { return g.kind[pos] == kindsel; };

    for (int i = 1; i <= n; ++i) {
        if (!same_kind(i) || !sets.count(i)) continue;
        if (i < 2 || g.rel[i - 1] != Slope::Desc) continue;
        if (i < n && g.rel[i] != Slope::Asc) continue;

        // Same-kind dominators in the maximal descending run ending at i and
        // in the maximal ascending run starting at i.
        int lo = i;
        while (lo > 1 && g.rel[lo - 1] == Slope::Desc) --lo;
        int hi = i;
        while (hi < n && g.rel[hi] == Slope::Asc) ++hi;

        std::vector<int> dominators;
        if (opts.prune_arity == ForwardOptions::PruneArity::Nearest) {
            for (int x = i - 1; x >= lo; --x) {
                if (same_kind(x)) {
                    dominators.push_back(x);
                    break;
                }
            }
            for (int x = i + 1; x <= hi; ++x) {
                if (same_kind(x)) {
                    dominators.push_back(x);
                    break;
                }
            }
        } else {
            for (int x = lo; x <= hi; ++x) {
                if (x != i && same_kind(x)) dominators.push_back(x);
            }
        }
        if (dominators.empty()) continue;

        auto& mine = sets.at(i);
        int removals = static_cast<int>(dominators.size());
        if (opts.prune_mode != ForwardOptions::PruneMode::Literal) {
            removals = std::min<int>(removals, static_cast<int>(mine.size()) - 1);
        }
        if (removals >= static_cast<int>(mine.size())) {
            throw invariant_error("prune_sweep: valley at " + std::to_string(i) +
                                  " has only " + std::to_string(mine.size()) +
                                  " candidates for " + std::to_string(removals) + " removals");
        }
        mine.resize(mine.size() - removals);

        // The valley's smallest survivor leaves every dominating set, which
        // makes it the valley's own once the uniqueness scan runs.
        const int anchor = mine.front();
        for (int w : dominators) {
            auto it = sets.find(w);
            if (it == sets.end()) continue;
            auto& theirs = it->second;
            if (theirs.size() <= 1 &&
                std::binary_search(theirs.begin(), theirs.end(), anchor)) {
                if (opts.prune_mode == ForwardOptions::PruneMode::Literal) {
                    throw invariant_error("prune_sweep: dominator at " + std::to_string(w) +
                                          " emptied by the valley minimum");
                }
                continue;
            }
            erase_value(theirs, anchor);
        }

        if (trace) {
            trace->push_back({{"valley", i},
                              {"dominators", dominators},
                              {"sets", sets_snapshot(sets)}});
        }
    }
}

// Single pass over the values in increasing order: a value carried by
// exactly one live set claims that vertex. Assignments take effect
// immediately, so later values see the shrunken state.
void uniqueness_pass(const std::vector<int>& values, LabelSets& sets,
                     std::vector<int>& label, std::set<int>& used,
                     nlohmann::ordered_json* trace) {
    for (int v : values) {
        if (used.count(v)) continue;
        int carrier = 0;
        int count = 0;
        for (const auto& [pos, vals] : sets) {
            if (std::binary_search(vals.begin(), vals.end(), v)) {
                carrier = pos;
                if (++count > 1) break;
            }
        }
        if (count == 1) {
            label[carrier] = v;
            used.insert(v);
            sets.erase(carrier);
            if (trace) trace->push_back({{"unique", v}, {"position", carrier}});
        }
    }
}

} // namespace

void label_circles(SlopeGraph& g, const Permutation& p, const ForwardOptions& opts,
                   nlohmann::ordered_json* trace) {
    const int n = g.n;
    auto pairs = two_inversion_set(p);
    std::vector<int> jseq;
    jseq.reserve(pairs.size());
    for (auto [i, j] : pairs) jseq.push_back(j);
    std::vector<int> jsorted = jseq;
    std::sort(jsorted.begin(), jsorted.end());

    auto circles = g.circles();
    if (circles.size() != jseq.size()) {
        throw invariant_error("label_circles: " + std::to_string(circles.size()) +
                              " circles for " + std::to_string(jseq.size()) + " values");
    }
    if (circles.empty()) return;

    LabelSets sets;
    for (int pos : circles) {
        std::vector<int> vals;
        for (int v : jsorted) {
            if (v > pos) vals.push_back(v);
        }
        if (vals.empty()) {
            throw invariant_error("label_circles: circle at " + std::to_string(pos) +
                                  " admits no candidate values");
        }
        sets[pos] = std::move(vals);
    }
    if (trace) (*trace)["initial_sets"] = sets_snapshot(sets);

    if (opts.prune_circles) {
        nlohmann::ordered_json prune_events = nlohmann::ordered_json::array();
        prune_sweep(g, VertexKind::Circle, sets, opts, trace ? &prune_events : nullptr);
        if (trace) (*trace)["prune"] = std::move(prune_events);
    }

    std::set<int> used;
    nlohmann::ordered_json unique_events = nlohmann::ordered_json::array();
    uniqueness_pass(jsorted, sets, g.label, used, trace ? &unique_events : nullptr);
    if (trace) (*trace)["unique"] = std::move(unique_events);

    // Remaining circles, left to right; remaining values in the order the
    // 2-inversion targets appear.
    std::vector<int> rest;
    for (int pos : circles) {
        if (g.label[pos] == 0) rest.push_back(pos);
    }
    std::vector<int> order;
    for (int v : jseq) {
        if (!used.count(v)) order.push_back(v);
    }

    auto slope_ok = [&](int pos, int v) {
        if (pos > 1 && g.kind[pos - 1] == VertexKind::Circle && g.label[pos - 1] != 0) {
            const bool asc = g.rel[pos - 1] == Slope::Asc;
            if (asc != (g.label[pos - 1] < v)) return false;
        }
        if (pos < n && g.kind[pos + 1] == VertexKind::Circle && g.label[pos + 1] != 0) {
            const bool asc = g.rel[pos] == Slope::Asc;
            if (asc != (v < g.label[pos + 1])) return false;
        }
        return true;
    };

    switch (opts.final_pass) {
    case ForwardOptions::FinalPass::OrderedFeasible: {
        // Depth-first: fill the leftover circles left to right, trying the
        // leftover values in target order, under membership and slope
        // consistency; the first complete assignment wins.
        std::vector<bool> taken(order.size(), false);
        std::function<bool(size_t)> fill = [&](size_t idx) {
            if (idx == rest.size()) return true;
            const int pos = rest[idx];
            const auto& vals = sets.at(pos);
            for (size_t x = 0; x < order.size(); ++x) {
                if (taken[x]) continue;
                const int v = order[x];
                if (!std::binary_search(vals.begin(), vals.end(), v)) continue;
                if (!slope_ok(pos, v)) continue;
                g.label[pos] = v;
                taken[x] = true;
                if (fill(idx + 1)) return true;
                g.label[pos] = 0;
                taken[x] = false;
            }
            return false;
        };
        if (!fill(0)) {
            throw invariant_error("label_circles: no candidate assignment completes the circles");
        }
        break;
    }
    case ForwardOptions::FinalPass::NextUnused: {
        for (size_t k = 0; k < rest.size(); ++k) g.label[rest[k]] = order[k];
        break;
    }
    case ForwardOptions::FinalPass::LeftmostSet: {
        for (int v : order) {
            int chosen = 0;
            for (int pos : rest) {
                if (g.label[pos] == 0 &&
                    std::binary_search(sets.at(pos).begin(), sets.at(pos).end(), v)) {
                    chosen = pos;
                    break;
                }
            }
            if (!chosen) {
                throw invariant_error("label_circles: value " + std::to_string(v) +
                                      " fits no remaining circle");
            }
            g.label[chosen] = v;
        }
        break;
    }
    }
    if (trace) {
        nlohmann::ordered_json final = nlohmann::ordered_json::array();
        for (int pos : rest) final.push_back({{"position", pos}, {"value", g.label[pos]}});
        (*trace)["final"] = std::move(final);
    }
}

void label_dots(SlopeGraph& g, const Permutation& p, const ForwardOptions& opts,
                nlohmann::ordered_json* trace) {
    const int n = g.n;
    auto omega = omega_word(p);
    auto dots = g.dots();
    if (dots.size() != omega.positions.size()) {
        throw invariant_error("label_dots: dot count disagrees with the untouched positions");
    }
    if (dots.empty()) return;

    std::set<int> jset;
    for (auto [i, j] : two_inversion_set(p)) jset.insert(j);
    std::vector<int> evals;
    for (int v = 1; v <= n; ++v) {
        if (!jset.count(v)) evals.push_back(v);
    }

    LabelSets sets;
    std::map<int, int> dot_ord; // position -> index k into omega
    for (size_t k = 0; k < dots.size(); ++k) {
        const int pos = dots[k];
        dot_ord[pos] = static_cast<int>(k);
        const int top = std::min(pos, omega.positions[k]);
        std::vector<int> vals;
        for (int v : evals) {
            if (v <= top) vals.push_back(v);
        }
        if (vals.empty()) {
            throw invariant_error("label_dots: dot at " + std::to_string(pos) +
                                  " admits no candidate values");
        }
        sets[pos] = std::move(vals);
    }
    if (trace) (*trace)["initial_sets"] = sets_snapshot(sets);

    if (opts.prune_dots) {
        nlohmann::ordered_json prune_events = nlohmann::ordered_json::array();
        prune_sweep(g, VertexKind::Dot, sets, opts, trace ? &prune_events : nullptr);
        if (trace) (*trace)["prune"] = std::move(prune_events);
    }

    std::set<int> used;
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    uniqueness_pass(evals, sets, g.label, used, trace ? &events : nullptr);

    // Remaining values in increasing order: each goes to the carrier whose
    // untouched letter is smallest among those that leave the rest of the
    // sets completable, then uniqueness gets another look.
    for (int v : evals) {
        if (used.count(v)) continue;
        std::vector<std::pair<int, int>> carriers; // (letter, position)
        for (const auto& [pos, vals] : sets) {
            if (std::binary_search(vals.begin(), vals.end(), v)) {
                carriers.emplace_back(omega.letters[dot_ord[pos]], pos);
            }
        }
        std::sort(carriers.begin(), carriers.end());
        if (carriers.empty()) {
            throw invariant_error("label_dots: value " + std::to_string(v) +
                                  " has no carrier left");
        }

        std::vector<int> leftover;
        for (int w : evals) {
            if (!used.count(w) && w != v) leftover.push_back(w);
        }
        int chosen = 0;
        for (const auto& [letter, pos] : carriers) {
            LabelSets rest = sets;
            rest.erase(pos);
            for (auto& [q, vals] : rest) erase_value(vals, v);
            if (assignment_completes(rest, leftover)) {
                chosen = pos;
                break;
            }
        }
        if (!chosen) {
            throw invariant_error("label_dots: no carrier of value " + std::to_string(v) +
                                  " leaves a completable assignment");
        }
        g.label[chosen] = v;
        used.insert(v);
        sets.erase(chosen);
        for (auto& [pos, vals] : sets) erase_value(vals, v);
        if (trace) events.push_back({{"assign", v}, {"position", chosen}});
        uniqueness_pass(evals, sets, g.label, used, trace ? &events : nullptr);
    }
    if (trace) (*trace)["assign"] = std::move(events);

    for (int pos : dots) {
        if (g.label[pos] == 0) {
            throw invariant_error("label_dots: dot at " + std::to_string(pos) +
                                  " left unlabelled");
        }
    }
}

namespace {

Permutation assemble(const SlopeGraph& g) {
    const int n = g.n;
    std::vector<int> word(n);
    for (int i = 1; i <= n; ++i) {
        if (g.label[i] == 0) {
            throw invariant_error("phi: vertex " + std::to_string(i) + " left unlabelled");
        }
        word[i - 1] = g.label[i];
    }
    Permutation out(word); // validates that the labels form a permutation
    for (int i = 1; i <= n; ++i) {
        const bool above = out(i) > i;
        if (above != (g.kind[i] == VertexKind::Circle)) {
            throw invariant_error("phi: vertex " + std::to_string(i) +
                                  " violates the circle/value correspondence");
        }
    }
    for (int i = 1; i + 1 <= n; ++i) {
        const bool asc = out(i) < out(i + 1);
        if (asc != (g.rel[i] == Slope::Asc)) {
            throw invariant_error("phi: slope at " + std::to_string(i) +
                                  " disagrees with the assembled word");
        }
    }
    return out;
}

} // namespace

Permutation phi(const Permutation& p, const ForwardOptions& opts) {
    auto c0 = compute_c0(p);
    auto c = adjust_capacities(p, c0);
    auto g = build_graph(p, c);
    label_circles(g, p, opts, nullptr);
    label_dots(g, p, opts, nullptr);
    return assemble(g);
}

Permutation phi_traced(const Permutation& p, nlohmann::ordered_json& trace,
                       const ForwardOptions& opts) {
    trace = nlohmann::ordered_json::object();
    trace["input"] = p.str();
    trace["n"] = p.size();
    trace["two_descents"] = two_descent_set(p);
    {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (auto [i, j] : two_inversion_set(p)) pairs.push_back({i, j});
        trace["two_inversions"] = std::move(pairs);
    }
    auto t = tops(p);
    trace["tops"] = std::vector<int>(t.begin() + 1, t.end());

    auto c0 = compute_c0(p);
    trace["c0"] = c0;
    auto c = adjust_capacities(p, c0);
    trace["c"] = c;

    auto omega = omega_word(p);
    trace["omega"] = {{"positions", omega.positions}, {"letters", omega.letters}};

    auto g = build_graph(p, c);
    trace["circles"] = g.circles();
    {
        std::string rels;
        for (int i = 1; i + 1 <= g.n; ++i) rels += (g.rel[i] == Slope::Asc) ? '/' : '\\';
        trace["slopes"] = rels;
    }

    nlohmann::ordered_json circ = nlohmann::ordered_json::object();
    label_circles(g, p, opts, &circ);
    trace["circle_labelling"] = std::move(circ);

    nlohmann::ordered_json dot = nlohmann::ordered_json::object();
    label_dots(g, p, opts, &dot);
    trace["dot_labelling"] = std::move(dot);

    auto out = assemble(g);
    trace["output"] = out.str();
    return out;
}

} // namespace permstat
