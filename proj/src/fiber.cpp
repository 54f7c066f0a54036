// Class enumeration and pairing for the diagram classes: all source words
// drawing a given slope diagram, all image words drawn on it, and the
// matching between them. Bijectivity reduces to the two lists having equal
// length, which fiber_for checks on every enumeration; the pairing prefers
// the constructive labelling rules and repairs their gaps in lexicographic
// order.

#include "fiber.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "permstat/errors.hpp"
#include "permstat/forward_map.hpp"
#include "permstat/inverse_map.hpp"
#include "permstat/statistics.hpp"

#include "block_chains.hpp"

namespace permstat::detail {

FiberKey source_key(const Permutation& p) {
    FiberKey key;
    key.n = p.size();
    key.d2.push_back(0);
    for (int d : two_descent_set(p)) key.d2.push_back(d);
    for (auto [i, j] : two_inversion_set(p)) key.targets.push_back(j);
    std::sort(key.targets.begin(), key.targets.end());
    // Adjustment only ever raises the first block's share, so a charged raw
    // first block settles the flag without running the adjustment.
    const auto c0 = greedy_block_capacities(p);
    key.c0_positive = c0[0] > 0 || adjust_capacities(p, c0)[0] > 0;
    return key;
}

FiberKey image_key(const Permutation& tau) {
    const auto dec = decompose(tau);
    FiberKey key;
    key.n = tau.size();
    key.d2 = dec.d2;
    for (int i = 1; i <= key.n; ++i) {
        if (tau(i) > i) key.targets.push_back(tau(i));
    }
    std::sort(key.targets.begin(), key.targets.end());
    key.c0_positive = dec.c[0] > 0;
    return key;
}

namespace {

std::string key_text(const FiberKey& key) {
    auto join = [](const std::vector<int>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    return "n=" + std::to_string(key.n) + " d2=" + join(key.d2) +
           " targets=" + join(key.targets) + (key.c0_positive ? " c0>0" : " c0=0");
}

// Slope layout for one capacity vector over the class diagram.
struct Layout {
    int n = 0;
    std::vector<bool> circle;      // image side: capacity intervals
    std::vector<bool> image_desc;  // image side: descents at d2[k] + c[k]
    std::vector<bool> is_target;   // value is a 2-inversion target
};

Layout layout_of(const FiberKey& key, const std::vector<int>& c) {
    Layout lay;
    lay.n = key.n;
    lay.circle.assign(key.n + 1, false);
    lay.image_desc.assign(key.n + 1, false);
    lay.is_target.assign(key.n + 1, false);
    const int r = static_cast<int>(key.d2.size()) - 1;
    assert(static_cast<int>(c.size()) == r + 1);
    for (int k = 0; k <= r; ++k) {
        for (int pos = key.d2[k] + 1; pos <= key.d2[k] + c[k]; ++pos) {
            assert(pos >= 1 && pos <= key.n);
            lay.circle[pos] = true;
        }
        const int d = key.d2[k] + c[k];
        if (d >= 1 && d <= key.n - 1) lay.image_desc[d] = true;
    }
    for (int j : key.targets) lay.is_target[j] = true;
    return lay;
}

// All capacity vectors the class admits: non-negative block counts summing
// to the target count, the first block charged exactly when the key's flag
// says so, each block reaching at most to the next boundary (touching it
// only when the next block is charged, otherwise two descents would
// coincide), and the last descent staying inside the word.
std::vector<std::vector<int>> capacity_vectors(const FiberKey& key) {
    const int r = static_cast<int>(key.d2.size()) - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> c(r + 1, 0);

    auto fill = [&](auto&& self, int k, int left) -> void {
        if (k == r) {
            c[r] = left;
            if (left > key.n - 1 - key.d2[r]) return;
            if (r == 0 && (left > 0) != key.c0_positive) return;
            for (int j = 0; j < r; ++j) {
                if (c[j] == key.d2[j + 1] - key.d2[j] && c[j + 1] == 0) return;
            }
            out.push_back(c);
            return;
        }
        const int cap = std::min(left, key.d2[k + 1] - key.d2[k]);
        const int low = (k == 0 && key.c0_positive) ? 1 : 0;
        const int high = (k == 0 && !key.c0_positive) ? 0 : cap;
        for (int v = low; v <= high; ++v) {
            c[k] = v;
            self(self, k + 1, left - v);
        }
        c[k] = 0;
    };
    fill(fill, 0, static_cast<int>(key.targets.size()));
    return out;
}

// Every word whose circle positions and circle values are the ones some
// admissible capacity vector prescribes: circles carry the target values
// above their position, dots carry the remaining values at or below theirs.
// Distinct capacity vectors give distinct circle position sets, so the
// per-vector enumerations are disjoint and the union is sorted once.
std::vector<std::vector<int>> enumerate_images(const FiberKey& key) {
    const int n = key.n;
    std::vector<std::vector<int>> out;

    for (const auto& c : capacity_vectors(key)) {
        const Layout lay = layout_of(key, c);
        std::vector<int> word(n + 1, 0);
        std::vector<bool> used(n + 1, false);

        auto extend = [&](auto&& self, int pos) -> void {
            if (pos > n) {
                out.emplace_back(word.begin() + 1, word.end());
                return;
            }
            for (int v = 1; v <= n; ++v) {
                if (used[v]) continue;
                if (lay.circle[pos]) {
                    if (!lay.is_target[v] || v <= pos) continue;
                } else {
                    if (lay.is_target[v] || v > pos) continue;
                }
                if (pos > 1 && ((word[pos - 1] > v) != lay.image_desc[pos - 1])) continue;
                word[pos] = v;
                used[v] = true;
                self(self, pos + 1);
                word[pos] = 0;
                used[v] = false;
            }
        };
        extend(extend, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Search state for the source-side enumeration: one arc per target, the
// relation each adjacency must satisfy under the current arc choice, and a
// partially filled word receiving the values in increasing order.
struct SourceSearch {
    enum class Rel { Asc, Gap, Arc }; // ascent, 2-descent, consecutive descent

    const FiberKey& key;
    int n;
    std::vector<bool> box;     // source side: 2-descents at d2[k], k >= 1
    std::vector<int> ends;
    std::vector<int> end_src;  // arc end -> chosen source, 0 while unset
    std::vector<bool> is_src;
    std::vector<Rel> rel;      // rel[i] constrains word[i] vs word[i+1]
    std::vector<int> word;     // 0 while unset
    std::vector<int> pos_of;   // value -> position
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out; // (word, capacities)

    explicit SourceSearch(const FiberKey& k)
        : key(k), n(k.n), box(k.n + 1, false), ends(k.targets),
          end_src(n + 1, 0), is_src(n + 1, false), rel(std::max(n, 1), Rel::Asc),
          word(n + 1, 0), pos_of(n + 1, 0) {
        for (size_t i = 1; i < k.d2.size(); ++i) box[k.d2[i]] = true;
    }

    bool can_place(int v, int p) const {
        if (word[p] != 0) return false;
        if (p > 1) {
            const Rel r = rel[p - 1];
            if (word[p - 1] != 0) {
                // Earlier values are smaller, so only an ascent survives.
                if (r != Rel::Asc) return false;
            } else {
                // The left neighbour receives a later, larger value, which
                // rules an ascent out; a 2-descent keeps its slack and an
                // adjacent arc is satisfied by the cascade putting v + 1
                // there next.
                if (r == Rel::Asc) return false;
            }
        }
        if (p < n) {
            const Rel r = rel[p];
            if (word[p + 1] != 0) {
                if (r == Rel::Asc) return false;
                if (r == Rel::Gap && v <= word[p + 1] + 1) return false;
                if (r == Rel::Arc && v != word[p + 1] + 1) return false;
            } else {
                // The right neighbour will be larger; only an ascent fits.
                if (r != Rel::Asc) return false;
            }
        }
        // A consecutive-value pair read left to right is a 2-inversion, so
        // it must be one of the chosen arcs.
        if (v >= 2) {
            const int q = pos_of[v - 1];
            assert(q != 0);
            if (q > p && end_src[q] != p) return false;
        }
        return true;
    }

    // Places v at p and follows the forced chain: filling an arc end fixes
    // the arc source at the next value. On failure the partial chain is
    // rolled back and the trail cleared.
    bool place_chain(int v, int p, std::vector<int>& trail) {
        if (v > n || !can_place(v, p)) {
            unwind(trail);
            return false;
        }
        word[p] = v;
        pos_of[v] = p;
        trail.push_back(p);
        if (end_src[p] != 0) return place_chain(v + 1, end_src[p], trail);
        return true;
    }

    void unwind(std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            pos_of[word[*it]] = 0;
            word[*it] = 0;
        }
        trail.clear();
    }

    void extend(int v) {
        if (v > n) {
            harvest();
            return;
        }
        for (int p = 1; p <= n; ++p) {
            if (word[p] != 0 || is_src[p]) continue;
            std::vector<int> trail;
            if (place_chain(v, p, trail)) {
                extend(v + static_cast<int>(trail.size()));
                unwind(trail);
            }
        }
    }

    // A complete word matches the diagram's boundaries and targets by
    // construction; membership in the class still requires the adjusted
    // capacities to charge the first block exactly as the key's flag says.
    // The capacities ride along for the labelling rules later.
    void harvest() {
        const Permutation cand(std::vector<int>(word.begin() + 1, word.end()));
        assert(source_structure_holds(cand));
        std::vector<int> c;
        try {
            c = greedy_block_capacities(cand);
            // Adjustment only ever raises the first block's share, so a
            // charged raw first block already settles a flag mismatch.
            if (c[0] > 0 && !key.c0_positive) return;
            c = adjust_capacities(cand, std::move(c));
        } catch (const invariant_error&) {
            return;
        }
        if ((c[0] > 0) == key.c0_positive) {
            out.emplace_back(std::vector<int>(word.begin() + 1, word.end()), std::move(c));
        }
    }

    bool source_structure_holds(const Permutation& cand) const {
        const std::vector<int> boxes(key.d2.begin() + 1, key.d2.end());
        if (two_descent_set(cand) != boxes) return false;
        for (auto [i, j] : two_inversion_set(cand)) {
            if (end_src[j] != i) return false;
        }
        return true;
    }

    void choose_arc(size_t k) {
        if (k == ends.size()) {
            for (int i = 1; i + 1 <= n; ++i) {
                if (box[i]) {
                    rel[i] = Rel::Gap;
                } else if (end_src[i + 1] == i) {
                    rel[i] = Rel::Arc;
                } else {
                    rel[i] = Rel::Asc;
                }
            }
            extend(1);
            return;
        }
        const int e = ends[k];
        for (int s = 1; s < e; ++s) {
            if (is_src[s]) continue;
            // A boxed adjacency drops by at least two, so the arc cannot
            // come from the position directly before its end.
            if (s == e - 1 && box[s]) continue;
            end_src[e] = s;
            is_src[s] = true;
            choose_arc(k + 1);
            end_src[e] = 0;
            is_src[s] = false;
        }
    }
};

// Member words paired with their adjusted capacity vectors, sorted by word.
struct SourceList {
    std::vector<std::vector<int>> words;
    std::vector<std::vector<int>> caps;
};

// Every word with the diagram's 2-descent set and 2-inversion targets whose
// adjusted capacities charge the first block as the key's flag says. Arcs
// are tried source by source, then values grow along the forced chains.
SourceList enumerate_sources(const FiberKey& key) {
    SourceSearch search(key);
    search.choose_arc(0);
    std::sort(search.out.begin(), search.out.end());
    SourceList list;
    list.words.reserve(search.out.size());
    list.caps.reserve(search.out.size());
    for (auto& [word, c] : search.out) {
        list.words.push_back(std::move(word));
        list.caps.push_back(std::move(c));
    }
    return list;
}

// Candidate sets for one labelling phase: parallel position list and value
// bitmask, bit v - 1 standing for value v, kept in position order. Words
// stay within the enumeration cap, so 32 bits suffice.
struct CandSets {
    std::vector<int> pos;
    std::vector<std::uint32_t> mask;

    size_t size() const { return pos.size(); }

    void erase_at(size_t idx) {
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(idx));
        mask.erase(mask.begin() + static_cast<std::ptrdiff_t>(idx));
    }
};

constexpr std::uint32_t bit_of(int v) { return std::uint32_t{1} << (v - 1); }

// Bits for the values 1..t.
constexpr std::uint32_t below_mask(int t) { return (std::uint32_t{1} << t) - 1; }

nlohmann::ordered_json sets_snapshot(const CandSets& sets) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (size_t i = 0; i < sets.size(); ++i) {
        std::vector<int> vals;
        for (std::uint32_t m = sets.mask[i]; m != 0; m &= m - 1) {
            vals.push_back(std::countr_zero(m) + 1);
        }
        out[std::to_string(sets.pos[i])] = vals;
    }
    return out;
}

// True when the live sets still admit a complete assignment of the leftover
// values, one value per set, pretending set skip is gone and the value bits
// in drop are cleared everywhere. Plain augmenting-path matching; the
// instances here are tiny.
bool completes_without(const CandSets& sets, size_t skip, std::uint32_t drop,
                       std::uint32_t leftover) {
    std::array<std::uint32_t, 32> cand{};
    int m = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i != skip) cand[m++] = sets.mask[i] & ~drop;
    }
    if (m != std::popcount(leftover)) return false;

    std::array<int, 32> match;
    match.fill(-1);
    auto extend = [&](auto&& self, int vb, std::uint32_t& seen) -> bool {
        for (int si = 0; si < m; ++si) {
            if (seen & (std::uint32_t{1} << si)) continue;
            if (!(cand[si] >> vb & 1)) continue;
            seen |= std::uint32_t{1} << si;
            if (match[si] < 0 || self(self, match[si], seen)) {
                match[si] = vb;
                return true;
            }
        }
        return false;
    };
    for (std::uint32_t vm = leftover; vm != 0; vm &= vm - 1) {
        std::uint32_t seen = 0;
        if (!extend(extend, std::countr_zero(vm), seen)) return false;
    }
    return true;
}

// Single pass over the values in increasing order: a value carried by
// exactly one live set claims that position. Assignments take effect
// immediately, so later values see the shrunken state.
void uniqueness_pass(const std::vector<int>& values, CandSets& sets,
                     std::vector<int>& label, std::uint32_t& used,
                     nlohmann::ordered_json* trace) {
    for (int v : values) {
        if (used & bit_of(v)) continue;
        size_t carrier = 0;
        int count = 0;
        for (size_t i = 0; i < sets.size(); ++i) {
            if (sets.mask[i] & bit_of(v)) {
                carrier = i;
                if (++count > 1) break;
            }
        }
        if (count == 1) {
            label[sets.pos[carrier]] = v;
            used |= bit_of(v);
            if (trace) trace->push_back({{"unique", v}, {"position", sets.pos[carrier]}});
            sets.erase_at(carrier);
        }
    }
}

// Labelling-rule body once the word's own capacity vector is known.
std::vector<int> rule_label_on(const FiberKey& key, const std::vector<int>& source,
                               const std::vector<int>& own_c,
                               nlohmann::ordered_json* circle_passes,
                               nlohmann::ordered_json* dot_passes) {
    const int n = key.n;
    const Permutation p(source);
    const Layout lay = layout_of(key, own_c);
    std::vector<int> label(n + 1, 0);

    const auto pairs = two_inversion_set(p);
    std::vector<int> jseq;
    jseq.reserve(pairs.size());
    for (auto [i, j] : pairs) jseq.push_back(j);
    std::vector<int> jsorted = jseq;
    std::sort(jsorted.begin(), jsorted.end());

    std::vector<int> circles;
    std::vector<int> dots;
    for (int i = 1; i <= n; ++i) (lay.circle[i] ? circles : dots).push_back(i);

    std::uint32_t jmask = 0;
    for (int v : jsorted) jmask |= bit_of(v);

    // Circle passes: candidates above the position, a uniqueness sweep, and
    // a feasibility search assigning the leftovers in target order.
    {
        CandSets sets;
        for (int pos : circles) {
            const std::uint32_t vals = jmask & ~below_mask(pos);
            if (vals == 0) return {};
            sets.pos.push_back(pos);
            sets.mask.push_back(vals);
        }
        if (circle_passes) (*circle_passes)["initial_sets"] = sets_snapshot(sets);

        std::uint32_t used = 0;
        nlohmann::ordered_json unique_events = nlohmann::ordered_json::array();
        uniqueness_pass(jsorted, sets, label, used,
                        circle_passes ? &unique_events : nullptr);
        if (circle_passes) (*circle_passes)["unique"] = std::move(unique_events);

        std::vector<int> order;
        for (int v : jseq) {
            if (!(used & bit_of(v))) order.push_back(v);
        }

        auto slope_ok = [&](int pos, int v) {
            if (pos > 1 && lay.circle[pos - 1] && label[pos - 1] != 0) {
                if ((label[pos - 1] < v) != !lay.image_desc[pos - 1]) return false;
            }
            if (pos < n && lay.circle[pos + 1] && label[pos + 1] != 0) {
                if ((v < label[pos + 1]) != !lay.image_desc[pos]) return false;
            }
            return true;
        };

        // Depth-first: fill the leftover circles left to right, trying the
        // leftover values in target order, under membership and slope
        // consistency; the first complete assignment wins.
        std::vector<bool> taken(order.size(), false);
        auto fill = [&](auto&& self, size_t idx) -> bool {
            if (idx == sets.size()) return true;
            const int pos = sets.pos[idx];
            for (size_t x = 0; x < order.size(); ++x) {
                if (taken[x]) continue;
                const int v = order[x];
                if (!(sets.mask[idx] & bit_of(v))) continue;
                if (!slope_ok(pos, v)) continue;
                label[pos] = v;
                taken[x] = true;
                if (self(self, idx + 1)) return true;
                label[pos] = 0;
                taken[x] = false;
            }
            return false;
        };
        if (!fill(fill, 0)) return {};
        if (circle_passes) {
            nlohmann::ordered_json final = nlohmann::ordered_json::array();
            for (int pos : sets.pos) final.push_back({{"position", pos}, {"value", label[pos]}});
            (*circle_passes)["final"] = std::move(final);
        }
    }

    // Dot passes: candidates at or below min(position, untouched position),
    // uniqueness sweeps interleaved with assigning each value to its
    // smallest-letter carrier that keeps the rest completable.
    {
        const auto omega = omega_word(p);
        if (dots.size() != omega.positions.size()) return {};

        std::vector<int> evals;
        for (int v = 1; v <= n; ++v) {
            if (!(jmask & bit_of(v))) evals.push_back(v);
        }
        std::uint32_t emask = 0;
        for (int v : evals) emask |= bit_of(v);

        CandSets sets;
        std::vector<int> dot_ord(n + 1, 0); // position -> index into omega
        for (size_t k = 0; k < dots.size(); ++k) {
            const int pos = dots[k];
            dot_ord[pos] = static_cast<int>(k);
            const std::uint32_t vals = emask & below_mask(std::min(pos, omega.positions[k]));
            if (vals == 0) return {};
            sets.pos.push_back(pos);
            sets.mask.push_back(vals);
        }
        if (dot_passes) (*dot_passes)["initial_sets"] = sets_snapshot(sets);

        std::uint32_t used = 0;
        nlohmann::ordered_json events = nlohmann::ordered_json::array();
        uniqueness_pass(evals, sets, label, used, dot_passes ? &events : nullptr);

        for (int v : evals) {
            if (used & bit_of(v)) continue;
            // (letter, position, live index) for every set still carrying v
            std::vector<std::tuple<int, int, size_t>> carriers;
            for (size_t i = 0; i < sets.size(); ++i) {
                if (sets.mask[i] & bit_of(v)) {
                    carriers.emplace_back(omega.letters[dot_ord[sets.pos[i]]], sets.pos[i], i);
                }
            }
            std::sort(carriers.begin(), carriers.end());
            if (carriers.empty()) return {};

            const std::uint32_t leftover = emask & ~used & ~bit_of(v);
            size_t chosen = sets.size();
            for (const auto& [letter, pos, idx] : carriers) {
                if (completes_without(sets, idx, bit_of(v), leftover)) {
                    chosen = idx;
                    break;
                }
            }
            if (chosen == sets.size()) return {};
            label[sets.pos[chosen]] = v;
            used |= bit_of(v);
            if (dot_passes) events.push_back({{"assign", v}, {"position", sets.pos[chosen]}});
            sets.erase_at(chosen);
            for (auto& m : sets.mask) m &= ~bit_of(v);
            uniqueness_pass(evals, sets, label, used, dot_passes ? &events : nullptr);
        }
        if (dot_passes) (*dot_passes)["assign"] = std::move(events);
    }

    // The assignment must realize the diagram exactly: values above their
    // position precisely at the circles, slopes matching the boundaries.
    for (int i = 1; i <= n; ++i) {
        if (label[i] == 0) return {};
        if ((label[i] > i) != lay.circle[i]) return {};
    }
    for (int i = 1; i + 1 <= n; ++i) {
        if ((label[i] > label[i + 1]) != lay.image_desc[i]) return {};
    }
    return {label.begin() + 1, label.end()};
}

} // namespace

std::vector<int> rule_label(const FiberKey& key, const std::vector<int>& source,
                            nlohmann::ordered_json* circle_passes,
                            nlohmann::ordered_json* dot_passes) {
    // The rules run on the word's own slope layout; within one class the
    // capacity vector still varies word by word.
    const Permutation p(source);
    std::vector<int> own_c;
    try {
        own_c = adjust_capacities(p, greedy_block_capacities(p));
    } catch (const invariant_error&) {
        return {};
    }
    return rule_label_on(key, source, own_c, circle_passes, dot_passes);
}

namespace {

// Pairs sources with images: every source the labelling rules send to its
// own image keeps it; dead ends and contested images fall back to pairing
// the leftovers of both sides in lexicographic order.
void build_matching(const FiberKey& key, Fiber& fib, const std::vector<std::vector<int>>& caps) {
    const int m = static_cast<int>(fib.sources.size());
    fib.to_image.assign(m, -1);
    fib.to_source.assign(m, -1);

    std::vector<int> provisional(m, -1);
    std::vector<int> claims(m, 0);
    for (int i = 0; i < m; ++i) {
        const auto labelled = rule_label_on(key, fib.sources[i], caps[i], nullptr, nullptr);
        if (labelled.empty()) continue;
        const int t = fiber_rank(fib.images, labelled);
        assert(t >= 0);
        if (t < 0) continue;
        provisional[i] = t;
        ++claims[t];
    }

    for (int i = 0; i < m; ++i) {
        const int t = provisional[i];
        if (t >= 0 && claims[t] == 1) {
            fib.to_image[i] = t;
            fib.to_source[t] = i;
        }
    }

    std::vector<int> unclaimed;
    for (int t = 0; t < m; ++t) {
        if (fib.to_source[t] < 0) unclaimed.push_back(t);
    }
    size_t next = 0;
    for (int i = 0; i < m; ++i) {
        if (fib.to_image[i] >= 0) continue;
        assert(next < unclaimed.size());
        const int t = unclaimed[next++];
        fib.to_image[i] = t;
        fib.to_source[t] = i;
        ++fib.repaired;
    }
    assert(next == unclaimed.size());
}

} // namespace

const Fiber& fiber_for(const FiberKey& key) {
    static std::mutex guard;
    static std::map<FiberKey, Fiber> cache;

    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Fiber fib;
        SourceList list = enumerate_sources(key);
        fib.sources = std::move(list.words);
        fib.images = enumerate_images(key);
        if (fib.sources.size() != fib.images.size()) {
            throw invariant_error("fiber_for: class sizes disagree (" +
                                  std::to_string(fib.sources.size()) + " words, " +
                                  std::to_string(fib.images.size()) + " images) for " +
                                  key_text(key));
        }
        build_matching(key, fib, list.caps);
        it = cache.emplace(key, std::move(fib)).first;
    }
    return it->second;
}

int fiber_rank(const std::vector<std::vector<int>>& list, const std::vector<int>& word) {
    auto it = std::lower_bound(list.begin(), list.end(), word);
    if (it == list.end() || *it != word) return -1;
    return static_cast<int>(it - list.begin());
}

} // namespace permstat::detail
