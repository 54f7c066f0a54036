// Inverse direction: block decomposition, skeleton deduction, relabelling.

#include "permstat/inverse_map.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "permstat/errors.hpp"
#include "permstat/forward_map.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

TauDecomposition decompose(const Permutation& tau) {
    const int n = tau.size();
    TauDecomposition dec;
    if (tau(1) == 1) dec.d.push_back(0);
    for (int i = 1; i + 1 <= n; ++i) {
        if (tau(i) > tau(i + 1)) dec.d.push_back(i);
    }
    if (dec.d.empty()) {
        throw invariant_error("decompose: a word that does not fix 1 must have a descent");
    }
    dec.r = static_cast<int>(dec.d.size()) - 1;

    for (int k = 0; k <= dec.r; ++k) {
        const int lo = (k == 0) ? 0 : dec.d[k - 1];
        const int hi = dec.d[k];
        int cnt = 0;
        for (int l = lo + 1; l <= hi; ++l) {
            if (tau(l) > l) ++cnt;
        }
        // Exceedances must fill a suffix of every ascending run.
        for (int l = lo + 1; l <= hi; ++l) {
            if ((tau(l) > l) != (l > hi - cnt)) {
                throw invariant_error("decompose: exceedances do not close the run ending at " +
                                      std::to_string(hi));
            }
        }
        dec.c.push_back(cnt);
        dec.d2.push_back(hi - cnt);
    }

    if (dec.d2.front() != 0) {
        throw invariant_error("decompose: the first block does not open at 0");
    }
    for (int k = 0; k < dec.r; ++k) {
        if (dec.d2[k] >= dec.d2[k + 1]) {
            throw invariant_error("decompose: reconstructed boundaries are not increasing");
        }
    }
    if (n > 0 && dec.d2.back() >= n) {
        throw invariant_error("decompose: last reconstructed boundary reaches the border");
    }

    dec.t.assign(dec.r + 1, 0);
    for (int k = 1; k <= dec.r; ++k) {
        int l = k;
        while (l > 1 && dec.d2[l - 1] == dec.d2[l] - 1) --l;
        dec.t[k] = dec.d2[l];
    }
    return dec;
}

namespace {

// Positions a and b of the word may swap their values without changing the
// descent set or the exceedance set.
bool exchangeable(const Permutation& tau, int a, int b) {
    if (a == b) return true;
    const int n = tau.size();
    std::vector<int> w = tau.word();
    std::swap(w[a - 1], w[b - 1]);
    for (int i = 1; i + 1 <= n; ++i) {
        if ((tau(i) > tau(i + 1)) != (w[i - 1] > w[i])) return false;
    }
    for (int i = 1; i <= n; ++i) {
        if ((tau(i) > i) != (w[i - 1] > i)) return false;
    }
    return true;
}

constexpr int kInf = 1 << 28;

// Difference-bound matrix over nodes 0..n (node 0 pins assigned values):
// entry (a, b) is the tightest known upper bound on sigma(a) - sigma(b),
// kept transitively closed. A negative diagonal marks a contradiction.
struct Bounds {
    int m = 0;                // node count (n + 1)
    std::vector<int> d;

    explicit Bounds(int n) : m(n + 1), d(static_cast<size_t>(m) * m, kInf) {
        for (int i = 0; i < m; ++i) at(i, i) = 0;
    }

    int& at(int a, int b) { return d[static_cast<size_t>(a) * m + b]; }
    int get(int a, int b) const { return d[static_cast<size_t>(a) * m + b]; }

    // Tightens (a, b) to w, re-closes incrementally, reports improvement.
    // Sets `ok` to false when the closure produces a negative self-distance.
    bool tighten(int a, int b, int w, bool& ok) {
        if (w >= get(a, b)) return false;
        at(a, b) = w;
        for (int x = 0; x < m; ++x) {
            const int xa = get(x, a);
            if (xa >= kInf) continue;
            for (int y = 0; y < m; ++y) {
                const int by = get(b, y);
                if (by >= kInf) continue;
                const int cand = xa + w + by;
                if (cand < get(x, y)) at(x, y) = cand;
            }
        }
        for (int x = 0; x < m; ++x) {
            if (get(x, x) < 0) {
                ok = false;
                break;
            }
        }
        return true;
    }
};

struct ArcState {
    int end = 0;
    int src = 0;                 // 0 while undetermined
    std::vector<int> window;     // ascending candidate source positions
};

enum class Status { Source, NonSource, Unknown };

class InverseEngine {
public:
    InverseEngine(const Permutation& tau, const Skeleton* seed)
        : tau_(tau), n_(tau.size()), dec_(decompose(tau)), bounds_(tau.size()) {
        boxed_.assign(n_ + 1, false);
        for (int k = 1; k <= dec_.r; ++k) boxed_[dec_.d2[k]] = true;

        for (int l = 1; l <= n_; ++l) {
            if (tau_(l) > l) {
                excpos_.push_back(l);
            } else {
                dotpos_.push_back(l);
                evals_.push_back(tau_(l));
            }
        }
        std::sort(evals_.begin(), evals_.end());

        build_arcs();
        if (seed) adopt(*seed);

        // Source-order facts: when two exceedance values are exchangeable in
        // the image, the lower one is reached from the earlier source.
        std::vector<int> idx_of_end(n_ + 1, -1);
        for (size_t a = 0; a < arcs_.size(); ++a) idx_of_end[arcs_[a].end] = static_cast<int>(a);
        for (size_t x = 0; x < excpos_.size(); ++x) {
            for (size_t y = x + 1; y < excpos_.size(); ++y) {
                if (exchangeable(tau_, excpos_[x], excpos_[y])) {
                    arc_order_.push_back({idx_of_end[tau_(excpos_[x])],
                                          idx_of_end[tau_(excpos_[y])]});
                }
            }
        }

        // Value-order facts between future plain labels: exchangeable image
        // values at plain positions keep their relative order across the map.
        for (size_t x = 0; x < dotpos_.size(); ++x) {
            for (size_t y = x + 1; y < dotpos_.size(); ++y) {
                if (!exchangeable(tau_, dotpos_[x], dotpos_[y])) continue;
                if (tau_(dotpos_[x]) < tau_(dotpos_[y])) {
                    dot_facts_.push_back({static_cast<int>(x), static_cast<int>(y)});
                } else {
                    dot_facts_.push_back({static_cast<int>(y), static_cast<int>(x)});
                }
            }
        }

        label_.assign(n_ + 1, 0);
        value_pos_.assign(n_ + 1, 0);
        for (int i = 1; i <= n_; ++i) unlabeled_.push_back(i);
        arrows_.assign(std::max(n_, 1), Arrow::Unknown);
        recompute_arrows();
    }

    void fixpoint();
    Skeleton snapshot() const;
    Permutation run(nlohmann::ordered_json* steps);

private:
    struct DotFact { int lo = 0, hi = 0; }; // sigma(u[lo]) < sigma(u[hi]), 0-based ordinals

    const Permutation& tau_;
    int n_;
    TauDecomposition dec_;
    std::vector<bool> boxed_;
    std::vector<ArcState> arcs_;            // sorted by end
    std::vector<int> arc_at_end_;           // position -> arc index + 1
    std::vector<std::pair<int, int>> arc_order_;
    std::vector<int> excpos_;
    std::vector<int> dotpos_;
    std::vector<int> evals_;
    std::vector<DotFact> dot_facts_;
    std::vector<Arrow> arrows_;
    std::vector<int> label_;
    std::vector<int> value_pos_;
    std::vector<int> unlabeled_;            // ascending
    int next_value_ = 1;
    bool must_source_one_ = false;
    Bounds bounds_;
    bool changed_ = false;
    nlohmann::ordered_json* steps_ = nullptr;

    void build_arcs();
    void adopt(const Skeleton& seed);
    bool is_arc_src(int pos) const;
    bool is_known_source(int pos) const;
    bool in_unlabeled(int pos) const {
        return std::binary_search(unlabeled_.begin(), unlabeled_.end(), pos);
    }
    void add_bound(int a, int b, int w);
    void recompute_arrows();
    std::vector<Arrow> arrows_for(const std::vector<ArcState>& arcs) const;
    void strike(ArcState& a, int pos);
    void complete_arc(int idx, int src, const char* via);
    void assign(int pos, const char* via);
    void chain_from(int pos);
    std::vector<int> minimal_set() const;
    bool candidate_consistent(int arc_idx, int cand) const;
    void fixpoint_round(bool with_lookahead);
};

void InverseEngine::build_arcs() {
    arc_at_end_.assign(n_ + 1, 0);
    for (int l : excpos_) {
        ArcState a;
        a.end = tau_(l);
        int k = -1;
        for (int b = 0; b <= dec_.r; ++b) {
            const int lo = (b == 0) ? 0 : dec_.d[b - 1];
            if (lo < l && l <= dec_.d[b]) {
                k = b;
                break;
            }
        }
        if (k < 0) {
            throw invariant_error("build_skeleton: exceedance at " + std::to_string(l) +
                                  " falls outside every block");
        }
        const int lo = (k == 0) ? 1 : dec_.t[k];
        const int hi = a.end - 1;
        if (lo > hi) {
            throw invariant_error("build_skeleton: empty window for the arc into " +
                                  std::to_string(a.end));
        }
        for (int x = lo; x <= hi; ++x) {
            if (x == a.end - 1 && boxed_[x]) continue; // boxed predecessor never sources
            a.window.push_back(x);
        }
        if (a.window.empty()) {
            throw invariant_error("build_skeleton: window emptied for the arc into " +
                                  std::to_string(a.end));
        }
        arcs_.push_back(std::move(a));
    }
    std::sort(arcs_.begin(), arcs_.end(),
              [](const ArcState& x, const ArcState& y) { return x.end < y.end; });
    for (size_t i = 0; i < arcs_.size(); ++i) arc_at_end_[arcs_[i].end] = static_cast<int>(i) + 1;
}

void InverseEngine::adopt(const Skeleton& seed) {
    if (seed.n != n_ || seed.arcs.size() != arcs_.size()) {
        throw validation_error("propagate: skeleton does not belong to this word");
    }
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (seed.arcs[i].end != arcs_[i].end) {
            throw validation_error("propagate: skeleton arcs do not match the word");
        }
        arcs_[i].window = seed.arcs[i].window;
        std::sort(arcs_[i].window.begin(), arcs_[i].window.end());
    }
    // Adopt determined sources after all windows are in place.
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (seed.arcs[i].src != 0) {
            arcs_[i].src = 0;
            arcs_[i].window = {seed.arcs[i].src};
            complete_arc(static_cast<int>(i), seed.arcs[i].src, "adopted");
        }
    }
}

bool InverseEngine::is_arc_src(int pos) const {
    for (const auto& a : arcs_) {
        if (a.src == pos) return true;
    }
    return false;
}

bool InverseEngine::is_known_source(int pos) const {
    return is_arc_src(pos) || (pos == 1 && must_source_one_);
}

void InverseEngine::add_bound(int a, int b, int w) {
    bool ok = true;
    if (bounds_.tighten(a, b, w, ok)) changed_ = true;
    if (!ok) {
        throw invariant_error("inverse: contradictory value constraints around position " +
                              std::to_string(a));
    }
}

std::vector<Arrow> InverseEngine::arrows_for(const std::vector<ArcState>& arcs) const {
    std::vector<Arrow> ar(std::max(n_, 1), Arrow::Unknown);
    for (int i = 1; i + 1 <= n_; ++i) {
        if (boxed_[i]) {
            ar[i] = Arrow::Desc;
            continue;
        }
        const int ai = arc_at_end_[i + 1];
        if (ai == 0) {
            ar[i] = Arrow::Asc;
            continue;
        }
        const ArcState& a = arcs[ai - 1];
        if (a.src == i) {
            ar[i] = Arrow::Desc;
        } else if (a.src != 0) {
            ar[i] = Arrow::Asc;
        } else if (std::binary_search(a.window.begin(), a.window.end(), i)) {
            ar[i] = Arrow::Unknown;
        } else {
            ar[i] = Arrow::Asc;
        }
    }
    return ar;
}

void InverseEngine::recompute_arrows() {
    arrows_ = arrows_for(arcs_);
    for (int i = 1; i + 1 <= n_; ++i) {
        if (arrows_[i] == Arrow::Asc) {
            add_bound(i, i + 1, -1);
        } else if (arrows_[i] == Arrow::Desc) {
            add_bound(i + 1, i, -1);
        }
    }
}

void InverseEngine::strike(ArcState& a, int pos) {
    auto it = std::lower_bound(a.window.begin(), a.window.end(), pos);
    if (it != a.window.end() && *it == pos) {
        a.window.erase(it);
        changed_ = true;
        if (a.src == 0 && a.window.empty()) {
            throw invariant_error("inverse: window of the arc into " + std::to_string(a.end) +
                                  " ran empty");
        }
    }
}

void InverseEngine::complete_arc(int idx, int src, const char* via) {
    ArcState& a = arcs_[idx];
    assert(a.src == 0);
    if (!std::binary_search(a.window.begin(), a.window.end(), src)) {
        throw invariant_error("inverse: chosen source " + std::to_string(src) +
                              " is outside the window of the arc into " + std::to_string(a.end));
    }
    a.src = src;
    a.window = {src};
    changed_ = true;
    for (auto& other : arcs_) {
        if (&other != &a && other.src == 0) strike(other, src);
    }
    add_bound(src, a.end, 1);
    add_bound(a.end, src, -1);
    if (steps_) {
        steps_->push_back({{"event", "arc"}, {"end", a.end}, {"src", src}, {"via", via}});
    }
}

void InverseEngine::assign(int pos, const char* via) {
    if (label_[pos] != 0) {
        throw invariant_error("inverse: position " + std::to_string(pos) + " labelled twice");
    }
    const int v = next_value_++;
    label_[pos] = v;
    value_pos_[v] = pos;
    unlabeled_.erase(std::remove(unlabeled_.begin(), unlabeled_.end(), pos), unlabeled_.end());
    add_bound(pos, 0, v);
    add_bound(0, pos, -v);
    if (!is_arc_src(pos)) {
        // A labelled vertex that is not already a source can never become
        // one: its lower neighbour by value is labelled too.
        for (auto& a : arcs_) {
            if (a.src == 0) strike(a, pos);
        }
    }
    changed_ = true;
    if (steps_) {
        steps_->push_back({{"event", "label"}, {"position", pos}, {"value", v}, {"via", via}});
    }
}

void InverseEngine::fixpoint_round(bool with_lookahead) {
    recompute_arrows();

    // Position 1 must source an arc as soon as its value is known to
    // exceed 1 (a leading descent or the value 1 placed elsewhere).
    if (!must_source_one_) {
        const bool desc_start = n_ >= 2 && arrows_[1] == Arrow::Desc;
        const bool one_elsewhere = value_pos_[1] != 0 && value_pos_[1] != 1;
        const bool labelled_high = label_[1] >= 2;
        if (desc_start || one_elsewhere || labelled_high) {
            must_source_one_ = true;
            changed_ = true;
        }
    }
    if (must_source_one_ && !is_arc_src(1)) {
        int holder = -1;
        int count = 0;
        for (size_t i = 0; i < arcs_.size(); ++i) {
            if (arcs_[i].src == 0 &&
                std::binary_search(arcs_[i].window.begin(), arcs_[i].window.end(), 1)) {
                holder = static_cast<int>(i);
                ++count;
            }
        }
        if (count == 0) {
            throw invariant_error("inverse: position 1 must source an arc but no window admits it");
        }
        if (count == 1) complete_arc(holder, 1, "must-source");
    }

    // Source-order narrowing.
    for (auto [x, y] : arc_order_) {
        ArcState& A = arcs_[x];
        ArcState& B = arcs_[y];
        if (A.src != 0 && B.src != 0) {
            if (A.src >= B.src) {
                throw invariant_error("inverse: source order violated between the arcs into " +
                                      std::to_string(A.end) + " and " + std::to_string(B.end));
            }
            continue;
        }
        if (A.src != 0) {
            while (B.src == 0 && !B.window.empty() && B.window.front() <= A.src) {
                strike(B, B.window.front());
            }
        } else if (B.src != 0) {
            while (A.src == 0 && !A.window.empty() && A.window.back() >= B.src) {
                strike(A, A.window.back());
            }
        } else {
            const int amin = A.window.front();
            while (B.window.front() <= amin && B.window.size() > 1) strike(B, B.window.front());
            if (B.window.front() <= amin) {
                throw invariant_error("inverse: order facts empty the window of the arc into " +
                                      std::to_string(B.end));
            }
            const int bmax = B.window.back();
            while (A.window.back() >= bmax && A.window.size() > 1) strike(A, A.window.back());
            if (A.window.back() >= bmax) {
                throw invariant_error("inverse: order facts empty the window of the arc into " +
                                      std::to_string(A.end));
            }
        }
    }

    // Windows reduced to a single candidate force their arc.
    for (size_t i = 0; i < arcs_.size(); ++i) {
        if (arcs_[i].src == 0 && arcs_[i].window.size() == 1) {
            complete_arc(static_cast<int>(i), arcs_[i].window.front(), "window-singleton");
        }
    }

    // Value-order facts apply once the plain ordinals below are settled.
    {
        std::vector<int> upos;
        for (int pos = 1; pos <= n_; ++pos) {
            Status st;
            if (is_known_source(pos)) {
                st = Status::Source;
            } else if (label_[pos] != 0) {
                st = Status::NonSource;
            } else {
                bool in_window = false;
                for (const auto& a : arcs_) {
                    if (a.src == 0 &&
                        std::binary_search(a.window.begin(), a.window.end(), pos)) {
                        in_window = true;
                        break;
                    }
                }
                st = in_window ? Status::Unknown : Status::NonSource;
            }
            if (st == Status::Unknown) break;
            if (st == Status::NonSource) upos.push_back(pos);
        }
        for (const auto& f : dot_facts_) {
            if (f.lo < static_cast<int>(upos.size()) && f.hi < static_cast<int>(upos.size())) {
                add_bound(upos[f.lo], upos[f.hi], -1);
            }
        }
    }

    // Per-candidate lookahead: drop window entries whose adoption would
    // contradict the known bounds one step later.
    if (with_lookahead) {
        for (size_t i = 0; i < arcs_.size(); ++i) {
            if (arcs_[i].src != 0) continue;
            const std::vector<int> cands = arcs_[i].window;
            for (int cand : cands) {
                if (!candidate_consistent(static_cast<int>(i), cand)) {
                    strike(arcs_[i], cand);
                }
            }
        }
    }
}

bool InverseEngine::candidate_consistent(int arc_idx, int cand) const {
    std::vector<ArcState> arcs = arcs_;
    arcs[arc_idx].src = cand;
    arcs[arc_idx].window = {cand};
    for (auto& other : arcs) {
        if (other.src != 0 || &other == &arcs[arc_idx]) continue;
        auto it = std::lower_bound(other.window.begin(), other.window.end(), cand);
        if (it != other.window.end() && *it == cand) other.window.erase(it);
        if (other.window.empty()) return false;
    }

    // One pass of source-order narrowing under the hypothesis.
    for (auto [x, y] : arc_order_) {
        ArcState& A = arcs[x];
        ArcState& B = arcs[y];
        if (A.src != 0 && B.src != 0) {
            if (A.src >= B.src) return false;
            continue;
        }
        auto drop_le = [](std::vector<int>& w, int bound) {
            w.erase(w.begin(), std::lower_bound(w.begin(), w.end(), bound + 1));
        };
        auto drop_ge = [](std::vector<int>& w, int bound) {
            w.erase(std::lower_bound(w.begin(), w.end(), bound), w.end());
        };
        if (A.src != 0) {
            drop_le(B.window, A.src);
            if (B.window.empty()) return false;
        } else if (B.src != 0) {
            drop_ge(A.window, B.src);
            if (A.window.empty()) return false;
        } else {
            drop_le(B.window, A.window.front());
            if (B.window.empty()) return false;
            drop_ge(A.window, B.window.back());
            if (A.window.empty()) return false;
        }
    }

    if (must_source_one_) {
        bool covered = false;
        for (const auto& a : arcs) {
            if (a.src == 1) covered = true;
            if (a.src == 0 && std::binary_search(a.window.begin(), a.window.end(), 1)) {
                covered = true;
            }
        }
        if (!covered) return false;
    }

    Bounds sim = bounds_;
    bool ok = true;
    sim.tighten(cand, arcs[arc_idx].end, 1, ok);
    if (ok) sim.tighten(arcs[arc_idx].end, cand, -1, ok);
    auto ar = arrows_for(arcs);
    for (int i = 1; ok && i + 1 <= n_; ++i) {
        if (ar[i] == Arrow::Asc) {
            sim.tighten(i, i + 1, -1, ok);
        } else if (ar[i] == Arrow::Desc) {
            sim.tighten(i + 1, i, -1, ok);
        }
    }
    return ok;
}

void InverseEngine::fixpoint() {
    // Cheap rules run to quiescence; the lookahead only joins once they
    // settle, and any hit sends control back to the cheap tier.
    while (true) {
        changed_ = false;
        fixpoint_round(false);
        if (changed_) continue;
        fixpoint_round(true);
        if (!changed_) break;
    }
}

std::vector<int> InverseEngine::minimal_set() const {
    std::vector<int> M;
    for (int i : unlabeled_) {
        if (is_known_source(i)) continue;
        if (i >= 2 && in_unlabeled(i - 1) && arrows_[i - 1] == Arrow::Unknown) continue;
        bool dominated = false;
        for (int j : unlabeled_) {
            if (j != i && bounds_.get(j, i) <= 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) M.push_back(i);
    }
    return M;
}

void InverseEngine::chain_from(int pos) {
    int cur = pos;
    while (true) {
        const int ai = arc_at_end_[cur];
        if (ai == 0) break;
        ArcState& a = arcs_[ai - 1];
        if (a.src == 0) {
            fixpoint();
        }
        if (a.src == 0) {
            // Choose the source: rightmost window candidate that is minimal
            // under the known bounds and leaves every order fact satisfiable.
            std::vector<int> cand = a.window;
            for (int x : cand) {
                if (label_[x] != 0) {
                    throw invariant_error("inverse: labelled position " + std::to_string(x) +
                                          " survived in a window");
                }
            }
            std::vector<int> viable;
            for (int x : cand) {
                bool dominated = false;
                for (int y : cand) {
                    if (y != x && bounds_.get(y, x) <= 0) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                bool ok = true;
                for (auto [p, q] : arc_order_) {
                    if (p == ai - 1 && arcs_[q].src == 0) {
                        const auto& w = arcs_[q].window;
                        if (std::none_of(w.begin(), w.end(),
                                         [&](int z) { return z != x && z > x; })) {
                            ok = false;
                            break;
                        }
                    }
                    if (q == ai - 1 && arcs_[p].src == 0) {
                        const auto& w = arcs_[p].window;
                        if (std::none_of(w.begin(), w.end(),
                                         [&](int z) { return z != x && z < x; })) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) viable.push_back(x);
            }
            if (viable.empty()) {
                throw invariant_error("inverse: the arc into " + std::to_string(a.end) +
                                      " has no viable source");
            }
            complete_arc(ai - 1, viable.back(), "source-pick");
        }
        const int s = a.src;
        if (label_[s] != 0) {
            throw invariant_error("inverse: source " + std::to_string(s) + " already labelled");
        }
        assign(s, "arc-source");
        cur = s;
    }
}

Permutation InverseEngine::run(nlohmann::ordered_json* steps) {
    steps_ = steps;
    while (!unlabeled_.empty()) {
        fixpoint();
        auto M = minimal_set();
        if (M.empty()) {
            throw invariant_error("inverse: no labelable position for " + tau_.str());
        }
        int chosen;
        const char* via;
        if (M.size() == 1) {
            chosen = M.front();
            via = "single-minimal";
        } else {
            int k = 0;
            for (int pos = 1; pos <= n_; ++pos) {
                if (label_[pos] != 0 && !is_arc_src(pos)) ++k;
            }
            if (k >= static_cast<int>(evals_.size())) {
                throw invariant_error("inverse: ran out of plain values for " + tau_.str());
            }
            const int ev = evals_[k];
            const int mpos = tau_.inverse()(ev);
            std::vector<int> llist;
            for (int l : dotpos_) {
                if (tau_(l) >= ev && exchangeable(tau_, l, mpos)) llist.push_back(l);
            }
            if (llist.size() != M.size()) {
                throw invariant_error("inverse: exchange class of value " + std::to_string(ev) +
                                      " has " + std::to_string(llist.size()) +
                                      " members for " + std::to_string(M.size()) +
                                      " minimal positions in " + tau_.str());
            }
            const auto it = std::find(llist.begin(), llist.end(), mpos);
            assert(it != llist.end());
            chosen = M[static_cast<size_t>(it - llist.begin())];
            via = "exchange-class";
        }
        if (steps_) {
            steps_->push_back({{"event", "minimal"}, {"set", M}, {"chosen", chosen}});
        }
        assign(chosen, via);
        chain_from(chosen);
    }
    std::vector<int> word(n_);
    for (int i = 1; i <= n_; ++i) word[i - 1] = label_[i];
    steps_ = nullptr;
    return Permutation(word);
}

Skeleton InverseEngine::snapshot() const {
    Skeleton sk;
    sk.n = n_;
    for (int k = 1; k <= dec_.r; ++k) sk.boxes.push_back(dec_.d2[k]);
    for (const auto& a : arcs_) {
        Skeleton::Arc out;
        out.end = a.end;
        out.src = a.src;
        out.window = a.window;
        sk.arcs.push_back(std::move(out));
    }
    sk.arrows = arrows_;
    return sk;
}

} // namespace

Skeleton build_skeleton(const Permutation& tau) {
    InverseEngine eng(tau, nullptr);
    return eng.snapshot();
}

Skeleton propagate(const Permutation& tau, Skeleton sk) {
    InverseEngine eng(tau, &sk);
    eng.fixpoint();
    return eng.snapshot();
}

Permutation phi_inverse(const Permutation& tau) {
    InverseEngine eng(tau, nullptr);
    Permutation sigma = eng.run(nullptr);
    if (phi(sigma) != tau) {
        throw invariant_error("phi_inverse: round-trip failed for " + tau.str());
    }
    return sigma;
}

Permutation phi_inverse_traced(const Permutation& tau, nlohmann::ordered_json& trace) {
    trace = nlohmann::ordered_json::object();
    trace["input"] = tau.str();
    trace["n"] = tau.size();
    auto dec = decompose(tau);
    trace["decomposition"] = {{"d", dec.d},
                              {"c", dec.c},
                              {"d2", dec.d2},
                              {"t", std::vector<int>(dec.t.begin() + 1, dec.t.end())}};
    {
        auto raw = build_skeleton(tau);
        nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
        for (const auto& a : raw.arcs) {
            arcs.push_back({{"end", a.end}, {"window", a.window}});
        }
        trace["skeleton"] = {{"boxes", raw.boxes}, {"arcs", std::move(arcs)}};
    }
    InverseEngine eng(tau, nullptr);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    Permutation sigma = eng.run(&steps);
    trace["steps"] = std::move(steps);
    if (phi(sigma) != tau) {
        throw invariant_error("phi_inverse: round-trip failed for " + tau.str());
    }
    trace["output"] = sigma.str();
    return sigma;
}

} // namespace permstat
