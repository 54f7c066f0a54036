// Greedy block-by-block consumption of 2-inversion chains.

#include "block_chains.hpp"

#include <string>

#include "permstat/errors.hpp"
#include "permstat/statistics.hpp"

namespace permstat::detail {

std::vector<int> block_bounds(const Permutation& p) {
    auto d2 = two_descent_set(p);
    std::vector<int> bounds;
    bounds.reserve(d2.size() + 2);
    bounds.push_back(0);
    bounds.insert(bounds.end(), d2.begin(), d2.end());
    bounds.push_back(p.size());
    return bounds;
}

std::vector<int> window_tops(const Permutation& p) {
    auto d2 = two_descent_set(p);
    const int r = static_cast<int>(d2.size());
    std::vector<int> t(r + 1, 0);
    for (int k = 1; k <= r; ++k) {
        int l = k;
        while (l > 1 && d2[l - 2] == d2[l - 1] - 1) --l;
        t[k] = d2[l - 1];
    }
    return t;
}

std::vector<int> greedy_block_capacities(const Permutation& p) {
    const int n = p.size();
    const auto d2 = two_descent_set(p);
    const int r = static_cast<int>(d2.size());

    std::vector<int> t(r + 1, 0);
    for (int k = 1; k <= r; ++k) {
        int l = k;
        while (l > 1 && d2[l - 2] == d2[l - 1] - 1) --l;
        t[k] = d2[l - 1];
    }

    // Pool of pending 2-inversions as start -> target links; the start
    // determines the whole pair, so one slot per position is enough.
    std::vector<int> target_of(n + 1, 0);
    int pending = 0;
    for (auto [i, j] : two_inversion_set(p)) {
        target_of[i] = j;
        ++pending;
    }

    // Number of pool links reachable from b by repeatedly following
    // start -> target while the target itself starts a pooled inversion.
    auto chain_length = [&](int b) {
        int len = 0;
        for (int x = b; target_of[x] != 0; x = target_of[x]) ++len;
        return len;
    };

    std::vector<int> c0(r + 1, 0);
    std::vector<int> starts;
    std::vector<int> best;
    std::vector<int> cur;
    for (int k = r; k >= 0 && pending > 0; --k) {
        starts.clear();
        for (int i = 1; i <= n; ++i) {
            if (target_of[i] != 0) starts.push_back(i);
        }

        // Enumerate every position- and value-increasing sequence of starts
        // whose first element clears t_k; keep the longest by total chain
        // length, breaking ties on the greater position tuple.
        best.clear();
        cur.clear();
        int best_len = 0;
        auto extend = [&](auto&& self, size_t from, int last_val, int len) -> void {
            if (len > best_len || (len == best_len && cur > best)) {
                best = cur;
                best_len = len;
            }
            for (size_t x = from; x < starts.size(); ++x) {
                const int b = starts[x];
                if (cur.empty() && b < t[k]) continue;
                if (!cur.empty() && p(b) <= last_val) continue;
                cur.push_back(b);
                self(self, x + 1, p(b), len + chain_length(b));
                cur.pop_back();
            }
        };
        extend(extend, 0, 0, 0);

        c0[k] = best_len;
        for (int b : best) {
            while (target_of[b] != 0) {
                const int next = target_of[b];
                target_of[b] = 0;
                --pending;
                b = next;
            }
        }
    }
    if (pending > 0) {
        throw invariant_error("greedy_block_capacities: " + std::to_string(pending) +
                              " 2-inversions left after the block scan");
    }
    return c0;
}

} // namespace permstat::detail
