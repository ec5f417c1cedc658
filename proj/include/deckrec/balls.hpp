#pragma once

#include "deckrec/bigint.hpp"
#include "deckrec/parallel.hpp"
#include "deckrec/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace deckrec {

namespace detail {

/// Number of ways to write `target` as a sum over the bins, bin i capped at
/// bounds[i]. This is the whole of zero-deletion ball geometry: a deletion
/// pattern is exactly a bounded composition over the zero runs.
inline BigInt bounded_compositions(const std::vector<int>& bounds, int target) {
    if (target < 0) return 0;
    std::vector<BigInt> dp(static_cast<std::size_t>(target) + 1, BigInt(0));
    dp[0] = 1;
    for (int b : bounds) {
        std::vector<BigInt> next(dp.size(), BigInt(0));
        for (int s = 0; s <= target; ++s) {
            if (dp[static_cast<std::size_t>(s)].is_zero()) continue;
            for (int u = 0; u <= b && s + u <= target; ++u)
                next[static_cast<std::size_t>(s + u)] += dp[static_cast<std::size_t>(s)];
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(target)];
}

/// Visit every bounded composition of `target` (lexicographic in bin order).
inline void enumerate_bounded_compositions(const std::vector<int>& bounds, int target,
                                           const std::function<void(const std::vector<int>&)>& visit) {
    if (target < 0) return;
    std::vector<int> cur(bounds.size(), 0);
    std::vector<int> suffix_cap(bounds.size() + 1, 0);
    for (std::size_t i = bounds.size(); i-- > 0;)
        suffix_cap[i] = suffix_cap[i + 1] + bounds[i];
    const std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == bounds.size()) {
            if (rest == 0) visit(cur);
            return;
        }
        if (rest > suffix_cap[i]) return;
        for (int u = 0; u <= std::min(bounds[i], rest); ++u) {
            cur[i] = u;
            rec(i + 1, rest - u);
        }
        cur[i] = 0;
    };
    rec(0, target);
}

}  // namespace detail

/// |D_t(x)|: distinct words reachable by deleting exactly t zeros.
inline BigInt deletion_ball_size(const BinarySequence& x, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    return detail::bounded_compositions(to_profile(x).runs(), t);
}

/// |I_t(x)|: distinct words reachable by inserting exactly t zeros,
/// multisets of t insertions over the N runs.
inline BigInt insertion_ball_size(const BinarySequence& x, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    const int runs = x.weight() + 1;
    return binomial(runs + t - 1, t);
}

/// D_t(x) listed in lexicographic order. Unlike the counting form, asking
/// for more deletions than there are zeros is an error here, not an empty set.
inline std::vector<BinarySequence> deletion_ball(const BinarySequence& x, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    if (t > x.zeros()) throw std::invalid_argument("cannot delete more zeros than the word has");
    const auto runs = to_profile(x).runs();
    std::vector<BinarySequence> out;
    detail::enumerate_bounded_compositions(runs, t, [&](const std::vector<int>& d) {
        std::vector<int> reduced(runs.size());
        for (std::size_t i = 0; i < runs.size(); ++i) reduced[i] = runs[i] - d[i];
        out.push_back(from_profile(ZeroRunProfile(std::move(reduced))));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// I_t(x) listed in lexicographic order.
inline std::vector<BinarySequence> insertion_ball(const BinarySequence& x, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    const auto runs = to_profile(x).runs();
    std::vector<int> caps(runs.size(), t);
    std::vector<BinarySequence> out;
    detail::enumerate_bounded_compositions(caps, t, [&](const std::vector<int>& add) {
        std::vector<int> grown(runs.size());
        for (std::size_t i = 0; i < runs.size(); ++i) grown[i] = runs[i] + add[i];
        out.push_back(from_profile(ZeroRunProfile(std::move(grown))));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// |D_t(x) ∩ D_t(y)|. A common trace keeps zeros - t zeros, and run i can
/// keep at most min(X_i, Y_i) of them, so the intersection is a bounded
/// composition count on the pointwise-min profile. 0 on weight mismatch.
inline BigInt common_trace_count(const BinarySequence& x, const BinarySequence& y, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    if (x.weight() != y.weight()) return 0;
    const auto xr = to_profile(x).runs();
    const auto yr = to_profile(y).runs();
    std::vector<int> mins(xr.size());
    for (std::size_t i = 0; i < xr.size(); ++i) mins[i] = std::min(xr[i], yr[i]);
    return detail::bounded_compositions(mins, x.zeros() - t);
}

/// Whether D_t(x) ∩ D_t(y) is nonempty. Requires equal weights, a feasible
/// radius (t <= zeros), and enough shared zeros: sum min(X_i, Y_i) >= zeros - t.
inline bool common_trace_exists(const BinarySequence& x, const BinarySequence& y, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    if (x.size() != y.size()) throw std::invalid_argument("sequences must have equal length");
    if (x.weight() != y.weight()) return false;
    if (t > x.zeros() || t > y.zeros()) return false;
    const auto xr = to_profile(x).runs();
    const auto yr = to_profile(y).runs();
    int shared = 0;
    for (std::size_t i = 0; i < xr.size(); ++i) shared += std::min(xr[i], yr[i]);
    return shared >= x.zeros() - t;
}

/// Whether I_t(x) ∩ I_t(y) is nonempty: equal weights and
/// sum max(X_i, Y_i) <= zeros + t, since the pointwise max is the smallest
/// common supersequence profile.
inline bool common_supersequence_exists(const BinarySequence& x, const BinarySequence& y, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    if (x.size() != y.size()) throw std::invalid_argument("sequences must have equal length");
    if (x.weight() != y.weight()) return false;
    const auto xr = to_profile(x).runs();
    const auto yr = to_profile(y).runs();
    int merged = 0;
    for (std::size_t i = 0; i < xr.size(); ++i) merged += std::max(xr[i], yr[i]);
    return merged <= x.zeros() + t;
}

struct MaxBallReport {
    int n = 0;
    int t = 0;
    BigInt max_size;                   // largest |D_t| over all length-n words
    BigInt bound;                      // C(ceil(n/2), t)
    std::vector<BinarySequence> argmax;  // all words attaining max_size, lex order
};

inline BinarySequence alternating_word(int n) {
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (i % 2 == 1);
    return BinarySequence(std::move(bits));
}

/// Exhaustive max of |D_t| over {0,1}^n, checked against the C(ceil(n/2), t)
/// ceiling. Only valid in the regime t < n/6. Deterministic for any worker
/// count.
inline MaxBallReport max_ball_bound_check(int n, int t, int workers = 0) {
    if (n < 2 || n > 30) throw std::invalid_argument("max_ball_bound_check requires 2 <= n <= 30");
    if (t < 0 || t >= n / 6)
        throw std::invalid_argument("max_ball_bound_check requires 0 <= t < n/6");
    if (workers <= 0) workers = default_workers();

    struct Local {
        BigInt best = -1;
        std::vector<std::uint64_t> masks;
    };
    std::vector<Local> locals(static_cast<std::size_t>(workers < 1 ? 1 : workers));
    for_each_range(std::uint64_t(1) << n, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        Local& loc = locals[static_cast<std::size_t>(w)];
        for (std::uint64_t m = lo; m < hi; ++m) {
            const auto x = BinarySequence::from_mask(m, n);
            const BigInt size = deletion_ball_size(x, t);
            if (size > loc.best) {
                loc.best = size;
                loc.masks.assign(1, m);
            } else if (size == loc.best) {
                loc.masks.push_back(m);
            }
        }
    });

    MaxBallReport report;
    report.n = n;
    report.t = t;
    report.bound = binomial((n + 1) / 2, t);
    for (const auto& loc : locals) {
        if (loc.best > report.max_size) report.max_size = loc.best;
    }
    for (const auto& loc : locals)
        if (loc.best == report.max_size)
            for (std::uint64_t m : loc.masks)
                report.argmax.push_back(BinarySequence::from_mask(m, n));
    if (report.max_size > report.bound)
        throw std::logic_error("max deletion ball exceeds the C(ceil(n/2), t) ceiling");
    return report;
}

}  // namespace deckrec
