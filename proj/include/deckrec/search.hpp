#pragma once

#include "deckrec/balls.hpp"
#include "deckrec/bigint.hpp"
#include "deckrec/deck.hpp"
#include "deckrec/errors.hpp"
#include "deckrec/parallel.hpp"
#include "deckrec/sequence.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace deckrec {

struct SearchOptions {
    int workers = 0;          // 0 = all available
    bool override_cap = false;
};

inline constexpr int kMaxNSingleTrace = 16;  // exhaustive f(n, t) refusal point
inline constexpr int kMaxNMultiTrace = 14;   // exhaustive f(n, t, M) refusal point

/// Rough peak bytes for the exhaustive scan at length n: one fingerprint
/// and one bucket slot per word, sized at the widest deck order.
inline std::uint64_t search_memory_estimate(int n) {
    const int k = n / 2 + 1;
    BigInt maxc = binomial(n, k);
    std::uint64_t width = 1;
    while (maxc >>= 8) ++width;
    const std::uint64_t per_word = 6 + (std::uint64_t(1) << k) * width + 96;
    return (std::uint64_t(1) << n) * per_word;
}

/// Two distinct words with equal k-deck and at least M common t-deletion
/// traces; shared_traces = |D_t(x) ∩ D_t(y)| exactly.
struct ConfusablePair {
    BinarySequence x, y;
    BigInt shared_traces;
};

/// Result of an exhaustive minimal-deck-order search.
struct BoundCertificate {
    int n = 0;
    int t = 0;
    std::int64_t m = 1;                     // required common-trace count
    int k = 0;                              // minimal sufficient deck order
    std::optional<ConfusablePair> witness;  // lex-min obstruction at order k-1
    bool exhaustive = false;
};

namespace detail {

/// All words of length n grouped by k-deck, keyed by weight plus the
/// canonical fingerprint; bucket members in ascending (= lexicographic)
/// order. The weight prefix splits the one giant k=0 bucket for free, and
/// costs nothing at k >= 1 where the deck already determines the weight.
inline std::map<std::string, std::vector<std::uint64_t>> deck_buckets(int n, int k, int workers) {
    std::vector<std::unordered_map<std::string, std::vector<std::uint64_t>>> locals(
        static_cast<std::size_t>(workers < 1 ? 1 : workers));
    for_each_range(std::uint64_t(1) << n, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& mine = locals[static_cast<std::size_t>(w)];
        for (std::uint64_t m = lo; m < hi; ++m) {
            const auto x = BinarySequence::from_mask(m, n);
            std::string key;
            key.push_back(static_cast<char>(x.weight()));
            key += deck_fingerprint(x, k);
            mine[std::move(key)].push_back(m);
        }
    });
    std::map<std::string, std::vector<std::uint64_t>> buckets;
    // worker ranges are ascending, so appending in worker order keeps
    // every bucket sorted by mask
    for (auto& mine : locals)
        for (auto& [key, members] : mine) {
            auto& dst = buckets[key];
            dst.insert(dst.end(), members.begin(), members.end());
        }
    for (auto& [key, members] : buckets) std::sort(members.begin(), members.end());
    return buckets;
}

inline bool pair_qualifies(const BinarySequence& x, const BinarySequence& y, int t,
                           std::int64_t m) {
    if (m == 1) return common_trace_exists(x, y, t);
    return common_trace_count(x, y, t) >= m;
}

/// Lexicographically smallest qualifying pair over all buckets, or nothing.
/// Within a bucket the (i, j) scan order makes the first hit the bucket
/// minimum; the global minimum over buckets is order-independent, so the
/// result is identical for every worker count.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> lexmin_confusable(
    const std::map<std::string, std::vector<std::uint64_t>>& buckets, int n, int t,
    std::int64_t m, int workers) {
    std::vector<const std::vector<std::uint64_t>*> work;
    for (const auto& [key, members] : buckets)
        if (members.size() >= 2) work.push_back(&members);

    using Pair = std::pair<std::uint64_t, std::uint64_t>;
    std::vector<std::optional<Pair>> found(static_cast<std::size_t>(workers < 1 ? 1 : workers));
    for_each_range(work.size(), workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        std::optional<Pair> best;
        for (std::uint64_t b = lo; b < hi; ++b) {
            const auto& members = *work[b];
            std::vector<BinarySequence> seqs;
            seqs.reserve(members.size());
            for (std::uint64_t mask : members) seqs.push_back(BinarySequence::from_mask(mask, n));
            [&] {
                for (std::size_t i = 0; i < seqs.size(); ++i)
                    for (std::size_t j = i + 1; j < seqs.size(); ++j)
                        if (pair_qualifies(seqs[i], seqs[j], t, m)) {
                            const Pair hit{members[i], members[j]};
                            if (!best || hit < *best) best = hit;
                            return;
                        }
            }();
        }
        found[static_cast<std::size_t>(w)] = best;
    });
    std::optional<Pair> best;
    for (const auto& f : found)
        if (f && (!best || *f < *best)) best = f;
    return best;
}

}  // namespace detail

/// Every pair of distinct length-n words with equal k-deck and at least m
/// common t-deletion traces, sorted by (x, y).
inline std::vector<ConfusablePair> confusable_pairs(int n, int t, int k, std::int64_t m,
                                                    SearchOptions opts = {}) {
    if (n < 1 || n > 62) throw std::invalid_argument("confusable_pairs requires 1 <= n <= 62");
    if (t < 0 || k < 0 || k > n || m < 1)
        throw std::invalid_argument("confusable_pairs: bad radius, order, or count");
    if (n > kMaxNSingleTrace && !opts.override_cap)
        throw ResourceCapError("confusable_pairs refuses n > 16 without an explicit override");
    const int workers = opts.workers > 0 ? opts.workers : default_workers();

    const auto buckets = detail::deck_buckets(n, k, workers);
    std::vector<const std::vector<std::uint64_t>*> work;
    for (const auto& [key, members] : buckets)
        if (members.size() >= 2) work.push_back(&members);

    std::vector<std::vector<ConfusablePair>> locals(
        static_cast<std::size_t>(workers < 1 ? 1 : workers));
    for_each_range(work.size(), workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& mine = locals[static_cast<std::size_t>(w)];
        for (std::uint64_t b = lo; b < hi; ++b) {
            const auto& members = *work[b];
            std::vector<BinarySequence> seqs;
            seqs.reserve(members.size());
            for (std::uint64_t mask : members) seqs.push_back(BinarySequence::from_mask(mask, n));
            for (std::size_t i = 0; i < seqs.size(); ++i)
                for (std::size_t j = i + 1; j < seqs.size(); ++j) {
                    BigInt shared = common_trace_count(seqs[i], seqs[j], t);
                    if (shared >= m)
                        mine.push_back({seqs[i], seqs[j], std::move(shared)});
                }
        }
    });
    std::vector<ConfusablePair> out;
    for (auto& mine : locals)
        for (auto& p : mine) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const ConfusablePair& a, const ConfusablePair& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    return out;
}

namespace detail {

inline BoundCertificate minimal_deck_order(int n, int t, std::int64_t m, int cap,
                                           SearchOptions opts) {
    if (n < 1 || n > 62) throw std::invalid_argument("search requires 1 <= n <= 62");
    if (t < 0 || t > n) throw std::invalid_argument("search requires 0 <= t <= n");
    if (m < 1) throw std::invalid_argument("search requires m >= 1");
    if (n > cap && !opts.override_cap)
        throw ResourceCapError("exhaustive search refuses n > " + std::to_string(cap) +
                               " without an explicit override");
    const int workers = opts.workers > 0 ? opts.workers : default_workers();

    BoundCertificate cert;
    cert.n = n;
    cert.t = t;
    cert.m = m;
    cert.exhaustive = true;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> prev;
    for (int k = 0; k <= n; ++k) {
        const auto buckets = deck_buckets(n, k, workers);
        const auto hit = lexmin_confusable(buckets, n, t, m, workers);
        if (!hit) {
            cert.k = k;
            if (prev) {
                const auto x = BinarySequence::from_mask(prev->first, n);
                const auto y = BinarySequence::from_mask(prev->second, n);
                cert.witness = ConfusablePair{x, y, common_trace_count(x, y, t)};
            }
            return cert;
        }
        prev = hit;
    }
    // unreachable: the n-deck is the word itself, so order n never collides
    throw std::logic_error("minimal deck order exceeded n");
}

}  // namespace detail

/// Smallest k such that the k-deck plus one t-deletion trace identifies
/// every length-n word, by exhaustive scan. Witness: the lex-min pair still
/// confusable at order k-1.
inline BoundCertificate f_nt(int n, int t, SearchOptions opts = {}) {
    return detail::minimal_deck_order(n, t, 1, kMaxNSingleTrace, opts);
}

/// Smallest k such that the k-deck plus M distinct t-deletion traces
/// identify every length-n word.
inline BoundCertificate f_ntM(int n, int t, std::int64_t m, SearchOptions opts = {}) {
    return detail::minimal_deck_order(n, t, m, kMaxNMultiTrace, opts);
}

struct BoundaryValue {
    std::int64_t value;
    // set when the float sits within 2^-20 of an integer: both roundings
    // are reported instead of silently trusting the last bit
    std::optional<std::int64_t> alternate;
};

struct MBounds {
    BoundaryValue lower;  // largest length known insufficient
    BoundaryValue upper;  // smallest length known sufficient
};

/// Length window for hiding M confusable candidates behind t deletions:
/// lower = floor(log2(M)/log2(n) + (n-t)), upper = ceil(log2(M)/(log2(n-t+1)-1) + (n-t)).
/// M = 1 collapses both to n - t.
inline MBounds m_bounds(int n, int t, std::int64_t m) {
    if (n < 2 || t < 1 || t >= n) throw std::invalid_argument("m_bounds requires 2 <= n, 1 <= t < n");
    if (m < 1) throw std::invalid_argument("m_bounds requires m >= 1");
    if (m == 1) return {{n - t, std::nullopt}, {n - t, std::nullopt}};

    constexpr long double eps = 1.0L / (1 << 20);
    const long double lg_m = std::log2(static_cast<long double>(m));

    const long double v = lg_m / std::log2(static_cast<long double>(n)) + (n - t);
    BoundaryValue lower;
    if (const long double z = std::round(v); std::fabs(v - z) < eps) {
        lower.value = static_cast<std::int64_t>(z);
        lower.alternate = lower.value - 1;
    } else {
        lower.value = static_cast<std::int64_t>(std::floor(v));
    }

    const long double den = std::log2(static_cast<long double>(n - t + 1)) - 1.0L;
    if (den <= 0)
        throw std::domain_error("m_bounds upper bound degenerates for n - t <= 1");
    const long double u = lg_m / den + (n - t);
    BoundaryValue upper;
    if (const long double z = std::round(u); std::fabs(u - z) < eps) {
        upper.value = static_cast<std::int64_t>(z);
        upper.alternate = upper.value + 1;
    } else {
        upper.value = static_cast<std::int64_t>(std::ceil(u));
    }
    return {lower, upper};
}

/// A confusable pair with a designated shared trace.
struct DoublingPair {
    BinarySequence x, y, shared;
};

/// Concatenation step: from (x, y) sharing a deck and a common trace to
/// (xy, yx) sharing the next deck order with shared·shared as a common
/// trace at twice the radius.
inline DoublingPair doubling_witness(const BinarySequence& x, const BinarySequence& y,
                                     const BinarySequence& shared) {
    if (x.size() != y.size()) throw std::invalid_argument("doubling requires equal lengths");
    if (x == y) throw std::invalid_argument("doubling requires distinct words");
    if (x.weight() != y.weight() || shared.weight() != x.weight())
        throw std::invalid_argument("doubling requires equal weights");
    const auto sr = to_profile(shared).runs();
    for (const auto* seq : {&x, &y}) {
        const auto runs = to_profile(*seq).runs();
        for (std::size_t i = 0; i < runs.size(); ++i)
            if (sr[i] > runs[i])
                throw std::invalid_argument("shared word is not a zeros-only trace of both inputs");
    }
    return {x.concat(y), y.concat(x), shared.concat(shared)};
}

/// Level s of the doubling chain seeded with ((01), (10), (1)): a pair of
/// length-2^s words with equal s-deck and a common trace at radius 2^(s-1).
inline DoublingPair morse_thue_witness(int level) {
    if (level < 1 || level > 16)
        throw std::invalid_argument("morse_thue_witness requires 1 <= level <= 16");
    DoublingPair w{BinarySequence::parse("01"), BinarySequence::parse("10"),
                   BinarySequence::parse("1")};
    for (int s = 1; s < level; ++s) w = doubling_witness(w.x, w.y, w.shared);
    return w;
}

struct MultitraceWitness {
    BinarySequence x, y;
    std::vector<BinarySequence> traces;
};

enum class TailParity { Even, Odd };

/// Append an alternating tail to a confusable pair and emit one trace per
/// deletable tail-zero run: z followed by the tail with that zero removed,
/// ascending by run index. Even tail (01)^m yields m traces; odd tail of
/// length 2m+1 yields m+1. Every trace lies in the t-deletion balls of both
/// outputs for t = |x'|/2 + 1.
inline MultitraceWitness multitrace_witness(const BinarySequence& xp, const BinarySequence& yp,
                                            const BinarySequence& z, int m, TailParity parity) {
    if (xp.size() != yp.size() || xp.size() % 2 != 0)
        throw std::invalid_argument("multitrace witness requires equal even-length inputs");
    if (xp == yp) throw std::invalid_argument("multitrace witness requires distinct words");
    if (xp.weight() != yp.weight() || z.weight() != xp.weight())
        throw std::invalid_argument("multitrace witness requires equal weights");
    if (z.size() * 2 != xp.size())
        throw std::invalid_argument("shared trace must have half the input length");
    if (m < 1) throw std::invalid_argument("multitrace witness requires m >= 1");
    const auto zr = to_profile(z).runs();
    for (const auto* seq : {&xp, &yp}) {
        const auto runs = to_profile(*seq).runs();
        for (std::size_t i = 0; i < runs.size(); ++i)
            if (zr[i] > runs[i])
                throw std::invalid_argument("shared word is not a zeros-only trace of both inputs");
    }

    const int tail_len = parity == TailParity::Even ? 2 * m : 2 * m + 1;
    std::vector<bool> tail_bits(static_cast<std::size_t>(tail_len));
    for (int i = 0; i < tail_len; ++i) tail_bits[static_cast<std::size_t>(i)] = (i % 2 == 1);
    const BinarySequence tail{std::move(tail_bits)};

    MultitraceWitness out;
    out.x = xp.concat(tail);
    out.y = yp.concat(tail);
    const auto tail_runs = to_profile(tail).runs();
    for (std::size_t i = 0; i < tail_runs.size(); ++i) {
        if (tail_runs[i] == 0) continue;
        std::vector<int> reduced = tail_runs;
        reduced[i] -= 1;
        out.traces.push_back(z.concat(from_profile(ZeroRunProfile(std::move(reduced)))));
    }
    return out;
}

}  // namespace deckrec
