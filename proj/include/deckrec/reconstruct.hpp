#pragma once

#include "deckrec/bigint.hpp"
#include "deckrec/deck.hpp"
#include "deckrec/errors.hpp"
#include "deckrec/sequence.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace deckrec {

/// Position-sum checksum a = sum of 1-indexed positions of ones, mod n+1.
struct VtChecksum {
    int residue;  // in [0, modulus)
    int modulus;  // n + 1
};

inline VtChecksum vt_checksum(const BinarySequence& x) {
    const int mod = x.size() + 1;
    long long s = 0;
    for (int i = 0; i < x.size(); ++i)
        if (x.bit(i)) s += i + 1;
    return {static_cast<int>(s % mod), mod};
}

/// Recover x from a trace missing exactly one zero, given checksum(x).
/// The checksum deficit equals the number of ones to the right of the
/// deleted zero; a deficit larger than the weight means no single-zero
/// insertion can match, i.e. checksum and trace are inconsistent.
inline BinarySequence vt_decode_zero_deletion(const BinarySequence& trace, VtChecksum sum,
                                              int n) {
    if (trace.size() != n - 1)
        throw std::invalid_argument("trace must have length n - 1");
    if (sum.modulus != n + 1)
        throw std::invalid_argument("checksum modulus does not match n + 1");
    if (sum.residue < 0 || sum.residue >= sum.modulus)
        throw std::invalid_argument("checksum residue out of range");
    long long s = 0;
    for (int i = 0; i < trace.size(); ++i)
        if (trace.bit(i)) s += i + 1;
    const int wt = trace.weight();
    const int deficit =
        static_cast<int>(((sum.residue - s) % sum.modulus + sum.modulus) % sum.modulus);
    if (deficit > wt)
        throw ChecksumMismatchError("checksum admits no single-zero insertion into trace");
    // deficit ones sit to the right of the missing zero, so wt - deficit
    // ones sit to its left: the zero returns to run index (wt - deficit) + 1
    std::vector<int> runs = to_profile(trace).runs();
    runs[static_cast<std::size_t>(wt - deficit)] += 1;
    return from_profile(ZeroRunProfile(std::move(runs)));
}

/// Multiset of "ones in front of a deleted zero" values, one entry per
/// deleted zero, ascending with repetition.
class RootMultiset {
public:
    explicit RootMultiset(std::vector<int> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
        if (!values_.empty() && values_.front() < 0)
            throw std::invalid_argument("roots must be nonnegative");
    }
    int count() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int multiplicity(int r) const {
        return static_cast<int>(std::count(values_.begin(), values_.end(), r));
    }
    bool operator==(const RootMultiset&) const = default;

private:
    std::vector<int> values_;
};

/// Moment gap vector (delta_1, ..., delta_t) between a deck and a trace
/// missing t zeros: delta_j = n_{1^j 0}(deck) - n_{1^j 0}(trace). Each
/// deleted zero with r ones in front contributes C(r, j) to delta_j.
/// Validates weight agreement before touching any deck algebra.
inline std::vector<BigInt> deck_trace_moments(const Deck& d, const BinarySequence& trace,
                                              int n) {
    if (d.n() != n) throw std::invalid_argument("deck was computed for a different length");
    const int t = n - trace.size();
    if (t < 1) throw std::invalid_argument("trace must be shorter than n");
    if (d.k() < t + 1)
        throw std::invalid_argument("deck order must be at least deletions + 1");
    try {
        if (deck_weight(d) != trace.weight())
            throw ReconstructError(DecodeStage::WeightConflict,
                                   "trace weight differs from deck weight");
        std::vector<BigInt> deltas(static_cast<std::size_t>(t));
        for (int j = 1; j <= t; ++j) {
            std::vector<bool> bits(static_cast<std::size_t>(j) + 1, true);
            bits.back() = false;
            deltas[static_cast<std::size_t>(j) - 1] =
                pattern_count(d, j) - subsequence_count(trace, BinarySequence(std::move(bits)));
        }
        return deltas;
    } catch (const InconsistentDeckError& e) {
        throw ReconstructError(DecodeStage::InexactMoments, e.what());
    }
}

/// Power sums p_j = sum_i r_i^j of the hidden root multiset, from the
/// binomial moments delta_j = sum_i C(r_i, j).
inline std::vector<BigInt> moments_to_power_sums(const std::vector<BigInt>& deltas) {
    const int t = static_cast<int>(deltas.size());
    std::vector<BigInt> p(deltas.size());
    for (int j = 1; j <= t; ++j) {
        BigInt acc = 0;
        for (int m = 1; m <= j; ++m)
            acc += stirling2(j, m) * factorial(m) * deltas[static_cast<std::size_t>(m) - 1];
        p[static_cast<std::size_t>(j) - 1] = std::move(acc);
    }
    return p;
}

/// Elementary symmetric polynomials e_1..e_t from power sums p_1..p_t via
/// Newton's identities; every division by k must be exact for a genuine
/// root multiset.
inline std::vector<BigInt> newton_to_elementary(const std::vector<BigInt>& p) {
    const int t = static_cast<int>(p.size());
    std::vector<BigInt> e(static_cast<std::size_t>(t) + 1);
    e[0] = 1;
    for (int k = 1; k <= t; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            const BigInt term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i) - 1];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        if (acc % k != 0)
            throw ReconstructError(DecodeStage::InexactMoments,
                                   "Newton identity left a remainder");
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return std::vector<BigInt>(e.begin() + 1, e.end());
}

/// Integer roots of F(z) = z^t - e_1 z^(t-1) + e_2 z^(t-2) - ... counted
/// with multiplicity, by trial synthetic division over 0..max_root in
/// ascending order. F must split completely over that range.
inline RootMultiset integer_roots(const std::vector<BigInt>& e, int max_root) {
    const int t = static_cast<int>(e.size());
    std::vector<BigInt> c(static_cast<std::size_t>(t) + 1);
    c[0] = 1;
    for (int i = 1; i <= t; ++i)
        c[static_cast<std::size_t>(i)] = (i % 2 == 1) ? -e[static_cast<std::size_t>(i) - 1]
                                                      : e[static_cast<std::size_t>(i) - 1];
    std::vector<int> roots;
    for (int r = 0; r <= max_root && static_cast<int>(roots.size()) < t; ++r) {
        for (;;) {
            // synthetic division by (z - r); quotient stays monic
            std::vector<BigInt> q(c.size() - 1);
            BigInt carry = 0;
            for (std::size_t i = 0; i + 1 < c.size(); ++i) {
                carry = c[i] + carry * r;
                q[i] = carry;
            }
            const BigInt rem = c.back() + carry * r;
            if (rem != 0) break;
            roots.push_back(r);
            c = std::move(q);
            if (c.size() == 1) break;
        }
    }
    if (static_cast<int>(roots.size()) != t)
        throw ReconstructError(DecodeStage::RootFailure,
                               "deletion polynomial does not split over the run indices");
    return RootMultiset(std::move(roots));
}

/// Return each deleted zero to its run: root r goes back into run r + 1.
inline BinarySequence apply_roots(const BinarySequence& trace, const RootMultiset& roots) {
    std::vector<int> runs = to_profile(trace).runs();
    for (int r : roots.values()) {
        if (r >= static_cast<int>(runs.size()))
            throw std::invalid_argument("root exceeds trace weight");
        runs[static_cast<std::size_t>(r)] += 1;
    }
    return from_profile(ZeroRunProfile(std::move(runs)));
}

/// Full single-trace decode: deck of order k plus one trace missing
/// t = n - |trace| zeros, k >= t + 1. Errors carry the first failing stage.
inline BinarySequence reconstruct_single_trace(const BinarySequence& trace, const Deck& d,
                                               int n) {
    if (d.n() != n) throw std::invalid_argument("deck was computed for a different length");
    const int t = n - trace.size();
    if (t < 0) throw std::invalid_argument("trace longer than n");
    if (d.k() < t + 1)
        throw std::invalid_argument("deck order must be at least deletions + 1");
    if (t == 0) {
        try {
            if (deck_weight(d) != trace.weight())
                throw ReconstructError(DecodeStage::WeightConflict,
                                       "trace weight differs from deck weight");
        } catch (const InconsistentDeckError& e) {
            throw ReconstructError(DecodeStage::InexactMoments, e.what());
        }
        return trace;
    }
    const auto deltas = deck_trace_moments(d, trace, n);
    const auto p = moments_to_power_sums(deltas);
    const auto e = newton_to_elementary(p);
    const auto roots = integer_roots(e, trace.weight());
    return apply_roots(trace, roots);
}

}  // namespace deckrec
