#pragma once

#include "deckrec/errors.hpp"
#include "deckrec/reconstruct.hpp"
#include "deckrec/sequence.hpp"

#include <algorithm>
#include <vector>

namespace deckrec {

/// One or more traces of the same source word through zeros-only deletion
/// channels with a common deletion count: equal lengths, equal weights.
class TraceSet {
public:
    explicit TraceSet(std::vector<BinarySequence> traces) : traces_(std::move(traces)) {
        if (traces_.empty())
            throw IncompatibleTracesError("trace set must contain at least one trace");
        for (const auto& tr : traces_) {
            if (tr.size() != traces_.front().size())
                throw IncompatibleTracesError("traces differ in length");
            if (tr.weight() != traces_.front().weight())
                throw IncompatibleTracesError("traces differ in weight");
        }
    }

    int count() const { return static_cast<int>(traces_.size()); }
    int trace_length() const { return traces_.front().size(); }
    int weight() const { return traces_.front().weight(); }
    const std::vector<BinarySequence>& traces() const { return traces_; }

private:
    std::vector<BinarySequence> traces_;
};

/// Pointwise-max profile over the set: the shortest word containing every
/// trace as a zeros-only supersequence target, i.e. the traces pooled into
/// one better trace of the common source.
inline BinarySequence aggregate(const TraceSet& ts) {
    std::vector<int> merged = to_profile(ts.traces().front()).runs();
    for (const auto& tr : ts.traces()) {
        const auto runs = to_profile(tr).runs();
        for (std::size_t i = 0; i < merged.size(); ++i)
            merged[i] = std::max(merged[i], runs[i]);
    }
    return from_profile(ZeroRunProfile(std::move(merged)));
}

/// Smallest t0 with a common asymmetric supersequence of every trace:
/// |aggregate| - |trace|. If the source had t zeros deleted per trace, the
/// residual problem after pooling has only t0 <= t deletions left.
inline int minimal_common_supersequence_level(const TraceSet& ts) {
    return aggregate(ts).size() - ts.trace_length();
}

/// Profile Hamming distance: number of run indices where the two profiles
/// differ. Defined only for equal weights.
inline int profile_hamming(const BinarySequence& a, const BinarySequence& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("profile_hamming requires equal weights");
    const auto ar = to_profile(a).runs();
    const auto br = to_profile(b).runs();
    int d = 0;
    for (std::size_t i = 0; i < ar.size(); ++i) d += ar[i] != br[i];
    return d;
}

/// Decode from a deck plus M traces: pool the traces into the aggregate,
/// then run the single-trace pipeline on the residual deletions. Needs only
/// k >= t0 + 1 where t0 = n - |aggregate|; with t0 = 0 the aggregate IS the
/// word and an order-0 deck is acceptable.
inline BinarySequence reconstruct_multi(const TraceSet& ts, const Deck& d, int n) {
    if (d.n() != n) throw std::invalid_argument("deck was computed for a different length");
    const BinarySequence agg = aggregate(ts);
    const int t0 = n - agg.size();
    if (t0 < 0)
        throw IncompatibleTracesError("aggregate longer than n");
    if (t0 == 0 && d.k() == 0) return agg;
    return reconstruct_single_trace(agg, d, n);
}

}  // namespace deckrec
