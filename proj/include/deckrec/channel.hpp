#pragma once

#include "deckrec/balls.hpp"
#include "deckrec/multitrace.hpp"
#include "deckrec/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace deckrec {

/// splitmix64 stream. Hand-rolled on purpose: traces must be byte-identical
/// across platforms and standard-library distributions are not pinned to
/// one algorithm.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t(0)) / bound);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    /// Independent stream for substream `index` of a master seed.
    static RandomStream derived(std::uint64_t seed, std::uint64_t index) {
        RandomStream mixer(seed ^ (index * 0xd1b54a32d192ed03ull + 0x632be59bd9b4e019ull));
        return RandomStream(mixer.next());
    }

private:
    std::uint64_t state_;
};

struct ChannelSpec {
    int deletions = 0;        // t zeros removed per trace
    int trace_count = 1;      // M
    std::uint64_t seed = 0;
    bool distinct = false;    // redraw until all M traces differ
};

/// One pass of x through the channel: a uniformly random size-t subset of
/// the zero positions is deleted.
inline BinarySequence sample_trace(const BinarySequence& x, int t, RandomStream& stream) {
    if (t < 0 || t > x.zeros())
        throw std::invalid_argument("deletion count exceeds available zeros");
    std::vector<int> zero_pos;
    zero_pos.reserve(static_cast<std::size_t>(x.zeros()));
    for (int i = 0; i < x.size(); ++i)
        if (!x.bit(i)) zero_pos.push_back(i + 1);
    // partial Fisher-Yates: first t slots become the deleted subset
    for (int i = 0; i < t; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       stream.below(zero_pos.size() - static_cast<std::size_t>(i));
        std::swap(zero_pos[static_cast<std::size_t>(i)], zero_pos[j]);
    }
    std::vector<int> picked(zero_pos.begin(), zero_pos.begin() + t);
    std::sort(picked.begin(), picked.end());
    return delete_zeros(x, DeletedPositionSet(std::move(picked)));
}

/// M traces of x, trace m drawn from the substream (seed, m) so the output
/// never depends on scheduling or worker count. With distinct=true, trace m
/// redraws within its own substream until it differs from traces 0..m-1;
/// infeasible when M exceeds |D_t(x)|.
inline TraceSet sample_traces(const BinarySequence& x, const ChannelSpec& spec) {
    if (spec.trace_count < 1)
        throw std::invalid_argument("trace count must be at least 1");
    if (spec.deletions < 0 || spec.deletions > x.zeros())
        throw std::invalid_argument("deletion count exceeds available zeros");
    if (spec.distinct && BigInt(spec.trace_count) > deletion_ball_size(x, spec.deletions))
        throw std::invalid_argument("distinct traces requested beyond deletion ball size");

    std::vector<BinarySequence> traces;
    traces.reserve(static_cast<std::size_t>(spec.trace_count));
    std::set<BinarySequence> seen;
    for (int m = 0; m < spec.trace_count; ++m) {
        auto stream = RandomStream::derived(spec.seed, static_cast<std::uint64_t>(m));
        BinarySequence tr = sample_trace(x, spec.deletions, stream);
        if (spec.distinct) {
            while (seen.count(tr)) tr = sample_trace(x, spec.deletions, stream);
            seen.insert(tr);
        }
        traces.push_back(std::move(tr));
    }
    return TraceSet(std::move(traces));
}

}  // namespace deckrec
