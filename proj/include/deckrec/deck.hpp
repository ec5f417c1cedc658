#pragma once

#include "deckrec/bigint.hpp"
#include "deckrec/errors.hpp"
#include "deckrec/sequence.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace deckrec {

/// The k-deck of a length-n word: the multiset of all C(n, k) length-k
/// subsequences, stored as distinct pattern -> multiplicity.
class Deck {
public:
    using CountMap = std::map<BinarySequence, BigInt>;

    Deck(int n, int k, CountMap counts) : n_(n), k_(k), counts_(std::move(counts)) {
        if (n_ < 0 || k_ < 0 || k_ > n_)
            throw std::invalid_argument("deck requires 0 <= k <= n");
        BigInt total = 0;
        for (const auto& [pattern, count] : counts_) {
            if (pattern.size() != k_)
                throw std::invalid_argument("deck pattern length differs from k");
            if (count <= 0)
                throw InconsistentDeckError("deck multiplicities must be positive");
            total += count;
        }
        if (total != binomial(n_, k_))
            throw InconsistentDeckError("deck multiplicities do not sum to C(n, k)");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const CountMap& counts() const { return counts_; }

    /// Multiplicity of a pattern; 0 if it does not occur.
    BigInt count(const BinarySequence& pattern) const {
        auto it = counts_.find(pattern);
        return it == counts_.end() ? BigInt(0) : it->second;
    }

    bool operator==(const Deck&) const = default;

private:
    int n_, k_;
    CountMap counts_;
};

/// Number of embeddings of s in x as a subsequence (index-subset count).
inline BigInt subsequence_count(const BinarySequence& x, const BinarySequence& s) {
    const int m = s.size();
    std::vector<BigInt> dp(static_cast<std::size_t>(m) + 1, BigInt(0));
    dp[0] = 1;
    for (int i = 0; i < x.size(); ++i) {
        const bool c = x.bit(i);
        // walk prefixes longest-first so each embedding is extended once
        for (int j = std::min(m - 1, i); j >= 0; --j)
            if (s.bit(j) == c) dp[static_cast<std::size_t>(j) + 1] += dp[static_cast<std::size_t>(j)];
    }
    return dp[static_cast<std::size_t>(m)];
}

namespace detail {

/// Embedding counts of every length-k pattern of x at once, indexed by the
/// pattern's MSB-first bits (so index order == lexicographic order). One
/// shared pass over x instead of 2^k separate DPs.
inline std::vector<BigInt> count_all_patterns(const BinarySequence& x, int k) {
    std::vector<std::vector<BigInt>> level(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        level[static_cast<std::size_t>(j)].assign(std::size_t(1) << j, BigInt(0));
    level[0][0] = 1;
    for (int i = 0; i < x.size(); ++i) {
        const std::uint64_t c = x.bit(i) ? 1 : 0;
        for (int j = std::min(k - 1, i); j >= 0; --j) {
            auto& src = level[static_cast<std::size_t>(j)];
            auto& dst = level[static_cast<std::size_t>(j) + 1];
            for (std::uint64_t p = 0; p < src.size(); ++p)
                if (!src[p].is_zero()) dst[(p << 1) | c] += src[p];
        }
    }
    return std::move(level[static_cast<std::size_t>(k)]);
}

}  // namespace detail

inline Deck compute_deck(const BinarySequence& x, int k) {
    if (k < 0 || k > x.size())
        throw std::invalid_argument("compute_deck requires 0 <= k <= n");
    auto table = detail::count_all_patterns(x, k);
    Deck::CountMap counts;
    for (std::uint64_t p = 0; p < table.size(); ++p)
        if (!table[p].is_zero())
            counts.emplace(BinarySequence::from_mask(p, k), std::move(table[p]));
    return Deck(x.size(), k, std::move(counts));
}

/// Project a k-deck down to the l-deck of the same word (l <= k). Each
/// length-l pattern count is an exact multiple of C(n-l, k-l); a remainder
/// means the input was not a deck at all.
inline Deck deck_downscale(const Deck& d, int l) {
    if (l < 0 || l > d.k())
        throw std::invalid_argument("deck_downscale requires 0 <= l <= k");
    const BigInt denom = binomial(d.n() - l, d.k() - l);
    Deck::CountMap counts;
    const std::uint64_t npat = std::uint64_t(1) << l;
    for (std::uint64_t p = 0; p < npat; ++p) {
        const auto s = BinarySequence::from_mask(p, l);
        BigInt num = 0;
        for (const auto& [e, c] : d.counts()) num += c * subsequence_count(e, s);
        if (num % denom != 0)
            throw InconsistentDeckError("downscaled count is not an integer");
        if (BigInt q = num / denom; q != 0) counts.emplace(s, std::move(q));
    }
    return Deck(d.n(), l, std::move(counts));
}

/// n_{1^j 0}: occurrences of the pattern 1...10 (j ones, then a zero) in the
/// word underlying the deck, recovered exactly. Requires j <= k-1.
inline BigInt pattern_count(const Deck& d, int j) {
    if (j < 0 || j + 1 > d.k())
        throw std::invalid_argument("pattern_count requires 0 <= j <= k-1");
    std::vector<bool> bits(static_cast<std::size_t>(j) + 1, true);
    bits.back() = false;
    const BinarySequence target{std::move(bits)};
    BigInt num = 0;
    for (const auto& [e, c] : d.counts()) num += c * subsequence_count(e, target);
    const BigInt denom = binomial(d.n() - j - 1, d.k() - j - 1);
    if (num % denom != 0)
        throw InconsistentDeckError("pattern count is not an integer");
    return num / denom;
}

/// Weight of the underlying word, recovered from any deck with k >= 1.
inline BigInt deck_weight(const Deck& d) {
    if (d.k() < 1) throw std::invalid_argument("deck_weight requires k >= 1");
    BigInt num = 0;
    for (const auto& [e, c] : d.counts()) num += c * e.weight();
    const BigInt denom = binomial(d.n() - 1, d.k() - 1);
    if (num % denom != 0)
        throw InconsistentDeckError("weight recovery is not an integer");
    return num / denom;
}

/// n_i(x): length-i subsequences of x whose last symbol is a one,
/// sum over ones at positions j of C(j-1, i-1).
inline BigInt ends_with_one_count(const BinarySequence& x, int i) {
    if (i < 1 || i > x.size())
        throw std::invalid_argument("ends_with_one_count requires 1 <= i <= n");
    BigInt total = 0;
    for (int j = 0; j < x.size(); ++j)
        if (x.bit(j)) total += binomial(j, i - 1);
    return total;
}

/// Power sums s_j = sum_l l^j X_l of the zero-run profile, j = 1..j_max,
/// recovered from the deck alone. Requires j_max <= k-1. Uses
/// sum_l C(l, m) X_l = n_{1^m 0} + n_{1^(m-1) 0} and the Stirling expansion
/// of l^j in the binomial basis.
inline std::vector<BigInt> power_sums(const Deck& d, int j_max) {
    if (j_max < 1 || j_max > d.k() - 1)
        throw std::invalid_argument("power_sums requires 1 <= j_max <= k-1");
    std::vector<BigInt> pc(static_cast<std::size_t>(j_max) + 1);
    for (int m = 0; m <= j_max; ++m) pc[static_cast<std::size_t>(m)] = pattern_count(d, m);
    std::vector<BigInt> s(static_cast<std::size_t>(j_max));
    for (int j = 1; j <= j_max; ++j) {
        BigInt acc = 0;
        for (int m = 1; m <= j; ++m)
            acc += stirling2(j, m) * factorial(m) *
                   (pc[static_cast<std::size_t>(m)] + pc[static_cast<std::size_t>(m) - 1]);
        s[static_cast<std::size_t>(j) - 1] = std::move(acc);
    }
    return s;
}

/// Canonical byte string identifying the k-deck of x: two words share a
/// k-deck exactly when their fingerprints are equal. Layout: n, k, count
/// width (2 bytes each, big-endian), then the multiplicities of all 2^k
/// patterns in lexicographic order, each as a fixed-width big-endian block.
inline std::string deck_fingerprint(const BinarySequence& x, int k) {
    if (k < 0 || k > x.size())
        throw std::invalid_argument("deck_fingerprint requires 0 <= k <= n");
    auto table = detail::count_all_patterns(x, k);

    // width that fits the largest possible multiplicity, C(n, k)
    BigInt maxc = binomial(x.size(), k);
    int width = 1;
    while (maxc >>= 8) ++width;

    const auto push16 = [](std::string& out, int v) {
        out.push_back(static_cast<char>((v >> 8) & 0xff));
        out.push_back(static_cast<char>(v & 0xff));
    };
    std::string fp;
    fp.reserve(6 + table.size() * static_cast<std::size_t>(width));
    push16(fp, x.size());
    push16(fp, k);
    push16(fp, width);
    std::vector<unsigned char> bytes;
    for (const auto& c : table) {
        bytes.clear();
        if (!c.is_zero()) export_bits(c, std::back_inserter(bytes), 8);
        fp.append(static_cast<std::size_t>(width) - bytes.size(), '\0');
        fp.append(bytes.begin(), bytes.end());
    }
    return fp;
}

}  // namespace deckrec
