#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deckrec {

/// A finite word over {0,1}. Plain value type; every operation in the
/// library leaves its inputs untouched and returns fresh values.
class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Parse from ASCII '0'/'1' text, e.g. "0110". Empty text is the empty word.
    static BinarySequence parse(std::string_view text) {
        std::vector<bool> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("sequence text must consist of '0' and '1'");
            bits.push_back(c == '1');
        }
        return BinarySequence(std::move(bits));
    }

    /// Unpack n symbols from a mask, MSB-first: symbol i is bit (n-1-i), so
    /// numeric order of masks equals lexicographic order of words. n <= 64.
    static BinarySequence from_mask(std::uint64_t mask, int n) {
        if (n < 0 || n > 64) throw std::invalid_argument("from_mask: n out of range");
        std::vector<bool> bits(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
        return BinarySequence(std::move(bits));
    }

    int size() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }
    /// Symbol at 0-based index i.
    bool bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }
    const std::vector<bool>& bits() const { return bits_; }

    int weight() const {
        return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
    }
    int zeros() const { return size() - weight(); }

    std::uint64_t to_mask() const {
        if (size() > 64) throw std::invalid_argument("to_mask: sequence longer than 64");
        std::uint64_t m = 0;
        for (bool b : bits_) m = (m << 1) | (b ? 1u : 0u);
        return m;
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    BinarySequence concat(const BinarySequence& tail) const {
        std::vector<bool> bits = bits_;
        bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
        return BinarySequence(std::move(bits));
    }

    bool operator==(const BinarySequence&) const = default;
    auto operator<=>(const BinarySequence& o) const {
        return std::lexicographical_compare_three_way(
            bits_.begin(), bits_.end(), o.bits_.begin(), o.bits_.end());
    }

private:
    std::vector<bool> bits_;
};

/// Zero-run profile X = (X_1, ..., X_N) of a word: X_i is the number of
/// zeros between the (i-1)-th and i-th one, counting virtual ones at both
/// ends, so N = weight + 1 and sum(X) = number of zeros. The map between
/// words and profiles is a bijection; every zero-deletion or insertion is
/// componentwise arithmetic here.
class ZeroRunProfile {
public:
    explicit ZeroRunProfile(std::vector<int> runs) : runs_(std::move(runs)) {
        if (runs_.empty())
            throw std::invalid_argument("profile needs at least one run");
        for (int r : runs_)
            if (r < 0) throw std::invalid_argument("profile runs must be nonnegative");
    }

    /// Number of runs N (= weight of the word + 1).
    int size() const { return static_cast<int>(runs_.size()); }
    /// X_i, 1-indexed to match the usual notation.
    int run(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("profile run index");
        return runs_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<int>& runs() const { return runs_; }
    int total_zeros() const { return std::accumulate(runs_.begin(), runs_.end(), 0); }

    bool operator==(const ZeroRunProfile&) const = default;

private:
    std::vector<int> runs_;
};

inline ZeroRunProfile to_profile(const BinarySequence& x) {
    std::vector<int> runs;
    runs.reserve(static_cast<std::size_t>(x.weight()) + 1);
    int zeros = 0;
    for (int i = 0; i < x.size(); ++i) {
        if (x.bit(i)) {
            runs.push_back(zeros);
            zeros = 0;
        } else {
            ++zeros;
        }
    }
    runs.push_back(zeros);
    return ZeroRunProfile(std::move(runs));
}

inline BinarySequence from_profile(const ZeroRunProfile& p) {
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(p.total_zeros() + p.size() - 1));
    const auto& runs = p.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        bits.insert(bits.end(), static_cast<std::size_t>(runs[i]), false);
        if (i + 1 < runs.size()) bits.push_back(true);
    }
    return BinarySequence(std::move(bits));
}

/// Number of ones strictly before position i (positions 1-indexed).
inline int ones_before(const BinarySequence& x, int i) {
    if (i < 1 || i > x.size()) throw std::out_of_range("ones_before: position out of range");
    int r = 0;
    for (int j = 0; j < i - 1; ++j) r += x.bit(j) ? 1 : 0;
    return r;
}

/// Strictly increasing 1-indexed positions, all of which must hold zeros in
/// the word they are applied to.
class DeletedPositionSet {
public:
    DeletedPositionSet() = default;
    explicit DeletedPositionSet(std::vector<int> positions) : positions_(std::move(positions)) {
        for (std::size_t i = 0; i + 1 < positions_.size(); ++i)
            if (positions_[i] >= positions_[i + 1])
                throw std::invalid_argument("deleted positions must be strictly increasing");
        if (!positions_.empty() && positions_.front() < 1)
            throw std::invalid_argument("deleted positions are 1-indexed");
    }
    int count() const { return static_cast<int>(positions_.size()); }
    const std::vector<int>& positions() const { return positions_; }

private:
    std::vector<int> positions_;
};

inline BinarySequence delete_zeros(const BinarySequence& x, const DeletedPositionSet& del) {
    const auto& pos = del.positions();
    if (!pos.empty() && pos.back() > x.size())
        throw std::invalid_argument("deleted position past end of sequence");
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(x.size() - del.count()));
    std::size_t next = 0;
    for (int i = 0; i < x.size(); ++i) {
        if (next < pos.size() && pos[next] == i + 1) {
            if (x.bit(i))
                throw std::invalid_argument("deleted position holds a one");
            ++next;
            continue;
        }
        bits.push_back(x.bit(i));
    }
    return BinarySequence(std::move(bits));
}

}  // namespace deckrec
