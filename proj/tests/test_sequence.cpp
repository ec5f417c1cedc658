#include "deckrec/sequence.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace deckrec;

TEST_CASE("parse accepts only 0 and 1", "[sequence]") {
    CHECK(BinarySequence::parse("0110").str() == "0110");
    CHECK(BinarySequence::parse("").size() == 0);
    CHECK_THROWS_AS(BinarySequence::parse("01a0"), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence::parse("0 1"), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence::parse("2"), std::invalid_argument);
}

TEST_CASE("size, weight, zeros, bits", "[sequence]") {
    const auto x = BinarySequence::parse("10110010");
    CHECK(x.size() == 8);
    CHECK(x.weight() == 4);
    CHECK(x.zeros() == 4);
    CHECK(x.bit(0));
    CHECK_FALSE(x.bit(1));
    CHECK(x.concat(BinarySequence::parse("01")).str() == "1011001001");
}

TEST_CASE("mask encoding is order preserving", "[sequence]") {
    const int n = 6;
    std::vector<BinarySequence> words;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
        words.push_back(BinarySequence::from_mask(m, n));
        CHECK(words.back().to_mask() == m);
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("zero-run profile worked examples", "[sequence]") {
    CHECK(to_profile(BinarySequence::parse("0110")).runs() == std::vector<int>({1, 0, 1}));
    CHECK(to_profile(BinarySequence::parse("10110010")).runs() ==
          std::vector<int>({0, 1, 0, 2, 1}));
    CHECK(from_profile(ZeroRunProfile({2, 0, 1, 0})).str() == "001101");
    CHECK(to_profile(BinarySequence::parse("")).runs() == std::vector<int>({0}));
    CHECK(to_profile(BinarySequence::parse("111")).runs() == std::vector<int>({0, 0, 0, 0}));
}

TEST_CASE("profile rejects bad input", "[sequence]") {
    CHECK_THROWS_AS(ZeroRunProfile({}), std::invalid_argument);
    CHECK_THROWS_AS(ZeroRunProfile({1, -1}), std::invalid_argument);
    const ZeroRunProfile p({1, 0, 1});
    CHECK(p.run(1) == 1);
    CHECK(p.run(3) == 1);
    CHECK_THROWS_AS(p.run(0), std::out_of_range);
    CHECK_THROWS_AS(p.run(4), std::out_of_range);
}

TEST_CASE("profile round trip over every word up to length 16", "[sequence]") {
    for (int n = 0; n <= 16; ++n) {
        int bad = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
            const auto x = BinarySequence::from_mask(m, n);
            const auto p = to_profile(x);
            if (p.size() != x.weight() + 1 || p.total_zeros() != x.zeros() ||
                from_profile(p) != x)
                ++bad;
        }
        REQUIRE(bad == 0);
    }
}

TEST_CASE("ones_before counts strictly earlier positions", "[sequence]") {
    const auto x = BinarySequence::parse("00010");
    CHECK(ones_before(x, 2) == 0);
    CHECK(ones_before(x, 5) == 1);
    CHECK(ones_before(x, 1) == 0);
    CHECK_THROWS_AS(ones_before(x, 0), std::out_of_range);
    CHECK_THROWS_AS(ones_before(x, 6), std::out_of_range);
}

TEST_CASE("delete_zeros removes exactly the named positions", "[sequence]") {
    const auto x = BinarySequence::parse("00010");
    CHECK(delete_zeros(x, DeletedPositionSet({1, 3})).str() == "010");
    CHECK(delete_zeros(x, DeletedPositionSet(std::vector<int>{})).str() == "00010");
    CHECK_THROWS_AS(delete_zeros(x, DeletedPositionSet({4})), std::invalid_argument);
    CHECK_THROWS_AS(delete_zeros(x, DeletedPositionSet({6})), std::invalid_argument);
    CHECK_THROWS_AS(DeletedPositionSet({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DeletedPositionSet({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DeletedPositionSet({2, 2}), std::invalid_argument);
}
