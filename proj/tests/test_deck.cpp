#include "deckrec/deck.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace deckrec;

TEST_CASE("subsequence_count worked examples", "[deck]") {
    const auto x = BinarySequence::parse("1110");
    CHECK(subsequence_count(x, BinarySequence::parse("10")) == 3);
    CHECK(subsequence_count(x, BinarySequence::parse("11")) == 3);
    CHECK(subsequence_count(x, BinarySequence::parse("")) == 1);
    CHECK(subsequence_count(x, BinarySequence::parse("01")) == 0);
    CHECK(subsequence_count(BinarySequence::parse("10110010"), BinarySequence::parse("10")) == 11);
}

TEST_CASE("subsequence_count matches enumeration", "[deck]") {
    for (std::uint64_t xm = 0; xm < (1u << 9); xm += 7) {
        const auto x = BinarySequence::from_mask(xm, 9);
        for (std::uint64_t pm = 0; pm < (1u << 3); ++pm) {
            const auto p = BinarySequence::from_mask(pm, 3);
            REQUIRE(subsequence_count(x, p) == oracle::brute_subsequence_count(x, p));
        }
    }
}

TEST_CASE("compute_deck worked examples", "[deck]") {
    const auto d = compute_deck(BinarySequence::parse("1110"), 2);
    CHECK(d.count(BinarySequence::parse("11")) == 3);
    CHECK(d.count(BinarySequence::parse("10")) == 3);
    CHECK(d.count(BinarySequence::parse("01")) == 0);
    CHECK(d.count(BinarySequence::parse("00")) == 0);

    const auto d0 = compute_deck(BinarySequence::parse("0110"), 0);
    CHECK(d0.count(BinarySequence::parse("")) == 1);

    const auto d1 = compute_deck(BinarySequence::parse("01"), 1);
    CHECK(d1.count(BinarySequence::parse("0")) == 1);
    CHECK(d1.count(BinarySequence::parse("1")) == 1);

    CHECK_THROWS_AS(compute_deck(BinarySequence::parse("01"), 3), std::invalid_argument);
}

TEST_CASE("compute_deck matches enumeration", "[deck]") {
    for (std::uint64_t xm = 0; xm < (1u << 8); xm += 5) {
        const auto x = BinarySequence::from_mask(xm, 8);
        for (int k : {0, 1, 2, 3, 5}) {
            const auto d = compute_deck(x, k);
            const auto truth = oracle::brute_deck(x, k);
            BigInt total = 0;
            for (const auto& [pattern, count] : truth) {
                REQUIRE(d.count(BinarySequence::parse(pattern)) == count);
                total += count;
            }
            REQUIRE(total == binomial(8, k));
        }
    }
}

TEST_CASE("deck totals equal C(n,k)", "[deck]") {
    for (int n : {11, 13, 14}) {
        for (std::uint64_t xm = 1; xm < (std::uint64_t(1) << n); xm += 997) {
            const auto x = BinarySequence::from_mask(xm, n);
            for (int k : {2, n / 2, n - 1}) {
                const auto d = compute_deck(x, k);
                BigInt total = 0;
                for (const auto& [pattern, count] : d.counts()) total += count;
                REQUIRE(total == binomial(n, k));
            }
        }
    }
}

TEST_CASE("deck constructor rejects malformed input", "[deck]") {
    using Counts = Deck::CountMap;
    CHECK_THROWS_AS(Deck(4, 5, Counts{}), std::invalid_argument);
    CHECK_THROWS_AS(Deck(4, -1, Counts{}), std::invalid_argument);
    // pattern length disagrees with k
    CHECK_THROWS_AS(Deck(4, 2, Counts{{BinarySequence::parse("110"), BigInt(6)}}),
                    std::invalid_argument);
    // total must be C(4,2) = 6
    CHECK_THROWS_AS(Deck(4, 2, Counts{{BinarySequence::parse("11"), BigInt(5)}}),
                    InconsistentDeckError);
    CHECK_THROWS_AS(Deck(4, 2,
                         Counts{{BinarySequence::parse("11"), BigInt(7)},
                                {BinarySequence::parse("10"), BigInt(-1)}}),
                    InconsistentDeckError);
    CHECK_NOTHROW(Deck(4, 2, Counts{{BinarySequence::parse("11"), BigInt(6)}}));
}

TEST_CASE("deck_downscale reproduces the smaller deck", "[deck]") {
    const auto x = BinarySequence::parse("1110");
    const auto down = deck_downscale(compute_deck(x, 2), 1);
    CHECK(down.count(BinarySequence::parse("1")) == 3);
    CHECK(down.count(BinarySequence::parse("0")) == 1);

    const auto y = BinarySequence::parse("01101001");
    CHECK(deck_downscale(compute_deck(y, 3), 2).counts() == compute_deck(y, 2).counts());

    for (std::uint64_t xm = 0; xm < (1u << 10); xm += 41) {
        const auto w = BinarySequence::from_mask(xm, 10);
        for (int k : {3, 6}) {
            const auto d = compute_deck(w, k);
            for (int l = 0; l <= k; ++l)
                REQUIRE(deck_downscale(d, l).counts() == compute_deck(w, l).counts());
        }
    }
}

TEST_CASE("deck_downscale flags corrupted decks", "[deck]") {
    // swap two counts so the totals still match but the content is wrong
    auto counts = compute_deck(BinarySequence::parse("0110"), 2).counts();
    std::swap(counts[BinarySequence::parse("01")], counts[BinarySequence::parse("00")]);
    const Deck bad(4, 2, counts);
    CHECK_THROWS_AS(deck_downscale(bad, 1), InconsistentDeckError);
}

TEST_CASE("pattern_count recovers ones-prefix statistics", "[deck]") {
    CHECK(pattern_count(compute_deck(BinarySequence::parse("1110"), 2), 1) == 3);
    CHECK(pattern_count(compute_deck(BinarySequence::parse("10110010"), 2), 1) == 11);
    CHECK(pattern_count(compute_deck(BinarySequence::parse("1111"), 3), 2) == 0);

    // closed form over the zero-run profile
    for (std::uint64_t xm = 0; xm < (1u << 12); xm += 131) {
        const auto x = BinarySequence::from_mask(xm, 12);
        const auto runs = to_profile(x).runs();
        const auto d = compute_deck(x, 4);
        for (int j = 0; j <= 3; ++j) {
            BigInt direct = 0;
            for (std::size_t l = 1; l <= runs.size(); ++l)
                direct += binomial(static_cast<int>(l) - 1, j) * runs[l - 1];
            REQUIRE(pattern_count(d, j) == direct);
        }
    }
    CHECK_THROWS_AS(pattern_count(compute_deck(BinarySequence::parse("0110"), 2), 2),
                    std::invalid_argument);
}

TEST_CASE("deck_weight reads the weight out of any deck", "[deck]") {
    for (std::uint64_t xm = 0; xm < (1u << 10); xm += 17) {
        const auto x = BinarySequence::from_mask(xm, 10);
        for (int k : {1, 4, 10}) REQUIRE(deck_weight(compute_deck(x, k)) == x.weight());
    }
    CHECK_THROWS_AS(deck_weight(compute_deck(BinarySequence::parse("0110"), 0)),
                    std::invalid_argument);
}

TEST_CASE("ends_with_one_count follows the binomial identity", "[deck]") {
    const auto x = BinarySequence::parse("1110");
    CHECK(ends_with_one_count(x, 1) == 3);
    CHECK(ends_with_one_count(x, 2) == 3);
    CHECK(ends_with_one_count(BinarySequence::parse("0000"), 2) == 0);
    CHECK_THROWS_AS(ends_with_one_count(x, 0), std::invalid_argument);
    CHECK_THROWS_AS(ends_with_one_count(x, 5), std::invalid_argument);

    // n_i equals the number of length-i subsequences whose last symbol is 1
    for (std::uint64_t xm = 0; xm < (1u << 8); xm += 3) {
        const auto w = BinarySequence::from_mask(xm, 8);
        for (int i = 1; i <= 3; ++i) {
            BigInt brute = 0;
            for (const auto& [pattern, count] : oracle::brute_deck(w, i))
                if (pattern.back() == '1') brute += count;
            REQUIRE(ends_with_one_count(w, i) == brute);
        }
    }
}

TEST_CASE("power_sums match direct profile evaluation", "[deck]") {
    const auto s = power_sums(compute_deck(BinarySequence::parse("0110"), 2), 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == 4);

    CHECK(power_sums(compute_deck(BinarySequence::parse("1111"), 3), 2) ==
          std::vector<BigInt>({0, 0}));

    for (std::uint64_t xm = 0; xm < (1u << 10); xm += 23) {
        const auto x = BinarySequence::from_mask(xm, 10);
        const auto runs = to_profile(x).runs();
        const int k = 5;
        const auto got = power_sums(compute_deck(x, k), k - 1);
        for (int j = 1; j <= k - 1; ++j) {
            BigInt direct = 0;
            for (std::size_t l = 1; l <= runs.size(); ++l) {
                BigInt pw = 1;
                for (int rep = 0; rep < j; ++rep) pw *= static_cast<int>(l);
                direct += pw * runs[l - 1];
            }
            REQUIRE(got[static_cast<std::size_t>(j) - 1] == direct);
        }
    }
    CHECK_THROWS_AS(power_sums(compute_deck(BinarySequence::parse("0110"), 2), 2),
                    std::invalid_argument);
}

TEST_CASE("deck fingerprints separate decks exactly", "[deck]") {
    CHECK(deck_fingerprint(BinarySequence::parse("0110"), 2) ==
          deck_fingerprint(BinarySequence::parse("1001"), 2));
    CHECK(deck_fingerprint(BinarySequence::parse("01"), 2) !=
          deck_fingerprint(BinarySequence::parse("10"), 2));
    CHECK(deck_fingerprint(BinarySequence::parse("0101"), 0) ==
          deck_fingerprint(BinarySequence::parse("1110"), 0));

    // equal fingerprint must mean equal deck, and vice versa
    const int n = 10;
    for (int k : {1, 2, 3}) {
        std::map<std::string, std::vector<std::uint64_t>> groups;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
            groups[deck_fingerprint(BinarySequence::from_mask(m, n), k)].push_back(m);
        for (const auto& [fp, members] : groups) {
            const auto first = compute_deck(BinarySequence::from_mask(members[0], n), k);
            for (std::uint64_t m : members)
                REQUIRE(compute_deck(BinarySequence::from_mask(m, n), k).counts() ==
                        first.counts());
        }
        // distinct fingerprints must come from distinct decks: spot-check the
        // group count against grouping by serialized deck
        std::set<std::string> by_deck;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
            std::string key;
            const auto d = compute_deck(BinarySequence::from_mask(m, n), k);
            for (const auto& [p, c] : d.counts())
                key += p.str() + ":" + c.str() + ";";
            by_deck.insert(key);
        }
        REQUIRE(by_deck.size() == groups.size());
    }
}
