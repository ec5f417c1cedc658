#include "deckrec/balls.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace deckrec;

namespace {

std::set<std::string> as_strings(const std::vector<BinarySequence>& words) {
    std::set<std::string> out;
    for (const auto& w : words) out.insert(w.str());
    return out;
}

}  // namespace

TEST_CASE("deletion ball worked examples", "[balls]") {
    CHECK(as_strings(deletion_ball(BinarySequence::parse("01"), 1)) ==
          std::set<std::string>({"1"}));
    CHECK(as_strings(deletion_ball(BinarySequence::parse("0110"), 2)) ==
          std::set<std::string>({"11"}));
    CHECK(as_strings(deletion_ball(BinarySequence::parse("0110"), 0)) ==
          std::set<std::string>({"0110"}));
    CHECK_THROWS_AS(deletion_ball(BinarySequence::parse("0110"), 3), std::invalid_argument);
    CHECK_THROWS_AS(deletion_ball(BinarySequence::parse("0110"), -1), std::invalid_argument);
    // the counting form reports an empty ball instead of erroring
    CHECK(deletion_ball_size(BinarySequence::parse("0110"), 3) == 0);
}

TEST_CASE("insertion ball worked examples", "[balls]") {
    CHECK(as_strings(insertion_ball(BinarySequence::parse("01"), 1)) ==
          std::set<std::string>({"001", "010"}));
    CHECK(as_strings(insertion_ball(BinarySequence::parse("01"), 0)) ==
          std::set<std::string>({"01"}));
    CHECK(insertion_ball_size(BinarySequence::parse("0000"), 3) == 1);
}

TEST_CASE("ball listings are sorted and deduplicated", "[balls]") {
    const auto del = deletion_ball(BinarySequence::parse("0101100"), 2);
    CHECK(std::is_sorted(del.begin(), del.end()));
    CHECK(std::adjacent_find(del.begin(), del.end()) == del.end());
    const auto ins = insertion_ball(BinarySequence::parse("0101100"), 2);
    CHECK(std::is_sorted(ins.begin(), ins.end()));
    CHECK(std::adjacent_find(ins.begin(), ins.end()) == ins.end());
}

TEST_CASE("deletion ball matches position-subset enumeration", "[balls]") {
    for (int n = 0; n <= 12; ++n) {
        int bad = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); m += (n < 10 ? 1 : 3)) {
            const auto x = BinarySequence::from_mask(m, n);
            for (int t = 0; t <= std::min(4, x.zeros()); ++t) {
                const auto truth = oracle::brute_deletion_ball(x, t);
                if (as_strings(deletion_ball(x, t)) != truth) ++bad;
                if (deletion_ball_size(x, t) != BigInt(truth.size())) ++bad;
            }
        }
        REQUIRE(bad == 0);
    }
}

TEST_CASE("insertion ball matches enumeration and the stars-and-bars size", "[balls]") {
    for (int n = 2; n <= 8; ++n) {
        int bad = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); m += 3) {
            const auto x = BinarySequence::from_mask(m, n);
            for (int t = 0; t <= 4; ++t) {
                const auto got = insertion_ball(x, t);
                if (as_strings(got) != oracle::brute_insertion_ball(x, t)) ++bad;
                if (insertion_ball_size(x, t) != BigInt(got.size())) ++bad;
                if (insertion_ball_size(x, t) != binomial(x.weight() + 1 + t - 1, t)) ++bad;
            }
        }
        REQUIRE(bad == 0);
    }
}

TEST_CASE("membership duality between the two balls", "[balls]") {
    for (std::uint64_t m = 0; m < (1u << 8); m += 5) {
        const auto v = BinarySequence::from_mask(m, 8);
        for (int t = 0; t <= std::min(3, v.zeros()); ++t)
            for (const auto& u : deletion_ball(v, t)) {
                const auto up = insertion_ball(u, t);
                REQUIRE(std::find(up.begin(), up.end(), v) != up.end());
            }
    }
}

TEST_CASE("common trace counting", "[balls]") {
    const auto x3 = BinarySequence::parse("01101001");
    const auto y3 = BinarySequence::parse("10010110");
    CHECK(common_trace_count(x3, y3, 3) == 1);
    CHECK(common_trace_exists(x3, y3, 3));
    CHECK_FALSE(common_trace_exists(x3, y3, 2));

    const auto x4 = BinarySequence::parse("1100111011001");
    const auto y4 = BinarySequence::parse("1011101001110");
    CHECK(common_trace_count(x4, y4, 4) == 1);

    // weight mismatch is a clean no, length mismatch is an error
    CHECK(common_trace_count(BinarySequence::parse("0110"), BinarySequence::parse("1110"), 1) ==
          0);
    CHECK_FALSE(common_trace_exists(BinarySequence::parse("0110"),
                                    BinarySequence::parse("1110"), 1));
    CHECK_THROWS_AS(common_trace_exists(BinarySequence::parse("011"),
                                        BinarySequence::parse("0110"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(common_supersequence_exists(BinarySequence::parse("011"),
                                                BinarySequence::parse("0110"), 1),
                    std::invalid_argument);
}

TEST_CASE("common trace count equals brute ball intersection", "[balls]") {
    for (std::uint64_t a = 0; a < (1u << 7); a += 3)
        for (std::uint64_t b = 0; b < (1u << 7); b += 5) {
            const auto x = BinarySequence::from_mask(a, 7);
            const auto y = BinarySequence::from_mask(b, 7);
            for (int t = 0; t <= 3; ++t) {
                std::set<std::string> inter;
                if (t <= x.zeros() && t <= y.zeros()) {
                    const auto bx = oracle::brute_deletion_ball(x, t);
                    for (const auto& s : oracle::brute_deletion_ball(y, t))
                        if (bx.count(s)) inter.insert(s);
                }
                REQUIRE(common_trace_count(x, y, t) == BigInt(inter.size()));
                REQUIRE(common_trace_exists(x, y, t) == !inter.empty());
            }
        }
}

TEST_CASE("supersequence test agrees with the pooled profile", "[balls]") {
    const auto x = BinarySequence::parse("01101001");
    const auto y = BinarySequence::parse("10010110");
    CHECK(common_supersequence_exists(x, y, 3));
    CHECK_FALSE(common_supersequence_exists(x, y, 2));
    CHECK(common_supersequence_exists(x, x, 0));

    // duality at equal weight on feasible radii
    for (std::uint64_t a = 0; a < (1u << 9); a += 7)
        for (std::uint64_t b = 0; b < (1u << 9); b += 11) {
            const auto u = BinarySequence::from_mask(a, 9);
            const auto v = BinarySequence::from_mask(b, 9);
            if (u.weight() != v.weight()) continue;
            for (int t = 0; t <= std::min({4, u.zeros(), v.zeros()}); ++t)
                REQUIRE(common_trace_exists(u, v, t) == common_supersequence_exists(u, v, t));
        }
}

TEST_CASE("alternating words attain the binomial ball size", "[balls]") {
    for (int n = 2; n <= 20; ++n) {
        const auto a = alternating_word(n);
        const auto runs = to_profile(a).runs();
        int nonzero = 0;
        for (int r : runs) nonzero += r > 0 ? 1 : 0;
        CHECK(nonzero == (n + 1) / 2);
        for (int t = 0; t <= std::min(4, a.zeros()); ++t)
            CHECK(deletion_ball_size(a, t) == binomial(nonzero, t));
    }
}

TEST_CASE("max ball scan at n=12, t=1", "[balls]") {
    const auto report = max_ball_bound_check(12, 1);
    CHECK(report.max_size == 6);
    CHECK(report.bound == 6);
    CHECK_FALSE(report.argmax.empty());
    for (const auto& w : report.argmax) CHECK(deletion_ball_size(w, 1) == 6);
    CHECK(std::is_sorted(report.argmax.begin(), report.argmax.end()));

    CHECK_THROWS_AS(max_ball_bound_check(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_ball_bound_check(12, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_ball_bound_check(12, -1), std::invalid_argument);
}

TEST_CASE("max ball scan is worker-count independent", "[balls]") {
    const auto one = max_ball_bound_check(12, 1, 1);
    const auto two = max_ball_bound_check(12, 1, 2);
    const auto many = max_ball_bound_check(12, 1, 7);
    CHECK(one.max_size == two.max_size);
    CHECK(one.argmax == two.argmax);
    CHECK(one.max_size == many.max_size);
    CHECK(one.argmax == many.argmax);
}
