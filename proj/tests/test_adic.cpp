#include "seq2adic/adic.hpp"

#include "oracles.hpp"
#include "seq2adic/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace seq2adic;

namespace {

// log2 values frozen from a 40-digit computation.
constexpr double kC2_3_5 = 14.999955971770;
constexpr double kC2_3_29 = 84.192645077942;
constexpr double kC2_13_3 = 36.192645077940;
constexpr double kC2_5_7 = 34.999999999958;
constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("MersenneRing holds 2^n - 1 and reduces canonically") {
    const MersenneRing ring(15);
    CHECK(ring.n() == 15);
    CHECK(ring.modulus() == 32767);
    CHECK(ring.reduce(-3528) == 29239);
    CHECK(ring.reduce(32767) == 0);
    CHECK_THROWS_AS(MersenneRing(0), std::domain_error);
}

TEST_CASE("mersenne_quotient is the exact repunit-style quotient") {
    CHECK(mersenne_quotient(15, 3) == 4681);
    CHECK(mersenne_quotient(15, 5) == 1057);
    CHECK(mersenne_quotient(6, 6) == 1);
    CHECK_THROWS_AS(mersenne_quotient(15, 4), std::domain_error);
    CHECK_THROWS_AS(mersenne_quotient(15, 0), std::domain_error);
    // 1 + 2^m + ... form
    for (std::uint64_t m : {2ull, 3ull, 5ull}) {
        mpz_class direct = 0;
        const std::uint64_t n = m * 7;
        for (std::uint64_t i = 0; i < 7; ++i) direct += mpz_class(1) << (i * m);
        REQUIRE(mersenne_quotient(n, m) == direct);
    }
}

TEST_CASE("mersenne_cofactor times (2^p-1)(2^q-1) is 2^pq - 1") {
    for (const PrimePair& pair : enumerate_pairs(300)) {
        REQUIRE(mersenne_cofactor(pair) * mersenne(pair.p()) * mersenne(pair.q()) ==
                mersenne(pair.n()));
    }
}

TEST_CASE("log2_mpz is sharp on powers of two and near-misses") {
    CHECK(log2_mpz(1) == 0.0);
    CHECK(log2_mpz(2) == 1.0);
    CHECK(log2_mpz(mpz_class(1) << 600) == 600.0);
    CHECK(std::fabs(log2_mpz(32767) - kC2_3_5) <= 1e-12);
    CHECK_THROWS_AS(log2_mpz(0), std::domain_error);
    CHECK_THROWS_AS(log2_mpz(-3), std::domain_error);
}

TEST_CASE("s_of_two sums s_i 2^i") {
    CHECK(s_of_two(BinarySequence::generate(PrimePair(3, 5))) == 31432);

    const std::vector<std::uint8_t> zeros(5, 0);
    CHECK(s_of_two(std::span(zeros)) == 0);

    const std::vector<std::uint8_t> unit{1, 0, 0};
    CHECK(s_of_two(std::span(unit)) == 1);

    const std::vector<std::uint8_t> bad{0, 2, 0};
    CHECK_THROWS_AS(s_of_two(std::span(bad)), std::domain_error);
}

TEST_CASE("definitional complexity: hand-checked and degenerate periods") {
    const auto family = definitional_complexity(BinarySequence::generate(PrimePair(3, 5)));
    CHECK(family.d == 1);
    CHECK(family.s2 == 31432);
    CHECK(family.is_max);
    CHECK(std::fabs(family.c2_bits - kC2_3_5) <= kTol);

    const std::vector<std::uint8_t> ones(7, 1);  // S(2) = modulus, d = modulus
    const auto all_ones = definitional_complexity(std::span(ones));
    CHECK(all_ones.d == mersenne(7));
    CHECK(all_ones.c2_bits == 0.0);
    CHECK_FALSE(all_ones.is_max);

    const std::vector<std::uint8_t> zeros(9, 0);  // gcd(0, m) = m
    const auto all_zeros = definitional_complexity(std::span(zeros));
    CHECK(all_zeros.s2 == 0);
    CHECK(all_zeros.d == mersenne(9));
    CHECK(all_zeros.c2_bits == 0.0);

    CHECK_THROWS_AS(definitional_complexity(std::span<const std::uint8_t>()), std::domain_error);

    const auto nontrivial = definitional_complexity(BinarySequence::generate(PrimePair(3, 29)));
    CHECK(nontrivial.d == 7);
    CHECK(std::fabs(nontrivial.c2_bits - kC2_3_29) <= kTol);
}

TEST_CASE("gauss_sums for (3,5) match the four-term hand evaluation") {
    const GaussSums g = gauss_sums(PrimePair(3, 5));
    CHECK(g.g_q == 29239);  // raw -3528 normalized
    CHECK(g.g_p == 992);    // -2^5 + 2^10
    CHECK(g.g_p % 31 == 0);
}

TEST_CASE("gauss_sums match an independent mpz reconstruction") {
    for (auto [p, q] : {std::pair<long, long>{3, 5}, {5, 7}, {7, 11}, {5, 3}}) {
        const PrimePair pair(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q));
        mpz_class raw_p = 0, raw_q = 0;
        for (long j = 1; j < p; ++j)
            raw_p += oracles::legendre_by_squares(j * q, p) * (mpz_class(1) << (j * q));
        for (long i = 1; i < q; ++i)
            raw_q += oracles::legendre_by_squares(i * p, q) * (mpz_class(1) << (i * p));
        const GaussSums g = gauss_sums(pair);
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(g.g_p == mod_mersenne(raw_p, pair.n()));
        REQUIRE(g.g_q == mod_mersenne(raw_q, pair.n()));
    }
}

TEST_CASE("closed_form spec instances") {
    const ClosedForm a = closed_form(PrimePair(3, 5));
    CHECK(a.d1 == 1);
    CHECK(a.d2 == 1);
    CHECK(std::fabs(a.c2_bits - kC2_3_5) <= kTol);

    const ClosedForm b = closed_form(PrimePair(3, 29));
    CHECK(b.d1 == 7);
    CHECK(b.d2 == 1);
    CHECK(std::fabs(b.c2_bits - kC2_3_29) <= kTol);

    const ClosedForm c = closed_form(PrimePair(13, 3));
    CHECK(c.d1 == 1);
    CHECK(c.d2 == 7);
    CHECK(std::fabs(c.c2_bits - kC2_13_3) <= kTol);
}

TEST_CASE("shortcut_conditions spec instances and forcing consistency") {
    const ShortcutConditions a = shortcut_conditions(PrimePair(3, 5));
    CHECK(a.d1_forced_one);
    CHECK(a.d2_forced_one);

    const ShortcutConditions b = shortcut_conditions(PrimePair(3, 29));
    CHECK_FALSE(b.d1_forced_one);  // (29-1)_o = 7 = 2*3 + 1
    CHECK(b.d2_forced_one);

    const ShortcutConditions c = shortcut_conditions(PrimePair(13, 3));
    CHECK(c.d1_forced_one);
    CHECK_FALSE(c.d2_forced_one);  // (13+1)_o = 7 = 2*3 + 1

    for (const PrimePair& pair : enumerate_pairs(1200)) {
        CAPTURE(pair.p());
        CAPTURE(pair.q());
        const ShortcutConditions s = shortcut_conditions(pair);
        // "< 2p + 1" and "<= 2p - 1" are the same predicate on odd values
        REQUIRE(s.d1_forced_one == (odd_part_u64(pair.q() - 1) < 2 * pair.p() + 1));
        REQUIRE(s.d2_forced_one == (odd_part_u64(pair.p() + 1) < 2 * pair.q() + 1));
        const ClosedForm f = closed_form(pair);
        if (s.d1_forced_one) REQUIRE(f.d1 == 1);
        if (s.d2_forced_one) REQUIRE(f.d2 == 1);
    }
}

TEST_CASE("lower_bound values and ordering against the closed form") {
    CHECK(std::fabs(lower_bound(PrimePair(3, 5)) - kC2_3_5) <= kTol);
    CHECK(std::fabs(lower_bound(PrimePair(3, 29)) - kC2_3_29) <= kTol);
    for (const PrimePair& pair : enumerate_pairs(1200)) {
        CAPTURE(pair.p());
        CAPTURE(pair.q());
        REQUIRE(closed_form(pair).c2_bits >= lower_bound(pair) - kTol);
    }
}

TEST_CASE("doubled_s2_identity holds with the hand-computed (3,5) residues") {
    const CongruenceSides sides = doubled_s2_identity(PrimePair(3, 5));
    CHECK(sides.lhs == 30097);
    CHECK(sides.rhs == 30097);
    for (const PrimePair& pair : enumerate_pairs(300)) {
        CAPTURE(pair.p());
        CAPTURE(pair.q());
        const CongruenceSides s = doubled_s2_identity(pair);
        REQUIRE(s.lhs == s.rhs);
    }
}

TEST_CASE("analyze spec instances") {
    const ComplexityReport a = analyze(PrimePair(3, 5));
    CHECK(a.n == 15);
    CHECK(a.s2 == 31432);
    CHECK(a.d == 1);
    CHECK(a.d1 == 1);
    CHECK(a.d2 == 1);
    CHECK(a.d3 == 1);
    CHECK(a.closed_d1 == 1);
    CHECK(a.closed_d2 == 1);
    CHECK(a.is_max);
    CHECK(std::fabs(a.c2_bits - kC2_3_5) <= kTol);

    const ComplexityReport b = analyze(PrimePair(3, 29));
    CHECK(b.d == 7);
    CHECK(b.d1 == 7);
    CHECK(b.d2 == 1);
    CHECK(b.d3 == 1);
    CHECK_FALSE(b.is_max);

    const ComplexityReport c = analyze(PrimePair(13, 3));
    CHECK(c.d == 7);
    CHECK(c.d1 == 1);
    CHECK(c.d2 == 7);
    CHECK(c.d3 == 1);

    // wider nontrivial divisors
    CHECK(analyze(PrimePair(11, 47)).d == 23);
    CHECK(analyze(PrimePair(61, 5)).d == 31);
    CHECK(std::fabs(analyze(PrimePair(5, 7)).c2_bits - kC2_5_7) <= kTol);
}
