#include "seq2adic/numtheory.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

using namespace seq2adic;

namespace {

std::vector<long> odd_primes_up_to(long bound) {
    std::vector<long> ps;
    for (long p = 3; p <= bound; p += 2)
        if (oracles::prime_by_trial_division(static_cast<std::uint64_t>(p))) ps.push_back(p);
    return ps;
}

mpz_class random_mpz(std::mt19937_64& rng, unsigned max_bits) {
    std::uniform_int_distribution<unsigned> bit_count(1, max_bits);
    const unsigned bits = bit_count(rng);
    mpz_class v = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        v <<= 64;
        v += mpz_class(static_cast<unsigned long>(rng()));
    }
    // clamp to the drawn width
    mpz_class mask = (mpz_class(1) << bits) - 1;
    v &= mask;
    return v;
}

}  // namespace

TEST_CASE("is_prime matches trial division and spec examples") {
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));

    int primes_seen = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        CAPTURE(n);
        const bool expected = oracles::prime_by_trial_division(n);
        REQUIRE(is_prime_u64(n) == expected);
        primes_seen += expected;
    }
    CHECK(primes_seen == 1229);  // pi(10^4)

    // large 64-bit cases
    CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(18446744073709551615ull));
    CHECK(is_prime_u64((1ull << 61) - 1));   // Mersenne prime
    CHECK_FALSE(is_prime_u64((1ull << 59) - 1));
}

TEST_CASE("is_prime rejects inputs beyond the deterministic range") {
    const mpz_class big = mpz_class(1) << 64;
    CHECK_THROWS_AS(is_prime(big), std::out_of_range);
    CHECK_THROWS_AS(is_prime(big + 1), std::out_of_range);
    CHECK_NOTHROW(is_prime(big - 1));  // 2^64 - 1 still in range
}

TEST_CASE("legendre_symbol examples and residue classification") {
    CHECK(legendre_symbol(4, 5) == 1);
    CHECK(legendre_symbol(10, 5) == 0);
    CHECK(legendre_symbol(3, 5) == oracles::legendre_by_squares(3, 5));
    CHECK(legendre_symbol(3, 5) == -1);
    CHECK(legendre_symbol(-1, 13) == 1);
    CHECK(legendre_symbol(-1, 3) == -1);
}

TEST_CASE("legendre_symbol rejects non-prime or even moduli") {
    CHECK_THROWS_AS(legendre_symbol(3, 9), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 1), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 15), std::domain_error);
}

TEST_CASE("legendre_symbol agrees with both independent routes") {
    for (long p : odd_primes_up_to(200)) {
        CAPTURE(p);
        for (long a = 0; a < p; ++a) {
            const int got = legendre_symbol(a, p);
            REQUIRE(got == oracles::legendre_by_squares(a, p));
            REQUIRE(got == oracles::legendre_by_euler(a, p));
        }
    }
    // Euler route on wide arguments
    std::mt19937_64 rng(0x5e92ad1c);
    for (int i = 0; i < 50; ++i) {
        const mpz_class a = random_mpz(rng, 256);
        for (long p : {3L, 13L, 101L, 199L}) {
            CAPTURE(a.get_str());
            REQUIRE(legendre_symbol(a, p) == oracles::legendre_by_euler(a, p));
        }
    }
}

TEST_CASE("legendre_symbol is multiplicative, periodic, and zero-sum") {
    std::mt19937_64 rng(42);
    for (long p : odd_primes_up_to(200)) {
        CAPTURE(p);
        long sum = 0;
        for (long a = 0; a < p; ++a) {
            sum += legendre_symbol(a, p);
            REQUIRE(legendre_symbol(a + p, p) == legendre_symbol(a, p));  // period p
            const long b = static_cast<long>(rng() % static_cast<std::uint64_t>(p));
            REQUIRE(legendre_symbol(a * b, p) ==
                    legendre_symbol(a, p) * legendre_symbol(b, p));
        }
        REQUIRE(sum == 0);  // residues and nonresidues balance
    }
}

TEST_CASE("neg_one_symbol matches legendre_symbol(-1, p)") {
    CHECK(neg_one_symbol(5) == 1);
    CHECK(neg_one_symbol(3) == -1);
    CHECK(neg_one_symbol(13) == 1);
    for (long p : odd_primes_up_to(200)) REQUIRE(neg_one_symbol(p) == legendre_symbol(-1, p));
    CHECK_THROWS_AS(neg_one_symbol(9), std::domain_error);
}

TEST_CASE("odd_part strips exactly the twos") {
    CHECK(odd_part(28) == 7);
    CHECK(odd_part(7) == 7);
    CHECK(odd_part(2) == 1);
    CHECK_THROWS_AS(odd_part(0), std::domain_error);
    CHECK_THROWS_AS(odd_part(-4), std::domain_error);
    CHECK_THROWS_AS(odd_part_u64(0), std::domain_error);

    for (std::uint64_t m = 1; m <= 10000; ++m) {
        CAPTURE(m);
        const std::uint64_t o = odd_part_u64(m);
        REQUIRE((o & 1) == 1);
        REQUIRE(m % o == 0);
        const std::uint64_t cofactor = m / o;
        REQUIRE((cofactor & (cofactor - 1)) == 0);  // power of two
        REQUIRE(odd_part(mpz_class(static_cast<unsigned long>(m))) ==
                mpz_class(static_cast<unsigned long>(o)));
    }
}

TEST_CASE("gcd spec examples") {
    CHECK(gcd(0, 32767) == 32767);
    CHECK(gcd(31432, 32767) == 1);
    CHECK(gcd(7, 7) == 7);
}

TEST_CASE("gcd agrees with schoolbook Euclid on wide random inputs") {
    std::mt19937_64 rng(20260811);
    for (int i = 0; i < 1000; ++i) {
        const mpz_class a = random_mpz(rng, 2048);
        const mpz_class b = random_mpz(rng, 2048);
        CAPTURE(i);
        REQUIRE(gcd(a, b) == oracles::gcd_by_euclid(a, b));
    }
}

TEST_CASE("mod_mersenne canonicalizes into [0, 2^n - 2]") {
    CHECK(mod_mersenne(-3528, 15) == 29239);
    CHECK(mod_mersenne(32767, 15) == 0);
    CHECK(mod_mersenne(62864, 15) == 30097);
    CHECK_THROWS_AS(mod_mersenne(5, 0), std::domain_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = 1 + rng() % 300;
        mpz_class x = random_mpz(rng, 700);
        if (rng() & 1) x = -x;
        const mpz_class m = mersenne(n);
        const mpz_class r = mod_mersenne(x, n);
        CAPTURE(n);
        REQUIRE(r >= 0);
        REQUIRE(r < m);
        REQUIRE((x - r) % m == 0);
    }
}

TEST_CASE("mersenne values") {
    CHECK(mersenne(1) == 1);
    CHECK(mersenne(15) == 32767);
    CHECK(mersenne(0) == 0);
}

TEST_CASE("PrimePair validates both members") {
    const PrimePair ok(3, 5);
    CHECK(ok.p() == 3);
    CHECK(ok.q() == 5);
    CHECK(ok.n() == 15);

    CHECK_THROWS_WITH_AS(PrimePair(3, 3), "p and q must be distinct", std::domain_error);
    CHECK_THROWS_WITH_AS(PrimePair(4, 5), "p must be an odd prime", std::domain_error);
    CHECK_THROWS_WITH_AS(PrimePair(2, 5), "p must be an odd prime", std::domain_error);
    CHECK_THROWS_WITH_AS(PrimePair(3, 9), "q must be an odd prime", std::domain_error);
    CHECK_THROWS_WITH_AS(PrimePair(5, 2), "q must be an odd prime", std::domain_error);

    CHECK_THROWS_AS(PrimePair(mpz_class(1) << 65, mpz_class(5)), std::out_of_range);
    CHECK_THROWS_AS(PrimePair(mpz_class(3), mpz_class(-5)), std::domain_error);
    // period must fit alongside the primes themselves
    CHECK_THROWS_AS(PrimePair(18446744073709551557ull, 18446744073709551533ull),
                    std::out_of_range);
}
