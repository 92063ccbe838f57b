#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace seq2adic {

/// Deterministic Miller-Rabin over 64-bit operands (no probabilistic answers).
bool is_prime_u64(std::uint64_t n);

/// Primality of an unbounded nonnegative integer.  Inputs above 2^64 - 1 are
/// rejected with std::out_of_range instead of being answered probabilistically.
bool is_prime(const mpz_class& n);

/// Legendre symbol (a/p) for an odd prime p: 0 if p | a, +1 on nonzero
/// quadratic residues, -1 on nonresidues.  Computed by quadratic-reciprocity
/// descent.  Throws std::domain_error if p is not an odd prime.
int legendre_symbol(const mpz_class& a, const mpz_class& p);

/// (-1/p) = (-1)^((p-1)/2) for an odd prime p.
int neg_one_symbol(const mpz_class& p);

/// Odd part m' of m = 2^a * m'.  Requires m >= 1.
mpz_class odd_part(const mpz_class& m);
std::uint64_t odd_part_u64(std::uint64_t m);

/// gcd(a, b) with gcd(0, b) = b.
mpz_class gcd(const mpz_class& a, const mpz_class& b);

/// 2^n - 1.
mpz_class mersenne(std::uint64_t n);

/// Canonical residue of x modulo 2^n - 1, in [0, 2^n - 2].  Negative x is
/// normalized to its nonnegative representative.  Requires n >= 1.
mpz_class mod_mersenne(const mpz_class& x, std::uint64_t n);

/// A pair (p, q) of distinct odd primes; the sequence period is n = p*q.
/// Primality of both members is established deterministically at
/// construction, so downstream code never re-checks.
class PrimePair {
public:
    PrimePair(std::uint64_t p, std::uint64_t q);
    PrimePair(const mpz_class& p, const mpz_class& q);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t n() const noexcept { return n_; }

    friend bool operator==(const PrimePair&, const PrimePair&) = default;

private:
    std::uint64_t p_;
    std::uint64_t q_;
    std::uint64_t n_;
};

namespace detail {

/// Jacobi symbol (a/n) for odd n >= 1.  Unchecked fast path shared by the
/// sequence generator, where n comes from an already validated PrimePair.
int jacobi_u64(std::uint64_t a, std::uint64_t n);

}  // namespace detail

}  // namespace seq2adic
