#pragma once

#include "seq2adic/numtheory.hpp"
#include "seq2adic/sequence.hpp"

#include <cstdint>
#include <span>

namespace seq2adic {

/// The residue ring Z/(2^n - 1): the natural home of S(2), since 2^n = 1
/// there.  All residues are kept canonical in [0, 2^n - 2].
class MersenneRing {
public:
    explicit MersenneRing(std::uint64_t n);

    std::uint64_t n() const noexcept { return n_; }
    const mpz_class& modulus() const noexcept { return modulus_; }

    /// Canonical representative of x.
    mpz_class reduce(const mpz_class& x) const;

private:
    std::uint64_t n_;
    mpz_class modulus_;
};

/// (2^n - 1)/(2^m - 1) = 1 + 2^m + ... + 2^(n-m), exact for m | n.
/// Divisibility is asserted at runtime, never assumed.
mpz_class mersenne_quotient(std::uint64_t n, std::uint64_t m);

/// (2^pq - 1) / ((2^p - 1)(2^q - 1)), an exact integer for distinct primes.
mpz_class mersenne_cofactor(const PrimePair& pair);

/// log2 of a positive integer, accurate to a few ulps of double.
double log2_mpz(const mpz_class& x);

/// Quadratic Gauss sums valued in Z/(2^pq - 1), with 2^q (resp. 2^p)
/// standing in for a p-th (q-th) root of unity:
///
///   g_p = sum_{j=1}^{p-1} (jq/p) 2^(jq),   g_q = sum_{i=1}^{q-1} (ip/q) 2^(ip),
///
/// both reduced canonically (negative raw sums are normalized on entry).
struct GaussSums {
    mpz_class g_p;
    mpz_class g_q;
};
GaussSums gauss_sums(const PrimePair& pair);

/// S(2) = sum_i s_i 2^i over one period.  Bits must be 0 or 1.
mpz_class s_of_two(std::span<const std::uint8_t> bits);
mpz_class s_of_two(const BinarySequence& seq);

/// 2-adic complexity straight from the definition: d = gcd(S(2), 2^n - 1)
/// and c2 = log2((2^n - 1)/d).  Accepts any periodic bit pattern, not just
/// the (p, q) family; this is the brute-force oracle the closed form is
/// checked against.  The all-zero period gives d = 2^n - 1 and complexity 0
/// via gcd(0, m) = m.
struct DefinitionalComplexity {
    std::uint64_t n;
    mpz_class s2;
    mpz_class d;
    double c2_bits;
    bool is_max;  // d == 1
};
DefinitionalComplexity definitional_complexity(std::span<const std::uint8_t> bits);
DefinitionalComplexity definitional_complexity(const BinarySequence& seq);

/// Closed form of the complexity for the (p, q) family:
///   d1 = gcd((q-1)_o, 2^p - 1),  d2 = gcd((p+1)_o, 2^q - 1),
///   c2 = log2((2^pq - 1)/(d1 d2)).
struct ClosedForm {
    mpz_class d1;
    mpz_class d2;
    double c2_bits;
};
ClosedForm closed_form(const PrimePair& pair);

/// Sufficient conditions forcing the closed-form divisors to 1:
///   d1 = 1 when (q-1)_o <= 2p - 1,   d2 = 1 when (p+1)_o <= 2q - 1.
/// Since odd parts are odd these thresholds are the same predicates as
/// (q-1)_o < 2p + 1 and (p+1)_o < 2q + 1.  When a flag is set, the
/// corresponding closed-form divisor is checked to be 1, not assumed.
struct ShortcutConditions {
    bool d1_forced_one;
    bool d2_forced_one;
};
ShortcutConditions shortcut_conditions(const PrimePair& pair);

/// log2((2^pq - 1) / max((q-1)_o, (p+1)_o)); never above the closed-form c2.
double lower_bound(const PrimePair& pair);

/// Both sides of the doubled-S(2) identity in Z/(2^pq - 1):
///
///   2 S(2) = Q_p - Q_q - 1 - g_p g_q,
///
/// where Q_p = (2^pq-1)/(2^p-1) and Q_q = (2^pq-1)/(2^q-1).  Q_p - Q_q is
/// the exact integer value of (2^pq-1)(2^q-2^p)/((2^p-1)(2^q-1)); it is
/// computed by exact division, never by modular inverses.
struct CongruenceSides {
    mpz_class lhs;
    mpz_class rhs;
};
CongruenceSides doubled_s2_identity(const PrimePair& pair);

/// Everything about one pair: the definitional values, the d1/d2/d3 split,
/// the closed-form prediction and the complexity in bits.
struct ComplexityReport {
    PrimePair pair;
    std::uint64_t n;
    mpz_class s2;
    mpz_class d;   // gcd(S(2), 2^pq - 1)
    mpz_class d1;  // gcd(S(2), 2^p - 1)
    mpz_class d2;  // gcd(S(2), 2^q - 1)
    mpz_class d3;  // gcd(S(2), (2^pq - 1)/((2^p - 1)(2^q - 1)))
    mpz_class closed_d1;
    mpz_class closed_d2;
    double c2_bits;  // log2(2^pq - 1) - log2(d)
    bool is_max;     // d == 1
};
ComplexityReport analyze(const PrimePair& pair);

}  // namespace seq2adic
