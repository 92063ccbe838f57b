#include "seq2adic/adic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seq2adic {

MersenneRing::MersenneRing(std::uint64_t n) : n_(n), modulus_(mersenne(n)) {
    if (n == 0) throw std::domain_error("MersenneRing: n must be positive");
}

mpz_class MersenneRing::reduce(const mpz_class& x) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
    return r;
}

mpz_class mersenne_quotient(std::uint64_t n, std::uint64_t m) {
    if (m == 0 || n == 0 || n % m != 0)
        throw std::domain_error("mersenne_quotient: m must divide n");
    const mpz_class num = mersenne(n);
    const mpz_class den = mersenne(m);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("mersenne_quotient: 2^m - 1 does not divide 2^n - 1");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class mersenne_cofactor(const PrimePair& pair) {
    const mpz_class num = mersenne(pair.n());
    const mpz_class den = mersenne(pair.p()) * mersenne(pair.q());
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("mersenne_cofactor: (2^p - 1)(2^q - 1) does not divide 2^pq - 1");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

double log2_mpz(const mpz_class& x) {
    if (x <= 0) throw std::domain_error("log2_mpz: x must be positive");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());  // x = mant * 2^exp2, mant in [0.5, 1)
    return std::log2(mant) + static_cast<double>(exp2);
}

GaussSums gauss_sums(const PrimePair& pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t n = pair.n();

    // Accumulate the +1 and -1 terms separately, then normalize once.
    auto character_sum = [n](std::uint64_t count, std::uint64_t step, std::uint64_t modulus) {
        mpz_class pos, neg;
        for (std::uint64_t i = 1; i <= count; ++i) {
            const std::uint64_t exponent = i * step;  // < pq, no overflow: pq fits u64
            const int chi = detail::jacobi_u64(exponent % modulus, modulus);
            mpz_setbit((chi == 1 ? pos : neg).get_mpz_t(), exponent);
        }
        return mod_mersenne(pos - neg, n);
    };

    return GaussSums{
        .g_p = character_sum(p - 1, q, p),
        .g_q = character_sum(q - 1, p, q),
    };
}

mpz_class s_of_two(std::span<const std::uint8_t> bits) {
    mpz_class s;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 1)
            mpz_setbit(s.get_mpz_t(), i);
        else if (bits[i] != 0)
            throw std::domain_error("s_of_two: bits must be 0 or 1");
    }
    return s;
}

mpz_class s_of_two(const BinarySequence& seq) { return s_of_two(std::span(seq.bits())); }

DefinitionalComplexity definitional_complexity(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw std::domain_error("definitional_complexity: period must be nonempty");
    DefinitionalComplexity r;
    r.n = bits.size();
    r.s2 = s_of_two(bits);
    const mpz_class modulus = mersenne(r.n);
    r.d = gcd(r.s2, modulus);  // gcd(0, m) = m covers the all-zero period
    r.c2_bits = log2_mpz(modulus) - log2_mpz(r.d);
    r.is_max = r.d == 1;
    return r;
}

DefinitionalComplexity definitional_complexity(const BinarySequence& seq) {
    return definitional_complexity(std::span(seq.bits()));
}

ClosedForm closed_form(const PrimePair& pair) {
    ClosedForm f;
    f.d1 = gcd(odd_part_u64(pair.q() - 1), mersenne(pair.p()));
    f.d2 = gcd(odd_part_u64(pair.p() + 1), mersenne(pair.q()));
    f.c2_bits = log2_mpz(mersenne(pair.n())) - log2_mpz(f.d1 * f.d2);
    return f;
}

ShortcutConditions shortcut_conditions(const PrimePair& pair) {
    using u128 = unsigned __int128;
    ShortcutConditions c{
        .d1_forced_one = static_cast<u128>(odd_part_u64(pair.q() - 1)) <= 2 * static_cast<u128>(pair.p()) - 1,
        .d2_forced_one = static_cast<u128>(odd_part_u64(pair.p() + 1)) <= 2 * static_cast<u128>(pair.q()) - 1,
    };
    const ClosedForm f = closed_form(pair);
    if ((c.d1_forced_one && f.d1 != 1) || (c.d2_forced_one && f.d2 != 1))
        throw std::logic_error("shortcut_conditions: forcing condition met but divisor is not 1");
    return c;
}

double lower_bound(const PrimePair& pair) {
    const std::uint64_t worst = std::max(odd_part_u64(pair.q() - 1), odd_part_u64(pair.p() + 1));
    return log2_mpz(mersenne(pair.n())) - log2_mpz(mpz_class(worst));
}

CongruenceSides doubled_s2_identity(const PrimePair& pair) {
    const std::uint64_t n = pair.n();
    const mpz_class s2 = s_of_two(BinarySequence::generate(pair));
    const mpz_class q_p = mersenne_quotient(n, pair.p());
    const mpz_class q_q = mersenne_quotient(n, pair.q());
    const GaussSums g = gauss_sums(pair);
    return CongruenceSides{
        .lhs = mod_mersenne(2 * s2, n),
        .rhs = mod_mersenne(q_p - q_q - 1 - g.g_p * g.g_q, n),
    };
}

ComplexityReport analyze(const PrimePair& pair) {
    const BinarySequence seq = BinarySequence::generate(pair);
    const mpz_class modulus = mersenne(pair.n());
    const ClosedForm closed = closed_form(pair);

    ComplexityReport r{.pair = pair,
                       .n = pair.n(),
                       .s2 = s_of_two(seq),
                       .d = 0,
                       .d1 = 0,
                       .d2 = 0,
                       .d3 = 0,
                       .closed_d1 = closed.d1,
                       .closed_d2 = closed.d2,
                       .c2_bits = 0.0,
                       .is_max = false};
    r.d = gcd(r.s2, modulus);
    r.d1 = gcd(r.s2, mersenne(pair.p()));
    r.d2 = gcd(r.s2, mersenne(pair.q()));
    r.d3 = gcd(r.s2, mersenne_cofactor(pair));
    r.c2_bits = log2_mpz(modulus) - log2_mpz(r.d);
    r.is_max = r.d == 1;
    return r;
}

}  // namespace seq2adic
