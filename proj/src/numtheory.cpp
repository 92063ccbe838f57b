#include "seq2adic/numtheory.hpp"

#include <bit>
#include <initializer_list>
#include <limits>
#include <stdexcept>

namespace seq2adic {

static_assert(sizeof(unsigned long) == 8, "mpz <-> u64 bridging assumes LP64");

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// The first twelve primes form a proven-complete Miller-Rabin witness set
// for every integer below 3.3 * 10^24, which covers the whole 64-bit range.
constexpr std::initializer_list<std::uint64_t> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                             17, 19, 23, 29, 31, 37};

void require_odd_prime(const mpz_class& p, const char* who) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw std::domain_error(std::string(who) + ": p must be an odd prime");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t w : kWitnesses) {
        if (n % w == 0) return n == w;
    }
    const std::uint64_t n1 = n - 1;
    const int twos = std::countr_zero(n1);
    const std::uint64_t odd = n1 >> twos;
    for (std::uint64_t w : kWitnesses) {
        std::uint64_t x = powmod_u64(w, odd, n);
        if (x == 1 || x == n1) continue;
        bool witnessed_composite = true;
        for (int i = 1; i < twos; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n1) {
                witnessed_composite = false;
                break;
            }
        }
        if (witnessed_composite) return false;
    }
    return true;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (!n.fits_ulong_p())
        throw std::out_of_range("is_prime: range exceeded, deterministic testing covers 64-bit inputs only");
    return is_prime_u64(n.get_ui());
}

namespace detail {

int jacobi_u64(std::uint64_t a, std::uint64_t n) {
    a %= n;
    int sign = 1;
    while (a != 0) {
        const int twos = std::countr_zero(a);
        a >>= twos;
        // (2/n) = -1 iff n = +-3 (mod 8)
        if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
        // reciprocity flip: both arguments = 3 (mod 4)
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        const std::uint64_t t = a;
        a = n % a;
        n = t;
    }
    return n == 1 ? sign : 0;
}

}  // namespace detail

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
    require_odd_prime(p, "legendre_symbol");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return detail::jacobi_u64(r.get_ui(), p.get_ui());
}

int neg_one_symbol(const mpz_class& p) {
    require_odd_prime(p, "neg_one_symbol");
    return mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? 1 : -1;
}

mpz_class odd_part(const mpz_class& m) {
    if (m <= 0) throw std::domain_error("odd_part: m must be a positive integer");
    const mp_bitcnt_t twos = mpz_scan1(m.get_mpz_t(), 0);
    mpz_class r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), twos);
    return r;
}

std::uint64_t odd_part_u64(std::uint64_t m) {
    if (m == 0) throw std::domain_error("odd_part: m must be a positive integer");
    return m >> std::countr_zero(m);
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class mersenne(std::uint64_t n) {
    mpz_class m;
    mpz_setbit(m.get_mpz_t(), n);
    return m - 1;
}

mpz_class mod_mersenne(const mpz_class& x, std::uint64_t n) {
    if (n == 0) throw std::domain_error("mod_mersenne: n must be positive");
    const mpz_class m = mersenne(n);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

PrimePair::PrimePair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
    if (p == 2 || !is_prime_u64(p)) throw std::domain_error("p must be an odd prime");
    if (q == 2 || !is_prime_u64(q)) throw std::domain_error("q must be an odd prime");
    if (p == q) throw std::domain_error("p and q must be distinct");
    const auto prod = static_cast<unsigned __int128>(p) * q;
    if (prod > std::numeric_limits<std::uint64_t>::max())
        throw std::out_of_range("range exceeded: period p*q does not fit in 64 bits");
    n_ = static_cast<std::uint64_t>(prod);
}

namespace {

std::uint64_t to_u64_prime_candidate(const mpz_class& v, const char* name) {
    if (v < 0) throw std::domain_error(std::string(name) + " must be an odd prime");
    if (!v.fits_ulong_p())
        throw std::out_of_range(std::string(name) +
                                ": range exceeded, deterministic testing covers 64-bit inputs only");
    return v.get_ui();
}

}  // namespace

PrimePair::PrimePair(const mpz_class& p, const mpz_class& q)
    : PrimePair(to_u64_prime_candidate(p, "p"), to_u64_prime_candidate(q, "q")) {}

}  // namespace seq2adic
