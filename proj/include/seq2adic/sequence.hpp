#pragma once

#include "seq2adic/numtheory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seq2adic {

/// Partition of Z_pq: {0}, the nonzero multiples of p, the nonzero multiples
/// of q, and the units.
enum class ResidueClass { Zero, MultOfP, MultOfQ, Unit };

/// Class of index i.  Throws std::domain_error unless 0 <= i < pq.
ResidueClass classify(std::uint64_t i, const PrimePair& pair);

/// One period s_0 .. s_{n-1}, n = pq, of the generalized binary sequence of
/// order 2 for a pair of distinct odd primes:
///
///   s_i = 0 on {0} and the multiples of q,
///   s_i = 1 on the multiples of p,
///   s_i = (1 - (i/p)(i/q)) / 2 on the units, (./.) the Legendre symbol.
///
/// Bit order is fixed LSB-first: bit i is the coefficient of 2^i in S(2).
class BinarySequence {
public:
    static BinarySequence generate(const PrimePair& pair);

    const PrimePair& pair() const noexcept { return pair_; }
    std::uint64_t n() const noexcept { return bits_.size(); }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    int bit(std::uint64_t i) const;

    std::uint64_t ones_count() const;

    /// '0'/'1' characters, s_0 first, no separators.
    std::string to_bit_string() const;

    /// Byte j packs s_{8j+k} into bit position k (LSB); the final partial
    /// byte is zero-padded in the high positions.  Lowercase hex.
    std::string to_hex_string() const;

private:
    BinarySequence(PrimePair pair, std::vector<std::uint8_t> bits);

    PrimePair pair_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace seq2adic
