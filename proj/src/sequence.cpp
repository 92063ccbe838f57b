#include "seq2adic/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace seq2adic {

ResidueClass classify(std::uint64_t i, const PrimePair& pair) {
    if (i >= pair.n()) throw std::domain_error("classify: index must lie in [0, pq)");
    if (i == 0) return ResidueClass::Zero;
    if (i % pair.p() == 0) return ResidueClass::MultOfP;
    if (i % pair.q() == 0) return ResidueClass::MultOfQ;
    return ResidueClass::Unit;
}

BinarySequence::BinarySequence(PrimePair pair, std::vector<std::uint8_t> bits)
    : pair_(pair), bits_(std::move(bits)) {}

BinarySequence BinarySequence::generate(const PrimePair& pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t q = pair.q();
    const std::uint64_t n = pair.n();
    if (n > std::numeric_limits<std::size_t>::max())
        throw std::length_error("generate: period p*q does not fit in memory");

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (std::uint64_t i = 1; i < n; ++i) {
        if (i % p == 0) {
            bits[i] = 1;
        } else if (i % q == 0) {
            bits[i] = 0;
        } else {
            const int chi = detail::jacobi_u64(i % p, p) * detail::jacobi_u64(i % q, q);
            bits[i] = static_cast<std::uint8_t>((1 - chi) / 2);
        }
    }
    return BinarySequence(pair, std::move(bits));
}

int BinarySequence::bit(std::uint64_t i) const {
    if (i >= bits_.size()) throw std::domain_error("bit: index must lie in [0, pq)");
    return bits_[i];
}

std::uint64_t BinarySequence::ones_count() const {
    return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BinarySequence::to_bit_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::string BinarySequence::to_hex_string() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(((bits_.size() + 7) / 8) * 2);
    for (std::size_t base = 0; base < bits_.size(); base += 8) {
        unsigned byte = 0;
        for (std::size_t k = 0; k < 8 && base + k < bits_.size(); ++k)
            byte |= static_cast<unsigned>(bits_[base + k]) << k;
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

}  // namespace seq2adic
