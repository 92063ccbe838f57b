#pragma once

#include "seq2adic/adic.hpp"
#include "seq2adic/numtheory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seq2adic {

/// One executable check.  `passed` is a bit-for-bit congruence/equality
/// verdict; on failure `detail` carries the mismatching values in full
/// decimal so the discrepancy is reproducible.
struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// The machine-checked image of the closed-form derivation for one pair.
/// `checks` always holds exactly twelve entries, in this order:
///   lemma1a, lemma1b, lemma1c, lemma1d, eq2, lemma3_modp, lemma3_modq,
///   lemma2_coprime, lemma2_product, lemma2_gcd_pq, theorem_oracle,
///   exclusivity.
struct VerificationCertificate {
    PrimePair pair;
    std::vector<CheckResult> checks;
    bool all_passed;
};

/// Runs all twelve checks against a caller-supplied report (the report is
/// normally the output of analyze; feeding a doctored one exercises the
/// failure paths).  A failing check never aborts the rest.
VerificationCertificate verify_pair(const PrimePair& pair, const ComplexityReport& report);

/// Runs all twelve checks for one pair.  Failures are data, not errors.
VerificationCertificate verify_pair(const PrimePair& pair);

struct SweepEntry {
    ComplexityReport report;
    VerificationCertificate certificate;
};

/// Every ordered pair (p, q) of distinct odd primes with p*q <= max_n, in
/// lexicographic order.  Empty when max_n < 15.
std::vector<PrimePair> enumerate_pairs(std::uint64_t max_n);

/// Analyzes and verifies every pair with p*q <= max_n.  Pairs may be
/// processed by up to `workers` threads; the result is in lexicographic
/// (p, q) order and identical for any worker count.
std::vector<SweepEntry> sweep(std::uint64_t max_n, unsigned workers = 1);

/// The swept pairs whose complexity is strictly below the maximum (d > 1).
std::vector<PrimePair> find_nontrivial(std::uint64_t max_n);

}  // namespace seq2adic
