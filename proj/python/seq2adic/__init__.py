"""Exact 2-adic complexity of generalized binary sequences of order 2 over Z_pq.

The heavy lifting lives in the compiled extension ``_seq2adic``; this package
re-exports its surface unchanged.
"""

from ._seq2adic import (  # noqa: F401
    BinarySequence,
    CheckResult,
    ClosedForm,
    ComplexityReport,
    CongruenceSides,
    DefinitionalComplexity,
    GaussSums,
    PrimePair,
    ResidueClass,
    ShortcutConditions,
    SweepEntry,
    VerificationCertificate,
    __version__,
    analyze,
    classify,
    closed_form,
    definitional_complexity,
    definitional_complexity_bits,
    doubled_s2_identity,
    enumerate_pairs,
    find_nontrivial,
    gauss_sums,
    gcd,
    generate,
    is_prime,
    legendre_symbol,
    lower_bound,
    mersenne,
    mod_mersenne,
    neg_one_symbol,
    odd_part,
    s_of_two,
    s_of_two_bits,
    shortcut_conditions,
    sweep,
    verify_pair,
)

__all__ = [
    "BinarySequence",
    "CheckResult",
    "ClosedForm",
    "ComplexityReport",
    "CongruenceSides",
    "DefinitionalComplexity",
    "GaussSums",
    "PrimePair",
    "ResidueClass",
    "ShortcutConditions",
    "SweepEntry",
    "VerificationCertificate",
    "__version__",
    "analyze",
    "classify",
    "closed_form",
    "definitional_complexity",
    "definitional_complexity_bits",
    "doubled_s2_identity",
    "enumerate_pairs",
    "find_nontrivial",
    "gauss_sums",
    "gcd",
    "generate",
    "is_prime",
    "legendre_symbol",
    "lower_bound",
    "mersenne",
    "mod_mersenne",
    "neg_one_symbol",
    "odd_part",
    "s_of_two",
    "s_of_two_bits",
    "shortcut_conditions",
    "sweep",
    "verify_pair",
]
