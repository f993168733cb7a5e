"""Weight distributions of irreducible cyclic codes of dimension one and two.

Closed-form predictions (:mod:`irrcodes.predict`) checked against exhaustive
codeword enumeration (:mod:`irrcodes.codes`) over table-driven finite fields
(:mod:`irrcodes.field`).
"""

from .codes import (
    CodeSpec,
    WeightDistribution,
    analyze_code,
    generator_polynomial,
    weight_distribution_bruteforce,
    weight_distribution_trace,
)
from .field import FieldSpec, build_field
from .poly import CyclotomicCoset, Polynomial, cyclotomic_coset, minimal_polynomial
from .predict import (
    NotClassifiable,
    Prediction,
    SemiprimitiveCheck,
    check_semiprimitive,
    classify_dim2,
    classify_from_exponent,
    lemma1_parity,
    multiplicative_order,
    one_weight_distribution,
    table1_distribution,
)

__all__ = [
    "CodeSpec", "CyclotomicCoset", "FieldSpec", "NotClassifiable", "Polynomial", "Prediction",
    "SemiprimitiveCheck", "WeightDistribution", "analyze_code", "build_field",
    "check_semiprimitive", "classify_dim2", "classify_from_exponent", "cyclotomic_coset",
    "generator_polynomial", "lemma1_parity", "minimal_polynomial", "multiplicative_order",
    "one_weight_distribution", "table1_distribution", "weight_distribution_bruteforce",
    "weight_distribution_trace",
]
