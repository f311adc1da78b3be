"""Exact linear algebra over Q and F_q: the independent similarity oracle."""

from .fields import GF, QQ, FiniteField, FqElement, field_from_tag, is_prime, prime_power
from .matrix import (
    ExactMatrix,
    FittingSplit,
    InvariantFactors,
    RankSequence,
    companion,
    cycle_type,
    fitting_split,
    invariant_factors,
    kovacs_conjugate,
    permutation_cycle_type,
    rank_sequence,
    same_span,
    similar,
)
from .poly import Poly, cyclotomic, factor_over_finite_field, is_irreducible

__all__ = [
    "GF", "QQ", "FiniteField", "FqElement", "field_from_tag", "is_prime", "prime_power",
    "ExactMatrix", "FittingSplit", "InvariantFactors", "RankSequence", "companion",
    "cycle_type", "fitting_split", "invariant_factors", "kovacs_conjugate",
    "permutation_cycle_type", "rank_sequence", "same_span", "similar",
    "Poly", "cyclotomic", "factor_over_finite_field", "is_irreducible",
]
