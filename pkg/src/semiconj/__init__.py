"""Exact decision of linear conjugacy in finite semigroups over a chosen field."""

__version__ = "0.1.0"

from .arith import FieldSpec, GaloisSubgroup, crt_exponents, galois_subgroup, p_regular_parts
from .conjugacy import (
    ConjugacyVerdict,
    Witness,
    char_equivalent,
    conjugacy_partition,
    generalized_conjugates,
    linear_conjugate,
    power_j_condition,
    q_character_equivalent,
)
from .core import (
    IndexPeriod,
    Semigroup,
    close_generators,
    element_power,
    group_element_order,
    index_period,
    omega_plus,
    regular_modulus,
)
from .errors import DomainError, FormatError, SemigroupError, SizeCapError, UnsupportedError
from .families import build_family, fast_path_decide, standard_representation
from .formats import dump_semigroup, load_semigroup, read_semigroup
from .green import GreenClasses, MaximalSubgroup, green_classes, j_equivalent, maximal_subgroup, principal_ideals
from .oracle import oracle_verify

__all__ = [
    "FieldSpec", "GaloisSubgroup", "crt_exponents", "galois_subgroup", "p_regular_parts",
    "ConjugacyVerdict", "Witness", "char_equivalent", "conjugacy_partition",
    "generalized_conjugates", "linear_conjugate", "power_j_condition", "q_character_equivalent",
    "IndexPeriod", "Semigroup", "close_generators", "element_power", "group_element_order",
    "index_period", "omega_plus", "regular_modulus",
    "DomainError", "FormatError", "SemigroupError", "SizeCapError", "UnsupportedError",
    "GreenClasses", "MaximalSubgroup", "green_classes", "j_equivalent", "maximal_subgroup",
    "principal_ideals",
    "build_family", "fast_path_decide", "standard_representation",
    "dump_semigroup", "load_semigroup", "read_semigroup", "oracle_verify",
]
