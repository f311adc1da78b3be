"""Field descriptors, the Galois subgroup H of the units mod n, and p-regular parts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .core import Semigroup, check_characteristic, element_power, group_element_order, omega_plus
from .errors import DomainError, FormatError
from .exactla.fields import is_prime, prime_power

MAX_MODULUS = 10**6

KIND_NAMES = ("C", "R", "Q", "F", "custom")


@dataclass(frozen=True)
class FieldSpec:
    """Scalar field descriptor.

    ``kind`` is ``"C"``, ``"R"``, ``"Q"``, ``"F"`` (finite field with ``q``
    elements) or ``"custom"`` (characteristic ``p`` plus explicit generators
    of H, e.g. to describe a cyclotomic base field).
    """

    kind: str
    q: Optional[int] = None
    p: int = 0
    h_generators: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        if self.kind not in KIND_NAMES:
            raise FormatError(f"unknown field kind {self.kind!r}")
        if self.kind == "F":
            if self.q is None:
                raise FormatError("finite field needs q")
            p, _ = prime_power(self.q)
            object.__setattr__(self, "p", p)
        elif self.kind == "custom":
            check_characteristic(self.p)
        elif self.p != 0:
            raise FormatError(f"field {self.kind} has characteristic 0")

    @classmethod
    def complex(cls):
        return cls("C")

    @classmethod
    def reals(cls):
        return cls("R")

    @classmethod
    def rationals(cls):
        return cls("Q")

    @classmethod
    def finite(cls, q: int):
        return cls("F", q=q)

    @classmethod
    def custom(cls, p: int, generators):
        return cls("custom", p=p, h_generators=tuple(int(g) for g in generators))

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """``C``, ``R``, ``Q``, ``F<q>`` or ``custom:<p>:<g1,g2,...>``."""
        text = text.strip()
        if text in ("C", "R", "Q"):
            return cls(text)
        if text.startswith("F") and text[1:].isdigit():
            try:
                return cls.finite(int(text[1:]))
            except DomainError as exc:
                raise FormatError(str(exc)) from exc
        if text.startswith("custom:"):
            parts = text.split(":")
            if len(parts) != 3:
                raise FormatError(f"bad custom field {text!r}; expected custom:<p>:<g1,g2,...>")
            try:
                p = int(parts[1])
                gens = [int(g) for g in parts[2].split(",") if g.strip()]
            except ValueError:
                raise FormatError(f"bad custom field {text!r}") from None
            return cls.custom(p, gens)
        raise FormatError(f"unknown field {text!r}; use C, R, Q, F<q> or custom:<p>:<gens>")

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        if self.kind == "F":
            return f"F{self.q}"
        if self.kind == "custom":
            return f"custom:{self.p}:{','.join(map(str, self.h_generators))}"
        return self.kind


@dataclass(frozen=True)
class GaloisSubgroup:
    modulus: int
    members: tuple[int, ...]
    generators: tuple[int, ...]

    def __contains__(self, j: int) -> bool:
        return any((j - m) % self.modulus == 0 for m in self.members)

    @property
    def is_full_unit_group(self) -> bool:
        return len(self.members) == len(unit_group(self.modulus))


def unit_group(n: int) -> list[int]:
    """Representatives of Z_n^x in [1, n); {1} for n <= 2."""
    if n <= 2:
        return [1]
    return [a for a in range(1, n) if math.gcd(a, n) == 1]


def generated_subgroup(generators, n: int) -> tuple[int, ...]:
    if n <= 2:
        return (1,)
    members = {1}
    frontier = [1]
    gens = [g % n for g in generators]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = a * g % n
            if b not in members:
                members.add(b)
                frontier.append(b)
    return tuple(sorted(members))


def galois_subgroup(field: FieldSpec, n: int) -> GaloisSubgroup:
    """The image of Gal(k(xi)/k) in Z_n^x for xi a primitive n-th root of unity."""
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if n > MAX_MODULUS:
        raise DomainError(f"modulus {n} exceeds the bound {MAX_MODULUS}")
    p = field.characteristic
    if p and n % p == 0:
        raise DomainError(f"characteristic {p} divides the modulus {n}")
    if field.kind == "C":
        gens = (1,)
    elif field.kind == "R":
        gens = (n - 1,) if n > 2 else (1,)
    elif field.kind == "Q":
        return GaloisSubgroup(n, tuple(unit_group(n)), tuple(unit_group(n)))
    elif field.kind == "F":
        # Frobenius xi -> xi^q
        gens = (field.q % n,) if n > 1 else (1,)
    else:
        gens = field.h_generators
        for g in gens:
            if n > 1 and math.gcd(g, n) != 1:
                raise DomainError(f"generator {g} is not a unit modulo {n}")
    return GaloisSubgroup(n, generated_subgroup(gens, n), tuple(gens))


def crt_exponents(N: int, p: int) -> tuple[int, int]:
    """Exponents (m, n) with g^m the p-part and g^n the p'-part of an element of order N."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if N < 1:
        raise DomainError(f"order must be positive, got {N}")
    pk = 1
    r = N
    while r % p == 0:
        r //= p
        pk *= p
    m = next(x for x in range(1, N + 1) if x % pk == 1 % pk and x % r == 0)
    n = next(x for x in range(1, N + 1) if x % pk == 0 and x % r == 1 % r)
    return m, n


@dataclass(frozen=True)
class PRegularParts:
    p_part: int
    p_prime_part: int


def p_regular_parts(S: Semigroup, s: int, p: int) -> PRegularParts:
    """(s(p), s(p')) for the group element s^(omega+1)."""
    check_characteristic(p)
    if p == 0:
        return PRegularParts(omega_plus(S, s, 0), omega_plus(S, s, 1))
    g = omega_plus(S, s, 1)
    m, n = crt_exponents(group_element_order(S, g), p)
    return PRegularParts(element_power(S, g, m), element_power(S, g, n))
