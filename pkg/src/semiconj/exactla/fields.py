"""Exact scalar fields: the rationals and small finite fields F_q.

Rationals are plain :class:`fractions.Fraction` values.  Elements of F_q are
:class:`FqElement` instances wrapping an integer code in ``[0, q)``; for
``q = p**e`` the base-``p`` digits of the code are the coefficients (low
degree first) of the element in the polynomial basis ``1, a, a**2, ...``
where ``a`` is a root of the field's defining polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from ..errors import DomainError, FormatError

# Conway polynomials, coefficients low degree first, monic.
CONWAY = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    9: (2, 2, 1),
    27: (1, 2, 0, 1),
    25: (2, 4, 1),
    49: (3, 6, 1),
}

MAX_EXTENSION_ORDER = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise DomainError."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise DomainError(f"{q} is not a prime power")
    return p, e


class Rationals:
    tag = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def parse(self, value) -> Fraction:
        if isinstance(value, bool):
            raise FormatError(f"not a rational: {value!r}")
        if isinstance(value, (int, str)):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise FormatError(f"not a rational: {value!r}") from exc
        raise FormatError(f"not a rational: {value!r}")

    def dump(self, value: Fraction) -> str:
        return str(value)

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = Rationals()


class FiniteField:
    """The field with ``q`` elements, ``q = p**e <= 64`` when ``e > 1``."""

    def __init__(self, q: int):
        p, e = prime_power(q)
        if e > 1 and q not in CONWAY:
            raise DomainError(
                f"F_{q} is not supported (prime powers up to {MAX_EXTENSION_ORDER} only)")
        self.q, self.p, self.degree = q, p, e
        self.characteristic = p
        self.tag = f"F{q}"
        self.modulus = CONWAY.get(q, (0, 1))
        self._build_tables()
        self.elements = tuple(FqElement(self, v) for v in range(q))
        self.zero = self.elements[0]
        self.one = self.elements[1]

    def _digits(self, v):
        return [(v // self.p ** i) % self.p for i in range(self.degree)]

    def _code(self, digits):
        return sum(c * self.p ** i for i, c in enumerate(digits))

    def _build_tables(self):
        q, p, e = self.q, self.p, self.degree
        if e == 1:
            self.add_table = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            digits = [self._digits(v) for v in range(q)]
            self.add_table = [
                [self._code([(x + y) % p for x, y in zip(digits[a], digits[b])])
                 for b in range(q)]
                for a in range(q)
            ]
            self.mul_table = [[self._polymul_mod(digits[a], digits[b]) for b in range(q)]
                              for a in range(q)]
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [None] + [self.mul_table[a].index(1) for a in range(1, q)]

    def _polymul_mod(self, a, b):
        p, e, mod = self.p, self.degree, self.modulus
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                for i in range(e + 1):
                    prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
        return self._code(prod[:e])

    def __call__(self, value) -> FqElement:
        if isinstance(value, FqElement):
            if value.field is not self:
                raise DomainError(f"element of {value.field.tag} used in {self.tag}")
            return value
        if isinstance(value, Fraction):
            if value.denominator != 1:
                value = Fraction(value.numerator) * pow(value.denominator, -1, self.p)
            value = value.numerator
        # integers embed through the prime subfield
        return self.elements[int(value) % self.p]

    def element(self, code: int) -> FqElement:
        """Element by integer code (see module docstring)."""
        if not 0 <= code < self.q:
            raise FormatError(f"{code} is not an element code of {self.tag}")
        return self.elements[code]

    def parse(self, value) -> FqElement:
        if isinstance(value, bool) or not isinstance(value, int):
            raise FormatError(f"entries of {self.tag} matrices must be integers, got {value!r}")
        return self.element(value)

    def dump(self, value: FqElement) -> int:
        return value.value

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (GF, (self.q,))


@cache
def GF(q: int) -> FiniteField:
    return FiniteField(q)


class FqElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.field is not self.field:
                raise DomainError("mixing elements of different finite fields")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self.field.elements[self.field.add_table[self.value][b]]

    __radd__ = __add__

    def __neg__(self):
        return self.field.elements[self.field.neg_table[self.value]]

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self + self.field.elements[self.field.neg_table[b]]

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self.field.elements[self.field.mul_table[self.value][b]]

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field.tag}")
        return self.field.elements[self.field.inv_table[self.value]]

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * self.field.elements[b].inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FqElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


def field_from_tag(tag: str):
    """``"Q"`` or ``"F<q>"``."""
    if tag == "Q":
        return QQ
    if isinstance(tag, str) and tag.startswith("F") and tag[1:].isdigit():
        return GF(int(tag[1:]))
    raise FormatError(f"unknown matrix field tag {tag!r}")
