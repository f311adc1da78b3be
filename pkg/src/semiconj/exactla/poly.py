"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

from itertools import product


class Poly:
    """Coefficients are stored low degree first with no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly(self.field, (other,))

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result, base = Poly(self.field, (1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = self.field.one / other.lead
        quot = [self.field.zero] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                c = c * inv_lead
                quot[k - dq] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - dq + i] = rem[k - dq + i] - c * b
        return Poly(self.field, quot), Poly(self.field, rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = self.field.one / self.lead
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __call__(self, value):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [self.field.dump(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == self.field.one and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def monic_polys(field, degree: int):
    """All monic polynomials of the given degree over a finite field."""
    for tail in product(field.elements, repeat=degree):
        yield Poly(field, tail + (field.one,))


def is_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg f / 2 (finite fields only)."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if not f % g:
                return False
    return True


def factor_over_finite_field(f: Poly) -> list[Poly]:
    """Monic irreducible factors with multiplicity, by trial division. Small degrees only."""
    f = f.monic()
    factors = []
    d = 1
    while f.degree >= 1:
        if 2 * d > f.degree:
            factors.append(f)
            break
        # every lower-degree factor is gone, so any monic divisor of degree d is irreducible
        for g in monic_polys(f.field, d):
            while not f % g:
                factors.append(g)
                f = f // g
        d += 1
    return factors


def cyclotomic(field, n: int) -> Poly:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by the lower ones."""
    x = Poly.x(field)
    f = x ** n - 1
    for d in range(1, n):
        if n % d == 0:
            f = f // cyclotomic(field, d)
    return f
