"""Finite semigroups as multiplication tables, closures of concrete generators,
and the power structure of elements (index, period, idempotent power)."""

from __future__ import annotations

import math
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainError, FormatError, SizeCapError
from .exactla.fields import GF, is_prime

DEFAULT_CAP = 10_000
EAGER_ASSOCIATIVITY_LIMIT = 512

KINDS = ("transformation", "partial_injection", "matrix")


def default_cap() -> int:
    env = os.environ.get("SG_CLOSURE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise FormatError(f"SG_CLOSURE_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


@dataclass(frozen=True)
class Provenance:
    """Concrete realization of a closed semigroup.

    ``elements[i]`` is the concrete form of element ``i``; ``words[i]`` is the
    generator word (indices into ``generators``) that first reached it.
    Maps are 0-indexed tuples; partial injections use ``None`` for undefined
    points; matrices are tuples of rows of integer codes in F_q.
    """

    kind: str
    generators: tuple
    elements: tuple
    words: tuple
    degree: Optional[int] = None
    q: Optional[int] = None

    def index_of(self, concrete) -> int:
        try:
            return self._lookup[_freeze(self.kind, concrete)]
        except KeyError:
            raise DomainError(f"{concrete!r} is not an element of this semigroup") from None

    @property
    def _lookup(self):
        lookup = self.__dict__.get("_lookup_cache")
        if lookup is None:
            lookup = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_lookup_cache", lookup)
        return lookup


class IndexPeriod(NamedTuple):
    index: int
    period: int


class Semigroup:
    """Immutable finite semigroup given by its multiplication table.

    ``table[a, b]`` is the index of ``a*b``.  Lazily computed structure is
    cached on the instance; it is a pure function of the table, so duplicate
    computation under concurrent access is harmless.
    """

    def __init__(self, table, provenance: Optional[Provenance] = None, *, check: str = "auto"):
        try:
            arr = np.array(table, dtype=np.int64)
        except (ValueError, TypeError) as exc:
            raise FormatError("multiplication table must be a square array of integers") from exc
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise FormatError("multiplication table must be a nonempty square array")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise FormatError(f"table entries must lie in [0, {n})")
        arr.setflags(write=False)
        self.table = arr
        self.size = n
        self.provenance = provenance
        self._cache: dict = {}
        if check not in ("auto", "full", "spot", "none"):
            raise ValueError(f"unknown check mode {check!r}")
        if check == "full" or (check == "auto" and n <= EAGER_ASSOCIATIVITY_LIMIT):
            self.check_associativity()
        elif check in ("spot", "auto"):
            self.check_associativity(samples=20_000)

    def __len__(self):
        return self.size

    def __repr__(self):
        kind = self.provenance.kind if self.provenance else "table"
        return f"<Semigroup size={self.size} ({kind})>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *elements: int) -> int:
        acc = elements[0]
        for e in elements[1:]:
            acc = self.table[acc, e]
        return int(acc)

    def check_associativity(self, samples: Optional[int] = None) -> None:
        """Full cubic check by default; with ``samples`` only that many random triples."""
        t = self.table
        if samples is None:
            for a in range(self.size):
                # (a*b)*c vs a*(b*c) for all b, c at once
                left = t[t[a, :], :]
                right = t[a, :][t]
                if not np.array_equal(left, right):
                    b, c = map(int, np.argwhere(left != right)[0])
                    raise FormatError(f"table is not associative at ({a}, {b}, {c})")
            return
        rng = random.Random(0)
        for _ in range(samples):
            a, b, c = (rng.randrange(self.size) for _ in range(3))
            if t[t[a, b], c] != t[a, t[b, c]]:
                raise FormatError(f"table is not associative at ({a}, {b}, {c})")

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    @property
    def generator_ids(self) -> list[int]:
        """Element ids of a generating set: the closure generators, or every element."""
        def compute():
            if self.provenance is None:
                return list(range(self.size))
            return sorted({self.provenance.index_of(g) for g in self.provenance.generators})
        return self.cached("generator_ids", compute)

    def is_idempotent(self, s: int) -> bool:
        return self.table[s, s] == s

    @property
    def idempotents(self) -> list[int]:
        return [s for s in range(self.size) if self.table[s, s] == s]

    def concrete(self, s: int):
        if self.provenance is None:
            return None
        return self.provenance.elements[s]


# concrete products: (f*g)(x) = f(g(x)), so the right factor acts first

def _compose_maps(f, g):
    return tuple(f[y] for y in g)


def _compose_partial(f, g):
    return tuple(None if y is None else f[y] for y in g)


def _matmul_codes(field, a, b):
    add, mul = field.add_table, field.mul_table
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add[acc][mul[a[i][k]][b[k][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _freeze(kind, g):
    if kind == "matrix":
        return tuple(tuple(int(v) for v in row) for row in g)
    return tuple(None if v is None else int(v) for v in g)


def _validate_generators(kind, gens, degree, q):
    if not gens:
        raise FormatError("at least one generator is required")
    if kind in ("transformation", "partial_injection"):
        deg = degree if degree is not None else len(gens[0])
        for g in gens:
            if len(g) != deg:
                raise FormatError(f"generator {g!r} does not have degree {deg}")
            defined = [v for v in g if v is not None]
            if kind == "transformation" and len(defined) != deg:
                raise FormatError(f"transformation {g!r} has undefined points")
            if any(not 0 <= v < deg for v in defined):
                raise FormatError(f"generator {g!r} has images outside [0, {deg})")
            if kind == "partial_injection" and len(set(defined)) != len(defined):
                raise FormatError(f"partial injection {g!r} is not injective")
        return deg
    if kind == "matrix":
        if q is None:
            raise FormatError("matrix generators need the field order q")
        dim = len(gens[0])
        for g in gens:
            if len(g) != dim or any(len(row) != dim for row in g):
                raise FormatError(f"matrix generators must all be {dim}x{dim}")
            if any(not 0 <= v < q for row in g for v in row):
                raise FormatError(f"matrix entries must be codes in [0, {q})")
        return dim
    raise FormatError(f"unknown generator kind {kind!r}")


def close_generators(generators, kind: str = "transformation", *, degree: Optional[int] = None,
                     q: Optional[int] = None, cap: Optional[int] = None) -> Semigroup:
    """Close concrete generators under the product.

    Elements are numbered in breadth-first order of generator words, with
    words of equal length in lexicographic order, so output is deterministic.
    """
    cap = default_cap() if cap is None else cap
    gens = [_freeze(kind, g) for g in generators]
    degree = _validate_generators(kind, gens, degree, q)
    if kind == "transformation":
        mul = _compose_maps
    elif kind == "partial_injection":
        mul = _compose_partial
    else:
        field = GF(q)
        def mul(a, b):
            return _matmul_codes(field, a, b)

    elements, index, words, parent, last = [], {}, [], [], []

    def add(elem, word, par, gen):
        if len(elements) >= cap:
            raise SizeCapError(f"closure exceeds the cap of {cap} elements")
        index[elem] = len(elements)
        elements.append(elem)
        words.append(word)
        parent.append(par)
        last.append(gen)

    for gi, g in enumerate(gens):
        if g not in index:
            add(g, (gi,), None, gi)

    right = []
    queue = deque(range(len(elements)))
    while queue:
        i = queue.popleft()
        row = []
        for gi, g in enumerate(gens):
            b = mul(elements[i], g)
            if b not in index:
                add(b, words[i] + (gi,), i, gi)
                queue.append(len(elements) - 1)
            row.append(index[b])
        right.append(row)

    n = len(elements)
    right_np = np.array(right, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for b in range(n):
        if parent[b] is None:
            table[:, b] = right_np[:, last[b]]
        else:
            # a*b = (a*parent)*gen
            table[:, b] = right_np[table[:, parent[b]], last[b]]

    prov = Provenance(kind, tuple(gens), tuple(elements), tuple(words), degree=degree, q=q)
    return Semigroup(table, prov, check="none")


def _power_orbit(S: Semigroup, s: int):
    def compute():
        seen = {}
        seq = []
        cur, k = s, 1
        while cur not in seen:
            seen[cur] = k
            seq.append(cur)
            cur = int(S.table[cur, s])
            k += 1
        return seq, seen[cur]
    return S.cached(("orbit", s), compute)


def index_period(S: Semigroup, s: int) -> IndexPeriod:
    """Minimal (i, p) with s^i = s^(i+p)."""
    seq, first = _power_orbit(S, s)
    return IndexPeriod(first, len(seq) - first + 1)


def element_power(S: Semigroup, s: int, k: int) -> int:
    if k < 1:
        raise DomainError(f"exponent must be positive, got {k}")
    seq, index = _power_orbit(S, s)
    if k > len(seq):
        period = len(seq) - index + 1
        k = index + (k - index) % period
    return seq[k - 1]


def omega_plus(S: Semigroup, s: int, j: int = 0) -> int:
    """s^(omega+j); j = 0 gives the idempotent power of s."""
    if j < 0:
        raise DomainError(f"j must be nonnegative, got {j}")
    index, period = index_period(S, s)
    # the unique multiple of the period in [index, index + period)
    w = period * math.ceil(index / period)
    return element_power(S, s, w + j)


def is_group_element(S: Semigroup, s: int) -> bool:
    return index_period(S, s).index == 1


def group_element_order(S: Semigroup, g: int) -> int:
    index, period = index_period(S, g)
    if index != 1:
        raise DomainError(f"element {g} is not a group element")
    return period


def check_characteristic(p: int) -> None:
    if p != 0 and not is_prime(p):
        raise DomainError(f"characteristic must be 0 or a prime, got {p}")


def regular_modulus(S: Semigroup, p: int) -> tuple[int, frozenset]:
    """lcm of the orders of the p-regular group elements, and those elements."""
    check_characteristic(p)

    def compute():
        elems, n = [], 1
        for s in range(S.size):
            index, period = index_period(S, s)
            if index == 1 and (p == 0 or period % p):
                elems.append(s)
                n = math.lcm(n, period)
        return n, frozenset(elems)
    return S.cached(("regular_modulus", p), compute)


def omega_arrays(S: Semigroup) -> tuple[np.ndarray, np.ndarray]:
    """Vectors of s^omega and s^(omega+1) for every element."""
    def compute():
        w = np.array([omega_plus(S, s, 0) for s in range(S.size)], dtype=np.int64)
        w1 = S.table[np.arange(S.size), w]
        return w, w1
    return S.cached("omega", compute)
