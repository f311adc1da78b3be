"""The example families: full transformation monoids T_n, symmetric inverse
monoids I_n, matrix monoids M_n(F_q) and small group tables, together with
their standard representations and family-specific deciders."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .arith import FieldSpec
from .conjugacy import ConjugacyVerdict
from .core import Semigroup, close_generators
from .errors import DomainError, FormatError, UnsupportedError
from .exactla.fields import GF, QQ
from .exactla.matrix import ExactMatrix, similar

DEFAULT_LIMITS = {"tn": 4, "in": 3}
MATRIX_MONOIDS = {(2, 2), (2, 3)}


@dataclass(frozen=True)
class Transformation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if any(not 0 <= v < n for v in self.images):
            raise FormatError(f"images of {self.images} must lie in [0, {n})")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def one_line(cls, *images: int) -> Transformation:
        """From 1-indexed one-line notation, e.g. ``one_line(2, 3, 1)``."""
        return cls(tuple(v - 1 for v in images))

    def __mul__(self, other: Transformation) -> Transformation:
        return Transformation(tuple(self.images[y] for y in other.images))


@dataclass(frozen=True)
class PartialInjection:
    images: tuple[Optional[int], ...]

    def __post_init__(self):
        n = len(self.images)
        defined = [v for v in self.images if v is not None]
        if any(not 0 <= v < n for v in defined) or len(set(defined)) != len(defined):
            raise FormatError(f"{self.images} is not a partial injection of degree {n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: PartialInjection) -> PartialInjection:
        return PartialInjection(tuple(None if y is None else self.images[y] for y in other.images))


def _images(f) -> tuple:
    return f.images if isinstance(f, (Transformation, PartialInjection)) else tuple(f)


# generating sets

def _symmetric_generators(n: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(0,)]
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return [cycle] if n == 2 else [cycle, swap]


def full_transformation_monoid(n: int, cap: Optional[int] = None) -> Semigroup:
    gens = _symmetric_generators(n)
    if n > 1:
        gens.append((0, 0) + tuple(range(2, n)))
    return close_generators(gens, "transformation", degree=n, cap=cap)


def symmetric_inverse_monoid(n: int, cap: Optional[int] = None) -> Semigroup:
    gens: list[tuple] = list(_symmetric_generators(n))
    gens.append(tuple(range(n - 1)) + (None,))
    return close_generators(gens, "partial_injection", degree=n, cap=cap)


def _matrix_monoid_generators(n: int, q: int) -> list:
    F = GF(q)
    # a generator of the multiplicative group
    prim = next(a for a in range(1, q)
                if len({(F.elements[a] ** k).value for k in range(q - 1)}) == q - 1)

    def ident():
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    gens = []
    d = ident()
    d[0][0] = prim
    gens.append(d)
    for i in range(n):
        for j in range(n):
            if i != j:
                m = ident()
                m[i][j] = 1
                gens.append(m)
    if n > 1:
        m = ident()
        m[0][0], m[0][1], m[1][0], m[1][1] = 0, 1, 1, 0
        gens.append(m)
    m = ident()
    m[n - 1][n - 1] = 0
    gens.append(m)
    return gens


def matrix_monoid(n: int, q: int, cap: Optional[int] = None) -> Semigroup:
    """The full monoid M_n(F_q): GL_n(F_q) (transvections and a scaling) plus a corank-1 idempotent."""
    return close_generators(_matrix_monoid_generators(n, q), "matrix", q=q, cap=cap)


def cyclic_group(n: int) -> Semigroup:
    """Z_n with element k standing for g^k (0 is the identity, 1 the generator)."""
    return Semigroup([[(a + b) % n for b in range(n)] for a in range(n)])


def klein_four() -> Semigroup:
    return Semigroup([[a ^ b for b in range(4)] for a in range(4)])


# quaternion units as (sign, unit) with unit in 1, i, j, k -> 0..3
_QUAT = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group() -> Semigroup:
    """Q_8 with elements 1, i, j, k, -1, -i, -j, -k in that order."""
    def code(sign, unit):
        return unit + (0 if sign > 0 else 4)

    table = []
    for a in range(8):
        row = []
        for b in range(8):
            sign, unit = _QUAT[(a % 4, b % 4)]
            if (a >= 4) != (b >= 4):
                sign = -sign
            row.append(code(sign, unit))
        table.append(row)
    return Semigroup(table)


def symmetric_group(n: int) -> Semigroup:
    return close_generators(_symmetric_generators(n), "transformation", degree=n)


def named_group(name: str) -> Semigroup:
    name = name.lower()
    if name.startswith("z") and name[1:].isdigit():
        n = int(name[1:])
        if not 1 <= n <= 12:
            raise DomainError("cyclic groups z1 .. z12 are built in")
        return cyclic_group(n)
    if name == "s3":
        return symmetric_group(3)
    if name == "q8":
        return quaternion_group()
    if name in ("z2xz2", "v4", "klein"):
        return klein_four()
    raise DomainError(f"unknown group {name!r}; built in: z1..z12, s3, q8, z2xz2")


def build_family(kind: str, *args, cap: Optional[int] = None) -> Semigroup:
    """``build_family("tn", 3)``, ``("in", 3)``, ``("mat", 2, 2)`` or ``("group", "s3")``."""
    kind = kind.lower()
    if kind == "tn":
        (n,) = args
        _check_degree(n, DEFAULT_LIMITS["tn"], cap)
        return full_transformation_monoid(n, cap=cap)
    if kind == "in":
        (n,) = args
        _check_degree(n, DEFAULT_LIMITS["in"], cap)
        return symmetric_inverse_monoid(n, cap=cap)
    if kind == "mat":
        n, q = args
        if (n, q) not in MATRIX_MONOIDS and cap is None:
            raise DomainError(f"M_{n}(F_{q}) is outside the built-in range {sorted(MATRIX_MONOIDS)}")
        return matrix_monoid(n, q, cap=cap)
    if kind == "group":
        (name,) = args
        return named_group(name)
    raise DomainError(f"unknown family {kind!r}; use tn, in, mat or group")


def _check_degree(n, limit, cap):
    if n < 1:
        raise DomainError("degree must be at least 1")
    if n > limit and cap is None:
        raise DomainError(f"degree {n} exceeds the built-in limit {limit}; pass a cap to force it")


# maps

def standard_representation(f, field=QQ) -> ExactMatrix:
    """rho(f)[i][j] = 1 iff f(j) = i; columns of undefined points are zero."""
    imgs = _images(f)
    n = len(imgs)
    return ExactMatrix(field, [[1 if imgs[j] == i else 0 for j in range(n)] for i in range(n)])


def matrix_of(codes, q: int) -> ExactMatrix:
    """A matrix given by F_q element codes, as used in matrix-monoid provenance."""
    F = GF(q)
    return ExactMatrix(F, [[F.element(v) for v in row] for row in codes])


def map_rank(f) -> int:
    return len({v for v in _images(f) if v is not None})


def map_power(f, k: int) -> tuple:
    imgs = _images(f)
    out = tuple(range(len(imgs)))
    for _ in range(k):
        out = tuple(None if y is None else imgs[y] for y in out)
    return out


def _cycles(imgs) -> list[list[int]]:
    """Cycles of the functional graph of a (partial) map."""
    n = len(imgs)
    state = [0] * n  # 0 new, 1 on current path, 2 done
    cycles = []
    for start in range(n):
        path = []
        i = start
        while i is not None and state[i] == 0:
            state[i] = 1
            path.append(i)
            i = imgs[i]
        if i is not None and state[i] == 1:
            cycles.append(path[path.index(i):])
        for v in path:
            state[v] = 2
    return cycles


def eventual_image_cycle_type(f) -> tuple[int, ...]:
    """Cycle type of f acting on the image of its idempotent power (the points on cycles)."""
    return tuple(sorted((len(c) for c in _cycles(_images(f))), reverse=True))


def rank_sequence_of_map(f, length: Optional[int] = None) -> tuple[int, ...]:
    """(rank f, rank f^2, ..., rank f^length), length defaulting to the degree."""
    imgs = _images(f)
    length = len(imgs) if length is None else length
    ranks = []
    cur = imgs
    for _ in range(length):
        ranks.append(map_rank(cur))
        cur = tuple(None if y is None else imgs[y] for y in cur)
    return tuple(ranks)


def _tree_code(v, children, on_cycle) -> str:
    kids = sorted(_tree_code(c, children, on_cycle) for c in children[v] if not on_cycle[c])
    return "(" + "".join(kids) + ")"


def digraph_canonical_form(f) -> tuple:
    """Isomorphism invariant of a functional digraph.

    Each component is a cycle with rooted trees hanging off its nodes; it is
    encoded by the least rotation of the sequence of tree codes around the
    cycle, and the digraph by the sorted list of component codes.
    """
    imgs = _images(f)
    n = len(imgs)
    if any(v is None for v in imgs):
        raise DomainError("functional digraphs need total maps")
    children: list[list[int]] = [[] for _ in range(n)]
    for i, v in enumerate(imgs):
        children[v].append(i)
    cycles = _cycles(imgs)
    on_cycle = [False] * n
    for cyc in cycles:
        for v in cyc:
            on_cycle[v] = True
    components = []
    for cyc in cycles:
        codes = [_tree_code(v, children, on_cycle) for v in cyc]
        components.append(min(tuple(codes[k:] + codes[:k]) for k in range(len(codes))))
    return tuple(sorted(components))


def functional_digraph_isomorphic(f, g) -> bool:
    if len(_images(f)) != len(_images(g)):
        raise DomainError("maps of different degree")
    return digraph_canonical_form(f) == digraph_canonical_form(g)


def partial_injection_type(f) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(cycle lengths, chain lengths): the S_n-conjugacy invariant of a partial injection."""
    imgs = _images(f)
    cycles = _cycles(imgs)
    in_image = {v for v in imgs if v is not None}
    chains = []
    for start in range(len(imgs)):
        if start in in_image:
            continue
        length, i = 0, start
        while i is not None:
            length += 1
            i = imgs[i]
        chains.append(length)
    return (tuple(sorted((len(c) for c in cycles), reverse=True)),
            tuple(sorted(chains, reverse=True)))


def conjugate_by(sigma: Sequence[int], f) -> tuple:
    """sigma f sigma^-1 for a permutation sigma and a (partial) map f."""
    imgs = _images(f)
    out: list = [None] * len(imgs)
    for i, v in enumerate(imgs):
        out[sigma[i]] = None if v is None else sigma[v]
    return tuple(out)


def symmetric_orbits(maps) -> list[list[int]]:
    """Brute-force orbits of S_n acting by conjugation on a list of maps (indices into the list)."""
    maps = [tuple(_images(m)) for m in maps]
    if not maps:
        return []
    n = len(maps[0])
    index = {m: i for i, m in enumerate(maps)}
    seen: set[int] = set()
    orbits = []
    sigmas = list(permutations(range(n)))
    for i, m in enumerate(maps):
        if i in seen:
            continue
        orbit = sorted({index[conjugate_by(s, m)] for s in sigmas})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def fast_path_decide(family: str, s, t, fld: FieldSpec) -> ConjugacyVerdict:
    """Family-specific decision of linear conjugacy.

    ``tn``: equal ranks of f^i, i <= n, and equal eventual cycle types (over C);
    ``in``: conjugacy by a permutation (over C);
    ``mat``: similarity over F_q, for the field F_q itself.
    """
    family = family.lower()
    if family in ("tn", "in"):
        if fld.kind != "C":
            raise UnsupportedError(f"the {family} fast path is only established over C")
        if family == "tn":
            rs, rt = rank_sequence_of_map(s), rank_sequence_of_map(t)
            if rs != rt:
                return ConjugacyVerdict(False, failed_condition="RankSequence",
                                        evidence={"s": list(rs), "t": list(rt)})
            cs, ct = eventual_image_cycle_type(s), eventual_image_cycle_type(t)
            if cs != ct:
                return ConjugacyVerdict(False, failed_condition="CycleType",
                                        evidence={"s": list(cs), "t": list(ct)})
            return ConjugacyVerdict(True, evidence={"rank_sequence": list(rs), "cycle_type": list(cs)})
        ts, tt = partial_injection_type(s), partial_injection_type(t)
        if ts != tt:
            return ConjugacyVerdict(False, failed_condition="PermutationConjugacy",
                                    evidence={"s": [list(x) for x in ts], "t": [list(x) for x in tt]})
        return ConjugacyVerdict(True, evidence={"cycles": list(ts[0]), "chains": list(ts[1])})
    if family == "mat":
        if not isinstance(s, ExactMatrix) or not isinstance(t, ExactMatrix):
            raise DomainError("the mat fast path takes ExactMatrix arguments")
        if fld.kind != "F" or s.field is not GF(fld.q):
            raise UnsupportedError("the mat fast path needs the field F_q of the matrices")
        ok = similar(s, t)
        return ConjugacyVerdict(ok, failed_condition=None if ok else "Similarity")
    raise UnsupportedError(f"no fast path for family {family!r}")
