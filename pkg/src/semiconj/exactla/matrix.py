"""Dense exact matrices and the similarity oracle built on them.

Everything here is exact: entries are Fractions or F_q elements, ranks come
from Gaussian elimination, and similarity is decided by comparing the
invariant factors of ``xI - M`` (Smith normal form over ``field[x]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import DomainError, FormatError, UnsupportedError
from .fields import QQ, field_from_tag
from .poly import Poly


class ExactMatrix:
    """Immutable dense matrix over ``QQ`` or a finite field."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field, rows):
        rows = tuple(tuple(field(v) for v in row) for row in rows)
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise FormatError("ragged matrix rows")
        self._hash = None

    @classmethod
    def identity(cls, field, n: int) -> ExactMatrix:
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> ExactMatrix:
        return cls(field, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field, columns, nrows: int) -> ExactMatrix:
        return cls(field, [[col[i] for col in columns] for i in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, list(zip(*self.rows)) if self.rows else [])

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.field is not other.field:
            raise DomainError(f"cannot multiply {self.field.tag} and {other.field.tag} matrices")
        if self.ncols != other.nrows:
            raise DomainError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        zero = self.field.zero
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(self.field, out)

    def __pow__(self, k: int) -> ExactMatrix:
        if not self.is_square:
            raise DomainError("power of a non-square matrix")
        if k < 0:
            raise DomainError("negative matrix power")
        result, base = ExactMatrix.identity(self.field, self.nrows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.field, [[a - b for a, b in zip(r, s)]
                                        for r, s in zip(self.rows, other.rows)])

    def submatrix(self, rows, cols) -> ExactMatrix:
        return ExactMatrix(self.field, [[self.rows[i][j] for j in cols] for i in rows])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field is other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.tag, self.rows))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.field.tag}, {[list(r) for r in self.rows]})"

    def to_json(self) -> dict:
        return {"field": self.field.tag,
                "entries": [[self.field.dump(v) for v in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> ExactMatrix:
        try:
            field = field_from_tag(obj["field"])
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise FormatError("matrix JSON needs 'field' and 'entries'") from exc
        return cls(field, [[field.parse(v) for v in row] for row in entries])

    # elimination

    def echelon(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form as mutable rows, plus the pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, self.nrows) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = self.field.one / rows[r][c]
            rows[r] = [v * inv for v in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def column_space(self) -> list[tuple]:
        """A basis of the column space: the pivot columns of the matrix itself."""
        _, pivots = self.echelon()
        return [self.column(j) for j in pivots]

    def nullspace(self) -> list[tuple]:
        rows, pivots = self.echelon()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for fcol in free:
            v = [self.field.zero] * self.ncols
            v[fcol] = self.field.one
            for i, pc in enumerate(pivots):
                v[pc] = -rows[i][fcol]
            basis.append(tuple(v))
        return basis


def span_rank(field, vectors, dim: int) -> int:
    if not vectors:
        return 0
    return ExactMatrix.from_columns(field, vectors, dim).rank()


def same_span(field, us, vs, dim: int) -> bool:
    """Do two lists of column vectors span the same subspace of field^dim?"""
    ru, rv = span_rank(field, us, dim), span_rank(field, vs, dim)
    return ru == rv == span_rank(field, list(us) + list(vs), dim)


def companion(poly: Poly) -> ExactMatrix:
    """Companion matrix of a monic polynomial (ones on the subdiagonal, last column = -coeffs)."""
    poly = poly.monic()
    n = poly.degree
    if n < 1:
        raise DomainError("companion matrix needs a nonconstant polynomial")
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -poly.coeffs[i]
    return ExactMatrix(poly.field, rows)


@dataclass(frozen=True)
class RankSequence:
    """Ranks of M, M^2, ..., M^m where m is the first index with rank M^m = rank M^(m+1).

    ``dims`` stops at the first stable value; ``stable`` is that value, which
    every later power repeats.
    """

    dims: tuple[int, ...]
    stable: int

    @property
    def stabilization_index(self) -> int:
        return len(self.dims)

    def prefix(self, k: int) -> tuple[int, ...]:
        """The first k terms of the full (infinite) sequence."""
        return self.dims[:k] + (self.stable,) * max(0, k - len(self.dims))


@dataclass(frozen=True)
class FittingSplit:
    eventual_range_basis: tuple[tuple, ...]
    eventual_kernel_basis: tuple[tuple, ...]
    stabilization_index: int


@dataclass(frozen=True)
class InvariantFactors:
    factors: tuple[Poly, ...]

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]


def _require_square(M: ExactMatrix):
    if not M.is_square:
        raise DomainError(f"expected a square matrix, got shape {M.shape}")


def _powers_until_stable(M: ExactMatrix):
    """Yield (k, M^k, rank) for k = 1, 2, ... up to the first k with rank M^k = rank M^(k+1)."""
    power, prev_rank = M, None
    k = 1
    while True:
        r = power.rank()
        if prev_rank is not None and r == prev_rank:
            return
        yield k, power, r
        prev_rank = r
        power = power @ M
        k += 1


def rank_sequence(M: ExactMatrix) -> RankSequence:
    _require_square(M)
    if M.nrows == 0:
        return RankSequence((), 0)
    dims = [r for _, _, r in _powers_until_stable(M)]
    return RankSequence(tuple(dims), dims[-1])


def fitting_split(M: ExactMatrix) -> FittingSplit:
    """Bases of the eventual range im M^m and eventual kernel ker M^m."""
    _require_square(M)
    if M.nrows == 0:
        return FittingSplit((), (), 0)
    # image chain stabilizes exactly when the kernel chain does (rank-nullity)
    m, power = 0, None
    for k, pk, _ in _powers_until_stable(M):
        m, power = k, pk
    return FittingSplit(tuple(power.column_space()), tuple(power.nullspace()), m)


def _smith_diagonal(A: list[list[Poly]]) -> list[Poly]:
    n = len(A)
    diag = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if A[i][j] and (best is None or A[i][j].degree < A[best[0]][best[1]].degree):
                        best = (i, j)
            if best is None:
                # remaining block is zero
                diag.extend(Poly(A[0][0].field) for _ in range(t, n))
                return diag
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            pivot = A[t][t]
            clean = True
            for i in range(t + 1, n):
                if A[i][t]:
                    q, r = divmod(A[i][t], pivot)
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    clean = clean and not r
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = divmod(A[t][j], pivot)
                    for row in A:
                        row[j] = row[j] - q * row[t]
                    clean = clean and not r
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n)
                        for j in range(t + 1, n) if A[i][j] % pivot), None)
            if bad is None:
                break
            # fold the offending row into the pivot row; next pass finds a smaller pivot
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(A[t][t].monic())
    return diag


@lru_cache(maxsize=4096)
def invariant_factors(M: ExactMatrix) -> InvariantFactors:
    """Nonconstant invariant factors of xI - M, monic, in divisibility order."""
    _require_square(M)
    F = M.field
    x = Poly.x(F)
    A = [[(x if i == j else Poly(F)) - Poly(F, (M.rows[i][j],)) for j in range(M.ncols)]
         for i in range(M.nrows)]
    diag = _smith_diagonal(A)
    factors = sorted((d for d in diag if d.degree >= 1), key=lambda p: p.degree)
    return InvariantFactors(tuple(factors))


def similar(M: ExactMatrix, N: ExactMatrix) -> bool:
    if M.field is not N.field:
        raise DomainError(f"field mismatch: {M.field.tag} vs {N.field.tag}")
    if M.shape != N.shape:
        raise DomainError(f"shape mismatch: {M.shape} vs {N.shape}")
    _require_square(M)
    return invariant_factors(M) == invariant_factors(N)


def permutation_cycle_type(M: ExactMatrix) -> tuple[int, ...]:
    _require_square(M)
    perm = _as_permutation(M)
    if perm is None:
        raise DomainError("not a permutation matrix")
    return cycle_type(perm)


def cycle_type(perm) -> tuple[int, ...]:
    """Cycle lengths of a permutation given as a list of images, weakly decreasing."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _as_permutation(M: ExactMatrix):
    """images[j] = i where column j is the basis vector e_i; None if M is not a permutation matrix."""
    one, zero = M.field.one, M.field.zero
    images = []
    for j in range(M.ncols):
        col = M.column(j)
        ones = [i for i, v in enumerate(col) if v == one]
        if len(ones) != 1 or any(v != zero for i, v in enumerate(col) if i != ones[0]):
            return None
        images.append(ones[0])
    if sorted(images) != list(range(M.nrows)):
        return None
    return images


def _eventual_permutation(M: ExactMatrix):
    """Restriction of M to its eventual range, when that range is spanned by standard basis
    vectors and M permutes them. Returns the restricted permutation matrix."""
    split = fitting_split(M)
    support = sorted({i for v in split.eventual_range_basis for i, c in enumerate(v) if c})
    if len(support) != len(split.eventual_range_basis):
        raise UnsupportedError("eventual range is not spanned by standard basis vectors")
    restricted = M.submatrix(support, support)
    if _as_permutation(restricted) is None:
        raise UnsupportedError("eventual-range action is not a basis permutation")
    # columns of M at the support must not leak outside it
    for j in support:
        if any(M.rows[i][j] for i in range(M.nrows) if i not in support):
            raise UnsupportedError("eventual-range action is not a basis permutation")
    return restricted


def kovacs_conjugate(M: ExactMatrix, N: ExactMatrix) -> bool:
    """Similarity via rank sequences plus the eventual-range action.

    Restricted to operators whose eventual-range action permutes a set of
    standard basis vectors; then an intertwiner of the eventual actions exists
    iff the two permutations have the same cycle type.
    """
    if M.field is not N.field or M.shape != N.shape:
        raise DomainError("matrices must share field and shape")
    if rank_sequence(M) != rank_sequence(N):
        return False
    P, Q = _eventual_permutation(M), _eventual_permutation(N)
    return permutation_cycle_type(P) == permutation_cycle_type(Q)


def rationals_matrix(rows) -> ExactMatrix:
    return ExactMatrix(QQ, rows)
