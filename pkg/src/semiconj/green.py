"""Green's relations, principal ideals and maximal subgroups.

Classes are the strongly connected components of Cayley graphs: ``a -> a*g``
reaches exactly ``aS^1`` when ``g`` runs over a generating set, so R-classes
are the SCCs of the right Cayley graph, L-classes those of the left one and
J-classes those of their union.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import Semigroup
from .errors import DomainError


@dataclass(frozen=True, eq=False)
class GreenClasses:
    """Per-element class labels (labels numbered by least member) and the J-order.

    ``j_leq[c, d]`` is true when the ideal of J-class ``c`` is contained in
    the ideal of J-class ``d``.
    """

    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    j_class: tuple[int, ...]
    h_class: tuple[int, ...]
    j_leq: np.ndarray

    @staticmethod
    def _members(labels):
        out: dict[int, list[int]] = {}
        for s, c in enumerate(labels):
            out.setdefault(c, []).append(s)
        return out

    def members(self, relation: str) -> dict[int, list[int]]:
        """``relation`` is one of ``"R"``, ``"L"``, ``"J"``, ``"H"``."""
        labels = {"R": self.r_class, "L": self.l_class,
                  "J": self.j_class, "H": self.h_class}[relation]
        cache = self.__dict__.setdefault("_member_cache", {})
        if relation not in cache:
            cache[relation] = self._members(labels)
        return cache[relation]

    def r_members(self, s: int) -> list[int]:
        return self.members("R")[self.r_class[s]]

    def l_members(self, s: int) -> list[int]:
        return self.members("L")[self.l_class[s]]

    def j_members(self, s: int) -> list[int]:
        return self.members("J")[self.j_class[s]]

    def h_members(self, s: int) -> list[int]:
        return self.members("H")[self.h_class[s]]

    @property
    def num_j_classes(self) -> int:
        return len(self.members("J"))


def _relabel(labels) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    return tuple(mapping.setdefault(int(c), len(mapping)) for c in labels)


def _cayley_graph(S: Semigroup, right: bool, left: bool) -> csr_matrix:
    n = S.size
    gens = S.generator_ids
    src, dst = [], []
    for g in gens:
        if right:
            src.append(np.arange(n))
            dst.append(S.table[:, g])
        if left:
            src.append(np.arange(n))
            dst.append(S.table[g, :])
    src, dst = np.concatenate(src), np.concatenate(dst)
    return csr_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))


def _scc(graph) -> tuple[int, ...]:
    _, labels = connected_components(graph, directed=True, connection="strong")
    return _relabel(labels)


def green_classes(S: Semigroup) -> GreenClasses:
    def compute():
        r = _scc(_cayley_graph(S, right=True, left=False))
        l = _scc(_cayley_graph(S, right=False, left=True))
        both = _cayley_graph(S, right=True, left=True)
        j = _scc(both)
        h = _relabel(np.unique(np.array([r, l]).T, axis=0, return_inverse=True)[1].ravel())
        return GreenClasses(r, l, j, h, _j_order(both, j))
    return S.cached("green", compute)


def _j_order(graph: csr_matrix, j_labels) -> np.ndarray:
    k = max(j_labels) + 1
    succ: list[set[int]] = [set() for _ in range(k)]
    coo = graph.tocoo()
    for a, b in zip(coo.row, coo.col):
        ca, cb = j_labels[a], j_labels[b]
        if ca != cb:
            succ[ca].add(cb)
    leq = np.zeros((k, k), dtype=bool)
    for c in range(k):
        stack, seen = [c], {c}
        while stack:
            d = stack.pop()
            for e in succ[d]:
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        for d in seen:
            leq[d, c] = True
    leq.setflags(write=False)
    return leq


def principal_ideals(S: Semigroup, s: int) -> tuple[frozenset, frozenset, frozenset]:
    """(sS^1, S^1s, S^1sS^1) as sets of element ids."""
    t = S.table
    right = frozenset(int(v) for v in np.unique(t[s, :])) | {s}
    left = frozenset(int(v) for v in np.unique(t[:, s])) | {s}
    two_sided = left | frozenset(int(v) for v in np.unique(t[sorted(left), :]))
    return right, left, two_sided


def j_equivalent(S: Semigroup, s: int, t: int) -> bool:
    j = green_classes(S).j_class
    return j[s] == j[t]


@dataclass(frozen=True)
class MaximalSubgroup:
    identity: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)


def maximal_subgroup(S: Semigroup, e: int) -> MaximalSubgroup:
    """The group eSe ∩ J_e, checked to be a group with identity e."""
    if not S.is_idempotent(e):
        raise DomainError(f"element {e} is not idempotent")
    t = S.table
    ese = set(int(v) for v in np.unique(t[e, t[:, e]]))
    jc = green_classes(S).j_class
    elems = frozenset(x for x in ese if jc[x] == jc[e])
    for a in elems:
        if t[a, e] != a or t[e, a] != a:
            raise AssertionError(f"{e} is not an identity for {a}")
        if not any(t[a, b] == e and t[b, a] == e for b in elems):
            raise AssertionError(f"{a} has no inverse in G_{e}")
        if any(t[a, b] not in elems for b in elems):
            raise AssertionError(f"G_{e} is not closed")
    return MaximalSubgroup(e, elems)


def maximal_subgroup_orders(S: Semigroup) -> dict[int, int]:
    """|G_e| for every idempotent e; G_e is the H-class of e."""
    gc = green_classes(S)
    return {e: len(gc.h_members(e)) for e in S.idempotents}
