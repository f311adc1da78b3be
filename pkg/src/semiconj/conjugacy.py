"""Deciders for generalized conjugacy, character equivalence over a field and
linear conjugacy over a field, with certificates.

Two elements s, t are linear conjugates over k exactly when

1. s^k and t^k are J-equivalent for every k >= 1,
2. there are mutually inverse x, x' with x'x = s^w, xx' = t^w conjugating
   <s^(w+1)> onto <t^(w+1)> (character equivalence over Q), and
3. the same holds with x s(p') x' = t(p')^j for some j in H, where p is the
   characteristic of k and H the Galois subgroup (character equivalence over k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .arith import FieldSpec, GaloisSubgroup, galois_subgroup, p_regular_parts
from .core import Semigroup, element_power, index_period, omega_arrays, regular_modulus
from .green import green_classes, maximal_subgroup_orders

POWER_J = "PowerJ"
Q_CHAR = "QCharEquiv"
K_CHAR = "KCharEquiv"

RATIONALS = FieldSpec.rationals()
COMPLEX = FieldSpec.complex()


@dataclass(frozen=True)
class Witness:
    x: int
    x_prime: int
    j: Optional[int] = None

    def to_json(self) -> dict:
        return {"x": self.x, "x_prime": self.x_prime, "j": self.j}


@dataclass(frozen=True)
class ConjugacyVerdict:
    result: bool
    witness: Optional[Witness] = None
    failed_condition: Optional[str] = None
    evidence: dict = field(default_factory=dict)
    q_witness: Optional[Witness] = None

    def __bool__(self):
        return self.result

    def to_json(self) -> dict:
        return {
            "result": self.result,
            "witness": self.witness.to_json() if self.witness else None,
            "q_witness": self.q_witness.to_json() if self.q_witness else None,
            "failed_condition": self.failed_condition,
            "evidence": self.evidence,
        }


class PowerJResult(NamedTuple):
    ok: bool
    failing_k: Optional[int]


def _candidates(S: Semigroup, e: int, f: int, prune: bool):
    """Candidate x in R_f ∩ L_e and x' in R_e ∩ L_f, ascending (everything when not pruning)."""
    if not prune:
        every = range(S.size)
        return every, every
    gc = green_classes(S)
    xs = sorted(set(gc.r_members(f)) & set(gc.l_members(e)))
    xps = sorted(set(gc.r_members(e)) & set(gc.l_members(f)))
    return xs, xps


def _inverse_pairs(S: Semigroup, e: int, f: int, prune: bool):
    """Pairs (x, x') with xx'x = x, x'xx' = x', x'x = e, xx' = f in scan order."""
    t = S.table
    xs, xps = _candidates(S, e, f, prune)
    for x in xs:
        for xp in xps:
            if t[xp, x] == e and t[x, xp] == f and t[t[x, xp], x] == x and t[t[xp, x], xp] == xp:
                yield x, xp


def generalized_conjugates(S: Semigroup, s: int, t: int, *, prune: bool = True) -> Optional[Witness]:
    w, w1 = omega_arrays(S)
    e, f, g, h = int(w[s]), int(w[t]), int(w1[s]), int(w1[t])
    tab = S.table
    for x, xp in _inverse_pairs(S, e, f, prune):
        if tab[tab[x, g], xp] == h:
            return Witness(int(x), int(xp))
    return None


class _FieldData(NamedTuple):
    p: int
    modulus: int
    H: GaloisSubgroup
    p_prime: tuple[int, ...]


def _field_data(S: Semigroup, fld: FieldSpec) -> _FieldData:
    def compute():
        p = fld.characteristic
        n, _ = regular_modulus(S, p)
        H = galois_subgroup(fld, n)
        parts = tuple(p_regular_parts(S, s, p).p_prime_part for s in range(S.size))
        return _FieldData(p, n, H, parts)
    return S.cached(("field", fld), compute)


def char_equivalent(S: Semigroup, s: int, t: int, fld: FieldSpec, *,
                    prune: bool = True) -> Optional[Witness]:
    """Witness (x, x', j) for character equivalence over ``fld``, or None."""
    data = _field_data(S, fld)
    w, _ = omega_arrays(S)
    e, f = int(w[s]), int(w[t])
    sp, tp = data.p_prime[s], data.p_prime[t]
    # least exponent j in H reaching each power of t(p')
    targets: dict[int, int] = {}
    for j in data.H.members:
        targets.setdefault(element_power(S, tp, j), j)
    tab = S.table
    for x, xp in _inverse_pairs(S, e, f, prune):
        y = int(tab[tab[x, sp], xp])
        if y in targets:
            return Witness(int(x), int(xp), targets[y])
    return None


def q_character_equivalent(S: Semigroup, s: int, t: int, *, prune: bool = True) -> Optional[Witness]:
    return char_equivalent(S, s, t, RATIONALS, prune=prune)


def power_j_condition(S: Semigroup, s: int, t: int, *, paper_bound: bool = False) -> PowerJResult:
    """Check s^k J t^k; past both indices the pair (s^k, t^k) repeats with the lcm of the periods."""
    jc = green_classes(S).j_class
    if paper_bound:
        bound = S.size
    else:
        (i_s, p_s), (i_t, p_t) = index_period(S, s), index_period(S, t)
        bound = max(i_s, i_t) + math.lcm(p_s, p_t)
    tab = S.table
    a, b = s, t
    for k in range(1, bound + 1):
        if jc[a] != jc[b]:
            return PowerJResult(False, k)
        a, b = int(tab[a, s]), int(tab[b, t])
    return PowerJResult(True, None)


def _q_condition_implied(S: Semigroup, fld: FieldSpec) -> bool:
    """Condition 3 subsumes condition 2 when every group element is p-regular and H is all of Z_n^x."""
    p = fld.characteristic
    if p and any(order % p == 0 for order in maximal_subgroup_orders(S).values()):
        return False
    return _field_data(S, fld).H.is_full_unit_group


def linear_conjugate(S: Semigroup, s: int, t: int, fld: FieldSpec, *,
                     paper_bound: bool = False, prune: bool = True) -> ConjugacyVerdict:
    pj = power_j_condition(S, s, t, paper_bound=paper_bound)
    if not pj.ok:
        jc = green_classes(S).j_class
        k = pj.failing_k
        a, b = element_power(S, s, k), element_power(S, t, k)
        return ConjugacyVerdict(False, failed_condition=POWER_J,
                                evidence={"k": k, "s_power": a, "t_power": b,
                                          "j_class_s": jc[a], "j_class_t": jc[b]})
    data = _field_data(S, fld)
    skip_q = _q_condition_implied(S, fld)
    qw = None
    if not skip_q:
        qw = q_character_equivalent(S, s, t, prune=prune)
        if qw is None:
            qdata = _field_data(S, RATIONALS)
            return ConjugacyVerdict(False, failed_condition=Q_CHAR,
                                    evidence={"field": "Q", "modulus": qdata.modulus,
                                              "H": list(qdata.H.members)})
    kw = char_equivalent(S, s, t, fld, prune=prune)
    if kw is None:
        return ConjugacyVerdict(False, q_witness=qw, failed_condition=K_CHAR,
                                evidence={"field": str(fld), "modulus": data.modulus,
                                          "H": list(data.H.members)})
    return ConjugacyVerdict(True, witness=kw, q_witness=kw if skip_q else qw,
                            evidence={"field": str(fld), "modulus": data.modulus,
                                      "H": list(data.H.members), "q_condition_implied": skip_q})


def conjugacy_partition(S: Semigroup, fld: FieldSpec, **kwargs) -> list[list[int]]:
    """Classes of linear conjugacy over ``fld``, each sorted, ordered by least member.

    Each new element is compared with the representative of every class found
    so far; transitivity makes further comparisons redundant.
    """
    return partition_from_relation(
        S.size, lambda a, b: linear_conjugate(S, a, b, fld, **kwargs).result)


def partition_from_relation(n: int, related) -> list[list[int]]:
    """Classes of an equivalence relation given as a pairwise predicate, by representative scan."""
    classes: list[list[int]] = []
    for s in range(n):
        for cls in classes:
            if related(cls[0], s):
                cls.append(s)
                break
        else:
            classes.append([s])
    return classes
