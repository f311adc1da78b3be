"""Cross-check the syntactic decider against matrix similarity in a concrete representation.

Linear conjugates have similar images under every representation, so a
disagreement in the direction "conjugate but not similar" is a decider bug;
"similar but not conjugate" only means the chosen representation does not
separate the pair.  For T_n, I_n (standard representation) and M_n(F_q)
(identity representation) the two partitions coincide.
"""

from __future__ import annotations

from .arith import FieldSpec
from .conjugacy import conjugacy_partition, partition_from_relation
from .core import Semigroup
from .errors import UnsupportedError
from .exactla.fields import GF, QQ
from .exactla.matrix import ExactMatrix, similar
from .families import matrix_of, standard_representation


def representation_matrices(S: Semigroup, fld: FieldSpec) -> list[ExactMatrix]:
    prov = S.provenance
    if prov is None:
        raise UnsupportedError("oracle-verify needs transformation, partial-injection or matrix input")
    if prov.kind == "matrix":
        if fld.kind != "F" or fld.q != prov.q:
            raise UnsupportedError(f"the identity representation of M_n(F_{prov.q}) "
                                   f"is only defined over F{prov.q}")
        return [matrix_of(m, prov.q) for m in prov.elements]
    if fld.kind == "F":
        scalars = GF(fld.q)
    elif fld.characteristic:
        scalars = GF(fld.characteristic)
    else:
        scalars = QQ
    return [standard_representation(f, scalars) for f in prov.elements]


def similarity_partition(mats: list[ExactMatrix]) -> list[list[int]]:
    return partition_from_relation(len(mats), lambda a, b: similar(mats[a], mats[b]))


def oracle_verify(S: Semigroup, fld: FieldSpec) -> dict:
    mats = representation_matrices(S, fld)
    decided = conjugacy_partition(S, fld)
    oracle = similarity_partition(mats)
    label_d = {s: i for i, cls in enumerate(decided) for s in cls}
    label_o = {s: i for i, cls in enumerate(oracle) for s in cls}
    disagreements = []
    pairs = 0
    for s in range(S.size):
        for t in range(S.size):
            pairs += 1
            d, o = label_d[s] == label_d[t], label_o[s] == label_o[t]
            if d != o and s < t:
                disagreements.append({"s": s, "t": t, "linear_conjugate": d, "similar": o})
    return {
        "agree": not disagreements,
        "pairs_checked": pairs,
        "field": str(fld),
        "representation": "identity" if S.provenance.kind == "matrix" else "standard",
        "classes": len(decided),
        "oracle_classes": len(oracle),
        "disagreements": disagreements,
    }

