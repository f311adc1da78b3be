"""Shared test helpers."""

import random

from semiconj.core import close_generators
from semiconj.families import build_family


def element(S, *one_line):
    """Element id of a map given in 1-based one-line notation (0 for undefined)."""
    images = tuple(None if v == 0 else v - 1 for v in one_line)
    return S.provenance.index_of(images)


def small_corpus():
    """Every built-in family with at most 34 elements."""
    corpus = {f"T{n}": build_family("tn", n) for n in (1, 2, 3)}
    corpus.update({f"I{n}": build_family("in", n) for n in (1, 2, 3)})
    corpus["M2(F2)"] = build_family("mat", 2, 2)
    corpus.update({f"Z{n}": build_family("group", f"z{n}") for n in range(1, 13)})
    corpus["S3"] = build_family("group", "s3")
    corpus["Q8"] = build_family("group", "q8")
    corpus["Z2xZ2"] = build_family("group", "z2xz2")
    return corpus


def random_closures(count=50, seed=20261016):
    """Closures of 4 random transformations of degree 2..5, seeded."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, 5)
        gens = [tuple(rng.randrange(n) for _ in range(n)) for _ in range(4)]
        out.append(close_generators(gens, "transformation", degree=n))
    return out
