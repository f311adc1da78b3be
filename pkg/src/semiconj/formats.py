"""Semigroup JSON.

All element indices and map images are 0-based.  Accepted shapes::

    {"table": [[...], ...]}
    {"transformations": [[...], ...], "degree": n}
    {"partial_injections": [[0, null, ...], ...], "degree": n}
    {"matrices": [[[...], ...], ...], "q": q}

Matrix entries are F_q element codes: for ``q = p**e`` the base-``p`` digits
of a code are its coefficients in the power basis of the field's Conway
polynomial.  Optional keys ``size`` (checked after closure), ``name`` and
``elements`` (informational, ignored on input) may be present.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .core import Semigroup, close_generators
from .errors import FormatError

GENERATOR_KEYS = {
    "transformations": "transformation",
    "partial_injections": "partial_injection",
    "matrices": "matrix",
}
KIND_KEYS = {v: k for k, v in GENERATOR_KEYS.items()}


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer, got {v!r}")
    return v


def load_semigroup(obj: dict, *, cap: Optional[int] = None, check: str = "auto") -> Semigroup:
    if not isinstance(obj, dict):
        raise FormatError("semigroup JSON must be an object")
    keys = [k for k in GENERATOR_KEYS if k in obj]
    if len(keys) > 1:
        raise FormatError(f"conflicting generator keys {keys}")
    if keys:
        key = keys[0]
        kind = GENERATOR_KEYS[key]
        gens = obj[key]
        if not isinstance(gens, list) or not gens:
            raise FormatError(f"'{key}' must be a nonempty list")
        if kind == "matrix":
            q = _int(obj.get("q"), "q")
            gens = [[[_int(v, "matrix entry") for v in row] for row in g] for g in gens]
            S = close_generators(gens, kind, q=q, cap=cap)
        else:
            degree = obj.get("degree")
            if degree is not None:
                _int(degree, "degree")
            gens = [[None if v is None else _int(v, "image") for v in g] for g in gens]
            S = close_generators(gens, kind, degree=degree, cap=cap)
    elif "table" in obj:
        table = obj["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise FormatError("'table' must be a list of rows")
        S = Semigroup([[_int(v, "table entry") for v in row] for row in table], check=check)
    else:
        raise FormatError("expected one of 'table', 'transformations', 'partial_injections', 'matrices'")
    if "size" in obj and obj["size"] != S.size:
        raise FormatError(f"declared size {obj['size']} but the semigroup has {S.size} elements")
    return S


def read_semigroup(path, **kwargs) -> Semigroup:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return load_semigroup(obj, **kwargs)


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    return x


def dump_semigroup(S: Semigroup, name: Optional[str] = None) -> dict:
    """JSON object that :func:`load_semigroup` turns back into the same numbering."""
    out: dict = {}
    if name:
        out["name"] = name
    prov = S.provenance
    if prov is None:
        out["table"] = S.table.tolist()
    else:
        out[KIND_KEYS[prov.kind]] = _plain(prov.generators)
        if prov.kind == "matrix":
            out["q"] = prov.q
        else:
            out["degree"] = prov.degree
        out["elements"] = _plain(prov.elements)
    out["size"] = S.size
    return out


def one_line(images) -> str:
    """1-based one-line notation, ``-`` for undefined points."""
    return "[" + ",".join("-" if v is None else str(v + 1) for v in images) + "]"


def render_element(S: Semigroup, s: int) -> str:
    prov = S.provenance
    if prov is None:
        return str(s)
    concrete = prov.elements[s]
    if prov.kind == "matrix":
        return "[" + ";".join(" ".join(str(v) for v in row) for row in concrete) + "]"
    return one_line(concrete)
