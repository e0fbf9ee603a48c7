"""JSON (de)serialization of representations, complexes and maps."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .field import FieldError, FieldSpec
from .linalg import MatrixF
from .quiver import CircleRep, Rep, ZRep


class ValidationError(ValueError):
    """Malformed input data."""


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_field(obj: Any) -> FieldSpec:
    try:
        return FieldSpec.from_json(obj)
    except FieldError as exc:
        raise ValidationError(str(exc)) from exc


def parse_matrix(fld: FieldSpec, rows: int, cols: int, entries: Any, name: str) -> MatrixF:
    """Row-major flat list, or a list of rows."""
    if not isinstance(entries, list):
        raise ValidationError(f"{name}: expected a list of entries")
    if entries and all(isinstance(e, list) for e in entries):
        entries = [x for row in entries for x in row]
    try:
        return MatrixF.from_flat(fld, rows, cols, entries)
    except (ValueError, FieldError) as exc:
        raise ValidationError(f"{name}: {exc}") from exc


def _dims(obj: dict, key: str, count: int) -> tuple[int, ...]:
    vals = obj.get(key)
    if not isinstance(vals, list) or len(vals) != count:
        raise ValidationError(f"'{key}' must be a list of {count} dimensions")
    if any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in vals):
        raise ValidationError(f"'{key}' must hold nonnegative integers")
    return tuple(vals)


def _maps(obj: dict, key: str, count: int) -> list:
    vals = obj.get(key)
    if not isinstance(vals, list) or len(vals) != count:
        raise ValidationError(f"'{key}' must be a list of {count} matrices")
    return vals


def parse_rep(obj: Any, field: FieldSpec | None = None) -> Rep:
    """Read a circle (``"kind": "circle"``) or line (``"kind": "line"``) representation."""
    if not isinstance(obj, dict):
        raise ValidationError("representation must be a JSON object")
    fld = field if field is not None else parse_field(obj.get("field", "Q"))
    kind = obj.get("kind", "circle")
    try:
        if kind == "circle":
            m = obj.get("m")
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise ValidationError("'m' must be a positive integer")
            n, r = _dims(obj, "n", m), _dims(obj, "r", m)
            alpha = [parse_matrix(fld, r[k], n[k], e, f"alpha_{k + 1}") for k, e in enumerate(_maps(obj, "alpha", m))]
            beta = [parse_matrix(fld, r[k], n[(k + 1) % m], e, f"beta_{k + 1}")
                    for k, e in enumerate(_maps(obj, "beta", m))]
            return CircleRep(fld, n, r, tuple(alpha), tuple(beta))
        if kind == "line":
            support = obj.get("support")
            if (not isinstance(support, list) or len(support) != 2
                    or any(isinstance(s, bool) or not isinstance(s, int) for s in support) or support[0] > support[1]):
                raise ValidationError("'support' must be [lo, hi] with lo <= hi")
            lo, hi = support
            w = hi - lo
            n, r = _dims(obj, "n", w), _dims(obj, "r", w + 1)
            dim = lambda v: r[v // 2 - lo] if v % 2 == 0 else n[(v + 1) // 2 - lo - 1]
            alpha = [parse_matrix(fld, dim(2 * i), dim(2 * i - 1), e, f"alpha_{i}")
                     for i, e in zip(range(lo + 1, hi + 1), _maps(obj, "alpha", w))]
            beta = [parse_matrix(fld, dim(2 * i), dim(2 * i + 1), e, f"beta_{i}")
                    for i, e in zip(range(lo, hi), _maps(obj, "beta", w))]
            return ZRep(fld, lo, hi, n, r, tuple(alpha), tuple(beta))
    except ValidationError:
        raise
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    raise ValidationError(f"unknown representation kind {kind!r}")


def rep_to_json(rep: Rep) -> dict:
    flat = lambda mat: [rep.field.to_json(x) for x in mat.flat()]
    out: dict = {"field": rep.field.spec_json(), "n": list(rep.n), "r": list(rep.r),
                 "alpha": [flat(a) for a in rep.alpha], "beta": [flat(b) for b in rep.beta]}
    if isinstance(rep, CircleRep):
        out.update(kind="circle", m=rep.m)
    else:
        out.update(kind="line", support=[rep.lo, rep.hi])
    return out
