"""Command-line entry point.

Exit status: 0 on success, 1 for invalid input, 2 when a consistency check fails.
"""
from __future__ import annotations

import argparse
import math
import re
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from . import config as cfg
from .diagram import analyze, cross_validate, interval_dims, parse_diagram, report_to_json, truncation_dims
from .field import FieldError, FieldSpec
from .homology import SimplicialError
from .io import ValidationError, dumps, load_json, parse_field, parse_rep
from .quiver import CircleRep, DecompositionError, decompose, dker_dcoker
from .relation import RelationError, limit_law_checks, regular_part, relation_from_cycle

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class CheckFailure(RuntimeError):
    """Raised after output is written when a consistency check failed."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    path: str
    field: FieldSpec | None
    degree: int | None
    fmt: str
    start: str | None
    stop: str | None
    twist: str | None


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tamecodes", description="Bar codes and Jordan cells of tame maps.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("path", help="input JSON file")
        sp.add_argument("--field", help="prime p or Q; overrides the field in the file")
        sp.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    sp = sub.add_parser("decompose", help="bar codes and monodromy of a representation")
    common(sp)
    sp = sub.add_parser("relation", help="regular part of the relation obtained by going once around")
    common(sp)
    sp = sub.add_parser("analyze", help="full invariant report of a diagram")
    common(sp)
    sp.add_argument("--degree", type=int, help="report only this degree")
    sp.add_argument("--twist", help="also report homology twisted by this nonzero field element")
    sp = sub.add_parser("interval", help="homology over an interval of the infinite cyclic cover")
    common(sp)
    sp.add_argument("--from", dest="start", required=True, help="number, or c<j> for lifted critical index j")
    sp.add_argument("--to", dest="stop", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp = sub.add_parser("config", help="configuration and polynomial from an analyze report")
    common(sp)
    sp.add_argument("--degree", type=int, required=True)
    return p


def parse_args(argv: Sequence[str]) -> CliConfig:
    ns = _parser().parse_args(argv)
    fld = None
    if ns.field is not None:
        spec = ns.field.strip()
        fld = parse_field("Q" if spec.upper() == "Q" else _int_or_fail(spec, "--field"))
    return CliConfig(ns.command, ns.path, fld, getattr(ns, "degree", None), ns.fmt,
                     getattr(ns, "start", None), getattr(ns, "stop", None), getattr(ns, "twist", None))


def _int_or_fail(text: str, flag: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValidationError(f"{flag} expects a prime or Q, got {text!r}") from None


# ---------------------------------------------------------------- subcommands


def _decompose(c: CliConfig) -> tuple[dict, list[str]]:
    rep = parse_rep(load_json(c.path), c.field)
    dec = decompose(rep)
    out = dec.to_json()
    ker, coker = dker_dcoker(rep)
    out["dker"], out["dcoker"] = ker, coker
    lines = [f"field {rep.field.name}", "bar codes: " + (" ".join(str(b) for b in dec.barcodes) or "none")]
    if dec.canonical is not None:
        cells = ", ".join(f"({rep.field.to_json(lam)},{k})" for lam, k in dec.canonical.split_cells)
        lines.append(f"Jordan cells: {cells or 'none'}")
        if dec.canonical.residual_blocks:
            lines.append("other blocks: " + ", ".join(f"{p}^{e}" for p, e in dec.canonical.residual_blocks))
    lines.append(f"dker {ker}, dcoker {coker}")
    return out, lines


def _relation(c: CliConfig) -> tuple[dict, list[str]]:
    rep = parse_rep(load_json(c.path), c.field)
    if not isinstance(rep, CircleRep):
        raise ValidationError("the relation route needs a circle representation")
    rel = relation_from_cycle(rep)
    reg = regular_part(rel)
    laws = limit_law_checks(reg.limits)
    lim = reg.limits
    out = {
        "field": rep.field.spec_json(),
        "relation_dim": rel.dim,
        "limits": {"K-": lim.K_minus.dim, "K+": lim.K_plus.dim, "D-": lim.D_minus.dim, "D+": lim.D_plus.dim,
                   "D": lim.D.dim},
        "regular_dim": reg.dim,
        "regular_map": reg.map.to_json(),
        "canonical_form": reg.canonical_form.to_json(),
        "laws": [{"name": n, "passed": ok} for n, ok in laws],
    }
    lines = [f"regular part: dimension {reg.dim}",
             "invariant factors: " + (", ".join(str(p) for p in reg.canonical_form.invariant_factors) or "none")]
    lines += [f"{'ok  ' if ok else 'FAIL'} {n}" for n, ok in laws]
    if not all(ok for _, ok in laws):
        raise CheckFailure((out, lines))
    return out, lines


def _load_diagram(c: CliConfig):
    return parse_diagram(load_json(c.path), c.field)


def _analyze(c: CliConfig) -> tuple[dict, list[str]]:
    d = _load_diagram(c)
    report = analyze(d)
    twist_u = None
    if c.twist is not None:
        if d.kind != "circle":
            raise ValidationError("--twist needs a circle diagram")
        try:
            twist_u = d.field(c.twist)
        except (FieldError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"--twist: {exc}") from exc
        if twist_u == d.field.zero:
            raise ValidationError("--twist must be nonzero")
    checks = cross_validate(d, report)
    out = report_to_json(report, checks, twist_u)
    if c.degree is not None:
        out["degrees"] = [e for e in out["degrees"] if e["degree"] == c.degree]
    lines = [f"{d.kind} diagram, {d.m} critical values, field {d.field.name}", f"Betti {out['betti']}"]
    if "novikov" in out:
        lines.append(f"Novikov {out['novikov']}")
    for e in out["degrees"]:
        codes = " ".join(b["code"] for b in e["barcodes"]) or "none"
        extra = ""
        if "monodromy" in e:
            cells = e["monodromy"]["cells"]
            extra = f"; Jordan cells {cells}" if cells else "; no Jordan cells"
        lines.append(f"degree {e['degree']}: codes {codes}{extra}")
    bad = [ch for ch in checks if not ch.passed]
    lines.append(f"{len(checks) - len(bad)}/{len(checks)} checks passed")
    lines += [f"FAIL {ch.name}: {ch.detail}" for ch in bad]
    if bad:
        raise CheckFailure((out, lines))
    return out, lines


_INDEX = re.compile(r"^c(-?\d+)$")


def _point(report, text: str) -> float:
    m = _INDEX.match(text.strip())
    if m:
        return report.index_angle(int(m.group(1)))
    try:
        x = float(text)
    except ValueError:
        raise ValidationError(f"cannot read {text!r} as a number or c<index>") from None
    if not math.isfinite(x):
        raise ValidationError("interval endpoints must be finite")
    return x


def _interval(c: CliConfig) -> tuple[dict, list[str]]:
    d = _load_diagram(c)
    report = analyze(d)
    a, b = _point(report, c.start), _point(report, c.stop)
    if b < a:
        raise ValidationError("--from must not exceed --to")
    r = c.degree
    if r < 0:
        raise ValidationError("--degree must be nonnegative")
    dims = interval_dims(report, a, b, r)
    dec = report.decomposition(r)
    out = {"from": a, "to": b, "degree": r, "interval_homology": dims.total, "image_in_cover": dims.into_cover,
           "image_in_space": dims.into_space, "jordan_total_dim": dec.jordan_dim(),
           "jordan_unit_cells": dec.cells_at(1) if dec.canonical is not None else 0}
    lines = [f"H_{r} over [{a}, {b}]: {dims.total}", f"image in the cover: {dims.into_cover}",
             f"image in the space: {dims.into_space}"]
    va, vb = report.position(a), report.position(b)
    if va % 2 == 0 and vb % 2 == 0:
        by_ranks = truncation_dims(report, va // 2, vb // 2, r)
        out["interval_homology_by_ranks"] = by_ranks
        lines.append(f"by truncation ranks: {by_ranks}")
        if by_ranks != dims.total:
            raise CheckFailure((out, lines))
    return out, lines


def _config(c: CliConfig) -> tuple[dict, list[str]]:
    data = load_json(c.path)
    if not isinstance(data, dict) or data.get("kind") not in ("circle", "real") or "degrees" not in data:
        raise ValidationError("config expects a report written by 'analyze'")
    conf = cfg.configuration(data, c.degree)
    poly = cfg.polynomial(conf)
    err = cfg.root_error(poly, conf)
    out = cfg.to_json(conf, poly)
    out["root_error"] = err
    expected = data.get("novikov" if data["kind"] == "circle" else "betti", [])
    if 0 <= c.degree < len(expected):
        out["expected_size"] = expected[c.degree]
    lines = [f"{len(conf)} points ({conf.kind})"] + [f"  ({x:.12g}, {y:.12g})" for x, y in conf.points]
    lines.append(f"root error {err:.3g}")
    if err > cfg.TOLERANCE or out.get("expected_size", len(conf)) != len(conf):
        raise CheckFailure((out, lines))
    return out, lines


COMMANDS = {"decompose": _decompose, "relation": _relation, "analyze": _analyze, "interval": _interval,
            "config": _config}


def _emit(c: CliConfig, out: dict, lines: list[str]) -> None:
    sys.stdout.write(dumps(out) if c.fmt == "json" else "\n".join(lines) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        c = parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        out, lines = COMMANDS[c.command](c)
    except CheckFailure as exc:
        out, lines = exc.args[0]
        _emit(c, out, lines)
        print("error: consistency check failed", file=sys.stderr)
        return EXIT_CHECK
    except (ValidationError, FieldError, SimplicialError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DecompositionError, RelationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    _emit(c, out, lines)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


__all__ = ["CliConfig", "main", "parse_args", "run"]
