"""JSON descriptions of spaces and sequences, and report encoding.

Space descriptions:
  {"kind": "standard_from_metric", "metric": "euclid1d"}
  {"kind": "standard_from_metric", "metric": "discrete"}
  {"kind": "standard_from_metric", "metric": "table",
   "points": [...], "d": [[...]]}
  {"kind": "note_space"}
  {"kind": "table", "points": [...], "M": [[...]], "tnorm": "min"}
  {"kind": "named", "name": <gallery space name>}

Sequence descriptions:
  {"kind": "named", "name": "harmonic"}
  {"kind": "explicit", "values": ["1", "1/2", ...]}
  {"kind": "formula", "expr": "1/n", "horizon": 100}

Rationals travel as integers or "p/q" strings. Reports are emitted with
sorted keys so runs diff cleanly.
"""

from __future__ import annotations

import ast
import json
from dataclasses import is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from . import gallery
from .errors import DomainError, UnknownNameError
from .sequences import ClassificationReport, SequenceSpec, from_values
from .space import (FuzzyMetricSpace, discrete_metric, line_metric,
                    standard_from_metric, table_metric)
from .tnorm import by_name
from .verdict import Verdict


def parse_fraction(v) -> Fraction:
    if isinstance(v, bool):
        raise DomainError(f"expected a rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {v!r}: {exc}") from None
    raise DomainError(f"expected int or 'p/q' string, got {v!r}")


def encode_value(v) -> Any:
    """Recursively convert package values to JSON-serializable ones."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, Verdict):
        return {"status": v.status.value,
                "witness": encode_value(v.witness),
                "certificate": encode_value(v.certificate)}
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if is_dataclass(v) and not isinstance(v, type):
        return {f: encode_value(getattr(v, f)) for f in v.__dataclass_fields__}
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    return str(v)


def dumps(obj) -> str:
    return json.dumps(encode_value(obj), sort_keys=True)


def classification_to_dict(report: ClassificationReport) -> dict:
    return {
        "verdicts": {name: encode_value(v)
                     for name, v in report.verdict_map().items()},
        "diagnostics": encode_value(report.diagnostics),
    }


_GALLERY_SPACES = {
    "reals_md": gallery.reals_md_space,
    "unit_interval_md": gallery.unit_interval_space,
    "integers_md": gallery.integers_space,
    "note_space": gallery.note_space,
}


def space_from_json(desc) -> FuzzyMetricSpace:
    if isinstance(desc, str):
        desc = json.loads(desc)
    kind = desc.get("kind")
    if kind == "note_space":
        return gallery.note_space()
    if kind == "named":
        name = desc.get("name", "")
        if name not in _GALLERY_SPACES:
            raise UnknownNameError(name, tuple(_GALLERY_SPACES))
        return _GALLERY_SPACES[name]()
    if kind == "standard_from_metric":
        metric = desc.get("metric")
        if metric == "euclid1d":
            return standard_from_metric(line_metric())
        if metric == "discrete":
            return standard_from_metric(discrete_metric())
        if metric == "table":
            pts = [parse_point(p) for p in desc["points"]]
            rows = [[parse_fraction(v) for v in row] for row in desc["d"]]
            return standard_from_metric(table_metric(pts, rows))
        raise UnknownNameError(str(metric), ("euclid1d", "discrete", "table"))
    if kind == "table":
        pts = [parse_point(p) for p in desc["points"]]
        rows = [[parse_fraction(v) for v in row] for row in desc["M"]]
        if len(rows) != len(pts) or any(len(r) != len(pts) for r in rows):
            raise DomainError("membership table must be square")
        idx = {p: i for i, p in enumerate(pts)}

        def m(x, y, _t):
            return rows[idx[x]][idx[y]]

        return FuzzyMetricSpace("table", m, by_name(desc.get("tnorm", "min")),
                                contains=lambda p: p in idx, t_continuous=True)
    raise UnknownNameError(str(kind),
                           ("standard_from_metric", "note_space", "table", "named"))


def parse_point(v):
    """Point syntax: rationals for line spaces, "x:3" / "y:5" for the
    two-family space, anything else is an opaque label."""
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        if ":" in v:
            tag, _, num = v.partition(":")
            if tag in ("x", "y") and num.isdigit():
                return (tag, int(num))
        try:
            return Fraction(v)
        except ValueError:
            return v
    raise DomainError(f"cannot parse point {v!r}")


_NAMED_SEQS = {
    "harmonic": gallery.harmonic_sums,
    "pseudo_pairs": gallery.pseudo_pairs_seq,
    "cofinal_spikes": gallery.cofinal_spikes_seq,
    "triangle_wave": gallery.triangle_wave_seq,
    "note_x": lambda n: gallery.note_sequence("x", n),
    "note_y": lambda n: gallery.note_sequence("y", n),
}


def sequence_from_json(desc, horizon: int | None = None) -> SequenceSpec:
    if isinstance(desc, str):
        desc = json.loads(desc)
    kind = desc.get("kind")
    if kind == "named":
        name = desc.get("name", "")
        if name not in _NAMED_SEQS:
            raise UnknownNameError(name, tuple(_NAMED_SEQS))
        n = horizon or desc.get("horizon") or 1000
        return _NAMED_SEQS[name](n)
    if kind == "explicit":
        values = [parse_point(v) for v in desc["values"]]
        if not values:
            raise DomainError("explicit sequence needs at least one value")
        return from_values(values, name="explicit")
    if kind == "formula":
        expr = desc["expr"]
        n = horizon or desc.get("horizon")
        if not n:
            raise DomainError("formula sequence needs a horizon")
        return SequenceSpec(formula_fn(expr), int(n), name=f"formula:{expr}")
    raise UnknownNameError(str(kind), ("named", "explicit", "formula"))


_ALLOWED_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def formula_fn(expr: str):
    """Compile a rational arithmetic expression in n (e.g. "1/n", "(n+1)/(n+2)").

    Only +, -, *, /, integer ** and the variable n are allowed; evaluation
    is exact.
    """
    tree = ast.parse(expr, mode="eval")

    def ev(node, n: int) -> Fraction:
        if isinstance(node, ast.Expression):
            return ev(node.body, n)
        if isinstance(node, ast.BinOp) and type(node.op) in _ALLOWED_BINOPS:
            a, b = ev(node.left, n), ev(node.right, n)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
            if b.denominator != 1 or abs(b) > 64:
                raise DomainError("exponent must be a small integer")
            return a ** int(b)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand, n)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "n":
            return Fraction(n)
        raise DomainError(f"disallowed syntax in formula: {ast.dump(node)}")

    ev(tree, 1)  # validate eagerly so bad formulas fail at parse time
    return lambda n: ev(tree, n)
