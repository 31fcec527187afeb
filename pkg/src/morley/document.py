"""JSON documents for configurations, verification runs and trisections.

Emission is deterministic: fixed key order, two-space indentation and
floats printed with 17 significant digits so that every value parses
back to the identical double.  parse_config_document inverts
config_document exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .forward import side_spread
from .inverse import (
    ARC_CHORD_NAMES,
    LINE_POINT_NAMES,
    AngleTriple,
    MorleyConfiguration,
)
from .kernel import Circle, Line, Point, Triangle
from .verify import VerificationSummary

# Point names in emission order.
_POINT_ORDER = ("A", "B", "C", "A'", "B'", "C'", "I_a", "J_a", "I_b", "J_b", "I_c", "J_c")


def _float_repr(x: float) -> str:
    return f"{x:.17g}"


def _emit(value: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = "  " * (indent + 1)
        items = [
            f"{inner}{json.dumps(key)}: {_emit(item, indent + 1)}"
            for key, item in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if any(isinstance(item, (dict, list, tuple)) for item in value):
            inner = "  " * (indent + 1)
            items = [inner + _emit(item, indent + 1) for item in value]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        return "[" + ", ".join(_emit(item, indent) for item in value) + "]"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _float_repr(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _point_pair(p: Point) -> list[float]:
    return [p.x, p.y]


def config_document(cfg: MorleyConfiguration) -> str:
    """Serialize a configuration; inverted exactly by parse_config_document."""
    points = cfg.named_points()
    doc = {
        "angles": {"a": cfg.angles.a, "b": cfg.angles.b, "c": cfg.angles.c},
        "points": {name: _point_pair(points[name]) for name in _POINT_ORDER},
        "arcs": {
            key: {
                "center": _point_pair(arc.center),
                "radius": arc.radius,
                "chord": list(ARC_CHORD_NAMES[key]),
            }
            for key, arc in cfg.arcs.items()
        },
        "lines": {key: list(names) for key, names in LINE_POINT_NAMES.items()},
        "inner": ["A'", "B'", "C'"],
        "outer": ["A", "B", "C"],
    }
    return _emit(doc) + "\n"


def parse_config_document(text: str) -> MorleyConfiguration:
    """Rebuild a MorleyConfiguration from config_document output."""
    data = json.loads(text)
    points = {name: Point(xy[0], xy[1]) for name, xy in data["points"].items()}
    angles = AngleTriple(data["angles"]["a"], data["angles"]["b"], data["angles"]["c"])
    inner = Triangle(points["A'"], points["B'"], points["C'"], ("A'", "B'", "C'"))
    outer = Triangle(points["A"], points["B"], points["C"], ("A", "B", "C"))
    arcs = {}
    for key, arc in data["arcs"].items():
        arcs[key] = Circle(Point(arc["center"][0], arc["center"][1]), arc["radius"])
    lines = {}
    for key, names in data["lines"].items():
        lines[key] = Line(points[names[0]], points[names[1]])
    return MorleyConfiguration(
        inner=inner,
        angles=angles,
        arc_a=arcs["a"],
        arc_b=arcs["b"],
        arc_c=arcs["c"],
        i_a=points["I_a"],
        j_a=points["J_a"],
        i_b=points["I_b"],
        j_b=points["J_b"],
        i_c=points["I_c"],
        j_c=points["J_c"],
        line_ab=lines["AB"],
        line_bc=lines["BC"],
        line_ca=lines["CA"],
        outer=outer,
    )


def summary_document(summary: VerificationSummary) -> str:
    """Serialize a verification run, one entry per check."""
    doc = {
        "seed": summary.seed,
        "samples": summary.samples,
        "all_pass": summary.all_pass,
        "checks": [
            {
                "name": report.name,
                "mode": report.mode,
                "measured": report.measured,
                "expected": report.expected,
                "abs_error": report.abs_error,
                "tol": report.tol,
                "pass": report.passed,
            }
            for report in summary.checks
        ],
    }
    return _emit(doc) + "\n"


def forward_document(outer: Triangle, morley: Triangle) -> str:
    """Serialize a triangle and its trisector triangle."""
    names = list(outer.labels) + list(morley.labels)
    points = list(outer.vertices) + list(morley.vertices)
    doc = {
        "points": {name: _point_pair(point) for name, point in zip(names, points)},
        "morley": list(morley.labels),
        "side_spread": side_spread(morley),
    }
    return _emit(doc) + "\n"
