"""Curve and patch JSON files.

Curves:   {"alpha": a, "beta": b, "degree": n, "control": [[x, y], ...]}
Patches:  {"alpha": a, "beta": b, "degrees": [m, n], "control": [[[x, y, z], ...], ...]}

Numbers are written with 17 significant digits so every double round-trips
exactly; output is byte-deterministic for identical inputs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .basis import make_config
from .curve import Curve
from .surface import SurfacePatch

__all__ = [
    "FileFormatError",
    "format_float",
    "curve_to_json",
    "patch_to_json",
    "parse_curve",
    "parse_patch",
    "load_curve",
    "load_patch",
    "save_curve",
    "save_patch",
]


class FileFormatError(ValueError):
    """The file is not valid JSON or does not match the expected schema."""


def format_float(x: float) -> str:
    """Decimal form with 17 significant digits; round-trips exactly."""
    return format(float(x), ".17g")


def _points_json(points) -> str:
    rows = ", ".join("[" + ", ".join(format_float(c) for c in p) + "]" for p in points)
    return "[" + rows + "]"


def curve_to_json(curve: Curve) -> str:
    return (
        "{"
        + f'"alpha": {format_float(curve.config.alpha)}, '
        + f'"beta": {format_float(curve.config.beta)}, '
        + f'"degree": {curve.degree}, '
        + f'"control": {_points_json(curve.control)}'
        + "}\n"
    )


def patch_to_json(patch: SurfacePatch) -> str:
    m, n = patch.degrees
    rows = ", ".join(_points_json(row) for row in patch.net)
    return (
        "{"
        + f'"alpha": {format_float(patch.config.alpha)}, '
        + f'"beta": {format_float(patch.config.beta)}, '
        + f'"degrees": [{m}, {n}], '
        + f'"control": [{rows}]'
        + "}\n"
    )


def _load_dict(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FileFormatError("top-level JSON value must be an object")
    return data


def _field(data: dict, name: str):
    if name not in data:
        raise FileFormatError(f"missing field {name!r}")
    return data[name]


def _number(data: dict, name: str) -> float:
    value = _field(data, name)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FileFormatError(f"field {name!r} must be a number")
    return float(value)


def parse_curve(text: str) -> Curve:
    data = _load_dict(text)
    alpha = _number(data, "alpha")
    beta = _number(data, "beta")
    degree = _field(data, "degree")
    control = _field(data, "control")
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise FileFormatError("field 'degree' must be an integer")
    if not isinstance(control, list) or not all(isinstance(p, list) for p in control):
        raise FileFormatError("field 'control' must be a list of points")
    if len(control) != degree + 1:
        raise FileFormatError(
            f"degree {degree} needs {degree + 1} control points, file has {len(control)}"
        )
    return Curve(make_config(alpha, beta), control)


def parse_patch(text: str) -> SurfacePatch:
    data = _load_dict(text)
    alpha = _number(data, "alpha")
    beta = _number(data, "beta")
    degrees = _field(data, "degrees")
    control = _field(data, "control")
    if (
        not isinstance(degrees, list)
        or len(degrees) != 2
        or any(isinstance(d, bool) or not isinstance(d, int) for d in degrees)
    ):
        raise FileFormatError("field 'degrees' must be a pair of integers")
    if not isinstance(control, list) or not all(isinstance(r, list) for r in control):
        raise FileFormatError("field 'control' must be a list of point rows")
    m, n = degrees
    if len(control) != m + 1 or any(len(row) != n + 1 for row in control):
        raise FileFormatError(
            f"degrees ({m}, {n}) need a {m + 1} x {n + 1} control net"
        )
    return SurfacePatch(make_config(alpha, beta), control)


def load_curve(path) -> Curve:
    return parse_curve(Path(path).read_text(encoding="utf-8"))


def load_patch(path) -> SurfacePatch:
    return parse_patch(Path(path).read_text(encoding="utf-8"))


def save_curve(curve: Curve, path) -> None:
    Path(path).write_text(curve_to_json(curve), encoding="utf-8")


def save_patch(patch: SurfacePatch, path) -> None:
    Path(path).write_text(patch_to_json(patch), encoding="utf-8")
