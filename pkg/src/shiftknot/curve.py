"""Bezier curves over shifted-knot Bernstein bases.

A curve of degree n is a convex blend of ``n + 1`` control points evaluated
on the degree-n domain of its knot-shift pair. Three evaluation routes are
provided (direct basis blend, de Casteljau pyramid, step-matrix products)
plus degree elevation and endpoint derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .basis import (
    MAX_DEGREE,
    DomainInterval,
    ShiftedKnotConfig,
    basis_row,
    basis_rows,
    domain,
)
from .errors import ConstraintError

__all__ = [
    "Point",
    "Curve",
    "DeCasteljauTriangle",
    "eval_direct",
    "eval_decasteljau",
    "eval_matrix_form",
    "sample_curve",
    "decasteljau_triangle",
    "step_matrix",
    "elevation_matrix",
    "elevate",
    "elevate_many",
    "endpoint_derivative",
]

Point = np.ndarray


def _freeze_points(points, *, min_rows: int, what: str) -> np.ndarray:
    try:
        arr = np.array(points, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ConstraintError(f"{what} must form a rectangular numeric array") from exc
    if arr.ndim != 2:
        raise ConstraintError(f"{what} must be a sequence of points, got shape {arr.shape}")
    if arr.shape[0] < min_rows:
        raise ConstraintError(f"{what} needs at least {min_rows} points, got {arr.shape[0]}")
    if arr.shape[1] < 1:
        raise ConstraintError(f"{what} points need at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ConstraintError(f"{what} coordinates must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Curve:
    """Immutable control polygon plus its knot-shift configuration."""

    config: ShiftedKnotConfig
    control: np.ndarray

    def __post_init__(self):
        if not isinstance(self.config, ShiftedKnotConfig):
            raise ConstraintError("config must be a ShiftedKnotConfig")
        arr = _freeze_points(self.control, min_rows=2, what="control polygon")
        if arr.shape[0] - 1 > MAX_DEGREE:
            raise ConstraintError(
                f"degree {arr.shape[0] - 1} exceeds the supported maximum {MAX_DEGREE}"
            )
        object.__setattr__(self, "control", arr)

    @property
    def degree(self) -> int:
        return self.control.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.control.shape[1]

    @property
    def domain(self) -> DomainInterval:
        return domain(self.config, self.degree)


def _weights(dom: DomainInterval, t: float) -> tuple[float, float]:
    # Convex pair (left, right); constant across pyramid levels. Dividing by
    # the width keeps the pair exactly (1, 0) / (0, 1) at the endpoints.
    return (dom.hi - t) / dom.width, (t - dom.lo) / dom.width


def eval_direct(curve: Curve, t: float, *, clamp: bool = False) -> np.ndarray:
    """Blend the control points with the basis row at ``t``."""
    return basis_row(curve.config, curve.degree, t, clamp=clamp) @ curve.control


def eval_decasteljau(curve: Curve, t: float, *, clamp: bool = False) -> np.ndarray:
    """Collapse the control polygon by repeated convex combination."""
    t = curve.domain.admit(t, clamp)
    wl, wr = _weights(curve.domain, t)
    return _kernels.decasteljau_batch(curve.control, np.array([wl]), np.array([wr]))[0]


def eval_matrix_form(curve: Curve, t: float, *, clamp: bool = False) -> np.ndarray:
    """Evaluate through explicit step-matrix products.

    Numerically this performs the same convex combinations as the pyramid,
    but it goes through materialized matrices so the route is independently
    checkable against :func:`step_matrix`.
    """
    dom = curve.domain
    t = dom.admit(t, clamp)
    wl, wr = _weights(dom, t)
    vec = curve.control
    for r in range(1, curve.degree + 1):
        vec = _band_matrix(curve.degree - r + 1, wl, wr) @ vec
    return vec[0]


def sample_curve(curve: Curve, ts, *, algorithm: str = "direct", clamp: bool = False) -> np.ndarray:
    """Evaluate at many parameters, shape ``(len(ts), dimension)``."""
    dom = curve.domain
    ts = dom.admit_array(ts, clamp)
    if algorithm == "direct":
        rows = basis_rows(curve.config, curve.degree, ts, clamp=True)
        return rows @ curve.control
    if algorithm == "decasteljau":
        return _kernels.decasteljau_batch(
            curve.control, (dom.hi - ts) / dom.width, (ts - dom.lo) / dom.width
        )
    if algorithm == "matrix":
        return np.array([eval_matrix_form(curve, float(t)) for t in ts])
    raise ConstraintError(f"unknown algorithm {algorithm!r}")


@dataclass(frozen=True)
class DeCasteljauTriangle:
    """All intermediate pyramid levels of one evaluation.

    ``levels[0]`` is the control polygon; ``levels[r]`` holds the
    ``n - r + 1`` points after r combination steps; the apex is the curve
    point.
    """

    levels: tuple[np.ndarray, ...]

    @property
    def apex(self) -> np.ndarray:
        return self.levels[-1][0]


def decasteljau_triangle(curve: Curve, t: float, *, clamp: bool = False) -> DeCasteljauTriangle:
    """Run the pyramid and keep every level."""
    t = curve.domain.admit(t, clamp)
    wl, wr = _weights(curve.domain, t)
    work = curve.control
    levels = [work]
    for _ in range(curve.degree):
        work = wl * work[:-1] + wr * work[1:]
        work.setflags(write=False)
        levels.append(work)
    return DeCasteljauTriangle(tuple(levels))


def _band_matrix(rows: int, wl: float, wr: float) -> np.ndarray:
    mat = np.zeros((rows, rows + 1))
    idx = np.arange(rows)
    mat[idx, idx] = wl
    mat[idx, idx + 1] = wr
    return mat


def step_matrix(
    config: ShiftedKnotConfig, n: int, r: int, t: float, *, clamp: bool = False
) -> np.ndarray:
    """Matrix of pyramid step ``r`` (1-based), shape ``(n-r+1, n-r+2)``.

    Each row holds the convex pair; the product of all n step matrices
    applied to the control polygon yields the curve point.
    """
    dom = domain(config, n)
    if not isinstance(r, (int, np.integer)) or isinstance(r, bool):
        raise IndexError(f"step index must be an integer, got {r!r}")
    if not 1 <= int(r) <= n:
        raise IndexError(f"step index {r} outside 1..{n}")
    t = dom.admit(t, clamp)
    wl, wr = _weights(dom, t)
    return _band_matrix(n - int(r) + 1, wl, wr)


def elevation_matrix(n: int) -> np.ndarray:
    """Degree elevation as a row-stochastic bidiagonal matrix.

    Shape ``(n + 2, n + 1)``: row j blends ``j/(n+1)`` of point ``j - 1``
    with ``(n+1-j)/(n+1)`` of point ``j``, so both endpoints are copied
    verbatim.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ConstraintError(f"degree must be an integer, got {n!r}")
    n = int(n)
    if n < 1 or n > MAX_DEGREE:
        raise ConstraintError(f"degree {n} outside 1..{MAX_DEGREE}")
    mat = np.zeros((n + 2, n + 1))
    for j in range(n + 2):
        if j <= n:
            mat[j, j] = (n + 1 - j) / (n + 1)
        if j >= 1:
            mat[j, j - 1] = j / (n + 1)
    return mat


def elevate(curve: Curve) -> Curve:
    """Rewrite the curve with one more control point.

    The new polygon reproduces the same point set: the degree-(n+1) curve
    traced over its own domain matches the original traced over its domain
    at equal normalized parameters.
    """
    return Curve(curve.config, elevation_matrix(curve.degree) @ curve.control)


def elevate_many(curve: Curve, levels: int) -> Curve:
    """Apply :func:`elevate` ``levels`` times."""
    if not isinstance(levels, (int, np.integer)) or isinstance(levels, bool) or levels < 1:
        raise ConstraintError(f"elevation count must be a positive integer, got {levels!r}")
    for _ in range(int(levels)):
        curve = elevate(curve)
    return curve


def endpoint_derivative(curve: Curve, end: str) -> np.ndarray:
    """One-sided derivative at ``end`` ("lo" or "hi").

    Equals ``(n + beta) * (P1 - P0)`` at the left end and
    ``(n + beta) * (Pn - P(n-1))`` at the right end, so the tangent leaves
    along the first (or arrives along the last) polygon leg.
    """
    factor = curve.degree + curve.config.beta
    if end == "lo":
        return factor * (curve.control[1] - curve.control[0])
    if end == "hi":
        return factor * (curve.control[-1] - curve.control[-2])
    raise ConstraintError(f"end must be 'lo' or 'hi', got {end!r}")
