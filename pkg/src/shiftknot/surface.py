"""Tensor-product Bezier patches over shifted-knot Bernstein bases.

A patch of degrees ``(m, n)`` blends an ``(m+1) x (n+1)`` control net with
one basis row per direction. The two directions share the knot-shift pair
but carry their own domains: u lives on the degree-m interval and v on the
degree-n interval.
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
from .curve import Curve, _weights
from .errors import ConstraintError

__all__ = [
    "SurfacePatch",
    "eval_patch",
    "eval_patch_decasteljau",
    "sample_patch",
    "isoparam_u",
    "isoparam_v",
    "elevation_weights",
    "elevate_patch",
]


@dataclass(frozen=True)
class SurfacePatch:
    """Immutable control net plus its knot-shift configuration."""

    config: ShiftedKnotConfig
    net: np.ndarray

    def __post_init__(self):
        if not isinstance(self.config, ShiftedKnotConfig):
            raise ConstraintError("config must be a ShiftedKnotConfig")
        try:
            arr = np.array(self.net, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise ConstraintError("control net must form a rectangular numeric array") from exc
        if arr.ndim != 3:
            raise ConstraintError(
                f"control net must be (m+1) x (n+1) points, got shape {arr.shape}"
            )
        if arr.shape[0] < 2 or arr.shape[1] < 2:
            raise ConstraintError("control net needs at least 2 points per direction")
        if arr.shape[2] < 1:
            raise ConstraintError("control net points need at least one coordinate")
        if not np.all(np.isfinite(arr)):
            raise ConstraintError("control net coordinates must be finite")
        if arr.shape[0] - 1 > MAX_DEGREE or arr.shape[1] - 1 > MAX_DEGREE:
            raise ConstraintError(f"patch degrees exceed the supported maximum {MAX_DEGREE}")
        arr.setflags(write=False)
        object.__setattr__(self, "net", arr)

    @property
    def degrees(self) -> tuple[int, int]:
        return self.net.shape[0] - 1, self.net.shape[1] - 1

    @property
    def dimension(self) -> int:
        return self.net.shape[2]

    @property
    def domain_u(self) -> DomainInterval:
        return domain(self.config, self.net.shape[0] - 1)

    @property
    def domain_v(self) -> DomainInterval:
        return domain(self.config, self.net.shape[1] - 1)


def eval_patch(patch: SurfacePatch, u: float, v: float, *, clamp: bool = False) -> np.ndarray:
    """Blend the net with one basis row per direction."""
    m, n = patch.degrees
    row_u = basis_row(patch.config, m, u, clamp=clamp)
    row_v = basis_row(patch.config, n, v, clamp=clamp)
    return np.einsum("i,ijc,j->c", row_u, patch.net, row_v)


def sample_patch(patch: SurfacePatch, us, vs, *, clamp: bool = False) -> np.ndarray:
    """Evaluate over the full grid ``us x vs``, shape ``(U, V, dimension)``."""
    m, n = patch.degrees
    rows_u = basis_rows(patch.config, m, us, clamp=clamp)
    rows_v = basis_rows(patch.config, n, vs, clamp=clamp)
    return _kernels.patch_grid(patch.net, rows_u, rows_v)


def isoparam_u(patch: SurfacePatch, v_star: float, *, clamp: bool = False) -> Curve:
    """Freeze v; the result is the degree-m curve traced by u."""
    _, n = patch.degrees
    row_v = basis_row(patch.config, n, v_star, clamp=clamp)
    return Curve(patch.config, np.einsum("ijc,j->ic", patch.net, row_v))


def isoparam_v(patch: SurfacePatch, u_star: float, *, clamp: bool = False) -> Curve:
    """Freeze u; the result is the degree-n curve traced by v."""
    m, _ = patch.degrees
    row_u = basis_row(patch.config, m, u_star, clamp=clamp)
    return Curve(patch.config, np.einsum("ijc,i->jc", patch.net, row_u))


def elevation_weights(degree: int) -> np.ndarray:
    """Blend fractions ``i / (degree + 1)`` for ``i = 0 .. degree + 1``."""
    if not isinstance(degree, (int, np.integer)) or isinstance(degree, bool) or degree < 1:
        raise ConstraintError(f"degree must be a positive integer, got {degree!r}")
    return np.arange(int(degree) + 2) / (int(degree) + 1)


def elevate_patch(patch: SurfacePatch) -> SurfacePatch:
    """Raise both degrees by one without changing the traced surface.

    Each new control point is the bilinear blend of its up-to-four old
    neighbours; the four weights sum to 1, and the corner rows/columns copy
    the old boundary exactly. Equivalent to elevating every row of the net
    as a curve, then every column.
    """
    m, n = patch.degrees
    dim = patch.dimension
    au = elevation_weights(m)[:, None, None]
    bv = elevation_weights(n)[None, :, None]
    out = np.zeros((m + 2, n + 2, dim))
    out[1:, 1:] += (au[1:] * bv[:, 1:]) * patch.net
    out[1:, :-1] += (au[1:] * (1.0 - bv[:, :-1])) * patch.net
    out[:-1, 1:] += ((1.0 - au[:-1]) * bv[:, 1:]) * patch.net
    out[:-1, :-1] += ((1.0 - au[:-1]) * (1.0 - bv[:, :-1])) * patch.net
    return SurfacePatch(patch.config, out)


def eval_patch_decasteljau(
    patch: SurfacePatch, u: float, v: float, *, clamp: bool = False
) -> np.ndarray:
    """Collapse the net with bidirectional convex steps.

    Runs ``min(m, n)`` simultaneous 2x2 stencil steps; if the degrees
    differ, the surviving polygon along the longer direction is finished
    with one-directional steps using that direction's weights.
    """
    m, n = patch.degrees
    dom_u, dom_v = patch.domain_u, patch.domain_v
    u = dom_u.admit(u, clamp)
    v = dom_v.admit(v, clamp)
    wlu, wru = _weights(dom_u, u)
    wlv, wrv = _weights(dom_v, v)
    work = patch.net
    for _ in range(min(m, n)):
        work = (
            (wlu * wlv) * work[:-1, :-1]
            + (wlu * wrv) * work[:-1, 1:]
            + (wru * wlv) * work[1:, :-1]
            + (wru * wrv) * work[1:, 1:]
        )
    if m > n:
        poly, wl, wr = work[:, 0, :], wlu, wru
    elif n > m:
        poly, wl, wr = work[0, :, :], wlv, wrv
    else:
        return work[0, 0]
    for _ in range(abs(m - n)):
        poly = wl * poly[:-1] + wr * poly[1:]
    return poly[0]
