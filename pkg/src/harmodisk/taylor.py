"""Taylor expansion of the approximant about interior points, with a fully
computable remainder certificate on the region |h| < L/3, L the distance from
the expansion center to the boundary circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import DomainError
from .estimates import BoundReport, taylor_remainder_bound
from .harmonic import HarmonicApproximant

CIRCLE_QUADRATURE_NODES = 4096
DEFAULT_ORDER = 12


def circle_l1_norm(u: HarmonicApproximant, center, L: float,
                   nodes: int = CIRCLE_QUADRATURE_NODES) -> float:
    """Arclength integral of |u| over the circle of radius L about center,
    by the periodic trapezoid rule."""
    if L <= 0.0:
        raise DomainError("circle radius must be positive")
    x0, y0 = float(center[0]), float(center[1])
    phi = -np.pi + 2.0 * np.pi * np.arange(nodes) / nodes
    vals = np.abs(u.eval(x0 + L * np.cos(phi), y0 + L * np.sin(phi)))
    return float(2.0 * np.pi * L / nodes * np.sum(vals))


@dataclass(frozen=True)
class TaylorExpansion:
    """Truncated Taylor data of an approximant at an interior center.

    ``coeffs[i, j]`` is D^{(i,j)} u (center) / (i! j!) for i + j < order; the
    circle L1 norm at radius L is precomputed so every later remainder
    certificate is self-contained.
    """

    center: Tuple[float, float]
    L: float
    order: int
    coeffs: np.ndarray
    l1_circle: float

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        if self.L <= 0.0:
            raise ValueError("positive boundary distance required")

    def eval_series(self, h, force: bool = False) -> Tuple[float, Optional[BoundReport]]:
        """Partial sum at displacement h plus its remainder certificate.

        The certificate holds for kappa = |h|/L < 1/3; larger displacements
        are refused unless ``force`` is set, in which case the partial sum is
        returned with no certificate (None).
        """
        h1, h2 = float(h[0]), float(h[1])
        kappa = math.hypot(h1, h2) / self.L
        if kappa >= 1.0 / 3.0 and not force:
            raise DomainError(
                f"|h| = {kappa:.4g} L outside the certified region |h| < L/3")
        h1p = h1 ** np.arange(self.order)
        h2p = h2 ** np.arange(self.order)
        value = 0.0
        for k in range(self.order):
            for i in range(k + 1):
                value += self.coeffs[i, k - i] * h1p[i] * h2p[k - i]
        if kappa >= 1.0 / 3.0:
            return value, None
        report = taylor_remainder_bound(kappa, self.order, self.L, self.l1_circle)
        return value, report


def expand(u: HarmonicApproximant, center, order: int,
           nodes: int = CIRCLE_QUADRATURE_NODES) -> TaylorExpansion:
    """Taylor-expand the approximant at an interior center up to the given
    truncation degree (coefficients for total order < ``order``)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x0, y0 = float(center[0]), float(center[1])
    R = u.geometry.R
    norm = math.hypot(x0, y0)
    if norm >= R:
        raise DomainError(f"expansion center at radius {norm} not inside the open disk")
    L = R - norm
    coeffs = np.zeros((order, order))
    for i in range(order):
        for j in range(order - i):
            d = u.eval_derivative(x0, y0, i, j)
            coeffs[i, j] = d / (math.factorial(i) * math.factorial(j))
    l1 = circle_l1_norm(u, (x0, y0), L, nodes)
    return TaylorExpansion((x0, y0), L, order, coeffs, l1)
