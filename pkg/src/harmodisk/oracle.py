"""Independent reference implementations used only to validate the pipeline.

Nothing here is imported by the construction/evaluation/bounds modules: the
whole point of the polynomial route is to avoid the Poisson integral, and the
package honors that architecturally.  These functions exist so tests (and the
CLI's --compare-oracle flag) can check the pipeline against a slower, totally
different arithmetic path.
"""

from __future__ import annotations

import math

import numpy as np

from .boundary_data import BoundaryData
from .errors import DomainError
from .fourier import FourierSpectrum


def default_poisson_nodes(radius_ratio: float) -> int:
    """Node count heuristic: the kernel peaks like 1/(1 - r/R) near the
    boundary, so resolution scales the same way."""
    if radius_ratio >= 1.0:
        raise DomainError("Poisson integral only defined strictly inside the disk")
    return max(8192, math.ceil(100.0 / (1.0 - radius_ratio)))


def poisson_eval(b: BoundaryData, x: float, y: float, M: int | None = None) -> float:
    """Solution value at an interior point by trapezoid quadrature of the
    Poisson integral

        u(x, y) = (R^2 - x^2 - y^2) / (2 pi) *
                  integral f(phi) / (R^2 + x^2 + y^2 - 2R(x cos phi + y sin phi)) d phi.
    """
    R = b.geometry.R
    x, y = float(x), float(y)
    rho2 = x * x + y * y
    if rho2 >= R * R:
        raise DomainError("Poisson integral only defined strictly inside the disk")
    if M is None:
        M = default_poisson_nodes(math.sqrt(rho2) / R)
    phi = -np.pi + 2.0 * np.pi * np.arange(M) / M
    fv = b.node_values(M)
    denom = R * R + rho2 - 2.0 * R * (x * np.cos(phi) + y * np.sin(phi))
    return float((R * R - rho2) / M * np.sum(fv / denom))


def poisson_eval_grid(b: BoundaryData, xs, ys, M: int | None = None) -> np.ndarray:
    """Poisson values at many interior points (one quadrature rule shared by
    all points; pass M explicitly for near-boundary grids)."""
    xs = np.asarray(xs, dtype=float).ravel()
    ys = np.asarray(ys, dtype=float).ravel()
    R = b.geometry.R
    rho2 = xs * xs + ys * ys
    if np.any(rho2 >= R * R):
        raise DomainError("Poisson integral only defined strictly inside the disk")
    if M is None:
        M = default_poisson_nodes(math.sqrt(float(rho2.max())) / R)
    phi = -np.pi + 2.0 * np.pi * np.arange(M) / M
    fv = b.node_values(M)
    cphi, sphi = np.cos(phi), np.sin(phi)
    out = np.empty_like(xs)
    # fixed-size point chunks keep the (points x M) kernel matrix bounded
    chunk = max(1, (1 << 23) // M)
    for start in range(0, xs.size, chunk):
        sl = slice(start, min(start + chunk, xs.size))
        denom = (R * R + rho2[sl, None]
                 - 2.0 * R * (xs[sl, None] * cphi + ys[sl, None] * sphi))
        out[sl] = (R * R - rho2[sl]) / M * ((1.0 / denom) @ fv)
    return out


def polar_partial_sum(s: FourierSpectrum, r: float, theta: float):
    """Partial sum in polar form, a_0/2 + sum (r/R)^k (a_k cos k t + b_k sin k t),
    evaluated with library trigonometric calls.  Deliberately a different
    arithmetic path from the Cartesian recurrence."""
    R = s.geometry.R
    r = float(r)
    if r > R * (1.0 + 1e-12):
        raise DomainError(f"radius {r} outside the closed disk of radius {R}")
    theta = np.asarray(theta, dtype=float)
    out = np.full(theta.shape, s.a[0] / 2.0)
    ratio = r / R
    for k in range(1, s.n_max + 1):
        out += ratio**k * (s.a[k] * np.cos(k * theta) + s.b[k - 1] * np.sin(k * theta))
    if out.ndim == 0:
        return float(out)
    return out


def abel_sum(a, b) -> float:
    """Dot product sum a_k b_k computed by summation by parts:

        sum_{k=1}^{m} a_k b_k = a_{m+1} B_m - a_1 B_0 - sum (a_{k+1} - a_k) B_k,

    with B_k the partial sums of b.  ``a`` carries one trailing pad element
    (a_{m+1}), so len(a) must be len(b) + 1.  Equals the direct dot product;
    exists to reproduce tail-difference estimates numerically.
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if b.size < 1 or a.size != b.size + 1:
        raise ValueError(f"need len(a) == len(b) + 1 >= 2, got {a.size}, {b.size}")
    B = np.cumsum(b)
    total = a[-1] * B[-1]
    total -= float(np.sum((a[1:] - a[:-1]) * B))
    return float(total)
