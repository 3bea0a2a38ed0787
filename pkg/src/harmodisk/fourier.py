"""Scaled Fourier coefficients of the boundary pullback by periodic quadrature.

Coefficients are stored in the scaled form a_k = R^k c_k, b_k = R^k d_k where
c_k, d_k are the raw cosine/sine coefficients of f against 1/(R^k pi).  The
scaled form keeps every downstream formula in powers of (r/R), which stays in
floating-point range for any disk radius.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .boundary_data import BoundaryData, DiskGeometry
from .errors import AliasingError, BoundaryDataError


def default_node_count(n_max: int) -> int:
    """Default quadrature resolution: generous for the built-in corpus."""
    return max(4096, 8 * n_max)


@dataclass(frozen=True)
class FourierSpectrum:
    """Scaled Fourier data of a boundary function.

    a[k] for k = 0..n_max, b[k-1] for k = 1..n_max; M is the number of uniform
    quadrature nodes that produced them.
    """

    geometry: DiskGeometry
    n_max: int
    a: np.ndarray
    b: np.ndarray
    M: int

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a.shape != (self.n_max + 1,) or b.shape != (self.n_max,):
            raise ValueError("coefficient vectors do not match n_max")

    def coefficient_scale(self) -> float:
        """|a_0|/2 + sum |a_k| + sum |b_k|: a plain majorant of the series."""
        return float(abs(self.a[0]) / 2.0 + np.sum(np.abs(self.a[1:])) + np.sum(np.abs(self.b)))

    def truncate(self, n: int) -> "FourierSpectrum":
        """Drop harmonics above n.  Coefficients are unchanged, so truncations
        of one high-resolution spectrum are mutually consistent."""
        if n > self.n_max:
            raise ValueError(f"cannot truncate to {n} > n_max = {self.n_max}")
        return FourierSpectrum(self.geometry, n, self.a[: n + 1].copy(),
                               self.b[:n].copy(), self.M)

    def to_dict(self) -> dict:
        return {
            "R": self.geometry.R,
            "n_max": self.n_max,
            "M": self.M,
            "a": [float(v) for v in self.a],
            "b": [float(v) for v in self.b],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FourierSpectrum":
        return cls(DiskGeometry(float(d["R"])), int(d["n_max"]),
                   np.asarray(d["a"], dtype=float), np.asarray(d["b"], dtype=float),
                   int(d["M"]))

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()) + "\n")

    @classmethod
    def load(cls, path) -> "FourierSpectrum":
        return cls.from_dict(json.loads(Path(path).read_text()))


def compute_spectrum(b: BoundaryData, n_max: int, M: int | None = None) -> FourierSpectrum:
    """Periodic-trapezoid Fourier analysis of the boundary pullback.

    a_k = (2/M) sum_j f(theta_j) cos(k theta_j) on theta_j = -pi + 2*pi*j/M,
    and likewise for b_k.  Exact (to rounding) whenever f is a trigonometric
    polynomial of degree < M - n_max; M < 2*n_max + 2 is refused outright
    rather than silently aliased.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if M is None:
        M = default_node_count(n_max)
    if M < 2 * n_max + 2:
        raise AliasingError(f"need M >= 2*n_max + 2 = {2 * n_max + 2} nodes, got {M}")
    vals = b.node_values(M)
    if not np.all(np.isfinite(vals)):
        raise BoundaryDataError("non-finite boundary value at quadrature node")
    theta = -np.pi + 2.0 * np.pi * np.arange(M) / M
    k = np.arange(n_max + 1)
    # Nodes are processed in fixed-size chunks in fixed order, so results are
    # bit-reproducible and the (n_max+1) x M work matrix stays bounded.
    chunk = max(1024, min(M, (1 << 22) // (n_max + 1)))
    a = np.zeros(n_max + 1)
    b_coef = np.zeros(max(n_max, 1))
    for start in range(0, M, chunk):
        sl = slice(start, min(start + chunk, M))
        angles = np.outer(k, theta[sl])
        a += np.cos(angles) @ vals[sl]
        if n_max >= 1:
            b_coef[:n_max] += np.sin(angles[1:]) @ vals[sl]
    a *= 2.0 / M
    b_coef = b_coef[:n_max] * (2.0 / M)
    return FourierSpectrum(b.geometry, n_max, a, b_coef, M)


class BoundaryL1(NamedTuple):
    angular: float      # integral of |f| d theta over [-pi, pi]
    arclength: float    # integral of |g| ds over the circle = R * angular


def l1_boundary_norm(b: BoundaryData, M: int | None = None) -> BoundaryL1:
    """Periodic-trapezoid estimate of the L1 norm of the boundary data.

    Returns both the angular integral of |f| and its arclength equivalent on
    the circle of radius R.
    """
    if M is None:
        M = 4096
    if M < 4:
        raise ValueError("need at least 4 quadrature nodes")
    vals = np.abs(b.node_values(M))
    if not np.all(np.isfinite(vals)):
        raise BoundaryDataError("non-finite boundary value at quadrature node")
    angular = float(2.0 * np.pi / M * np.sum(vals))
    return BoundaryL1(angular, b.geometry.R * angular)
