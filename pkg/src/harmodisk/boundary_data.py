"""Boundary data on the circle: Cartesian/polar pullback and Hölder regularity probes.

The solver never consumes ``g(x, y)`` directly; everything downstream sees the
angular pullback ``f(theta) = g(R cos theta, R sin theta)`` as a 2*pi-periodic
function on [-pi, pi].
"""

from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from .errors import BoundaryDataError, BranchCutError

# Points closer than this to the half-line {x <= 0, y = 0} are rejected by
# theta_of; the polynomial evaluator is the right tool there.
BRANCH_CUT_TOLERANCE = 1e-12

_PERIODICITY_TOL = 1e-9
_PROBE_GRID = 512


@dataclass(frozen=True)
class DiskGeometry:
    """The open disk of radius R centered at the origin."""

    R: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.R) and self.R > 0.0):
            raise ValueError(f"disk radius must be positive and finite, got {self.R!r}")


@dataclass(frozen=True)
class CartesianPoint:
    x: float
    y: float

    @property
    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def to_polar(self) -> "PolarPoint":
        return PolarPoint(self.norm, theta_of(self.x, self.y))


@dataclass(frozen=True)
class PolarPoint:
    r: float
    theta: float

    def __post_init__(self) -> None:
        if self.r < 0.0:
            raise ValueError("polar radius must be nonnegative")

    def to_cartesian(self) -> CartesianPoint:
        return CartesianPoint(self.r * math.cos(self.theta), self.r * math.sin(self.theta))


def theta_of(x, y):
    """Polar angle in (-pi, pi), defined off the half-line S = {x <= 0, y = 0}.

    Branches:
        arctan(y/x)           if x > 0
        -arctan(x/y) + pi/2   if x <= 0, y > 0
        -arctan(x/y) - pi/2   if x <= 0, y < 0

    Raises BranchCutError for points within ``BRANCH_CUT_TOLERANCE`` of S
    (which includes the origin).
    """
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    dist_to_cut = np.where(x_arr > 0.0, np.hypot(x_arr, y_arr), np.abs(y_arr))
    if np.any(dist_to_cut <= BRANCH_CUT_TOLERANCE):
        raise BranchCutError(
            "polar angle undefined within %.0e of the half-line {x <= 0, y = 0}"
            % BRANCH_CUT_TOLERANCE
        )
    with np.errstate(divide="ignore", over="ignore"):
        positive_x = np.arctan(np.divide(y_arr, np.where(x_arr > 0.0, x_arr, 1.0)))
        other = -np.arctan(np.divide(x_arr, np.where(y_arr != 0.0, y_arr, 1.0)))
        other = other + np.where(y_arr > 0.0, np.pi / 2.0, -np.pi / 2.0)
    out = np.where(x_arr > 0.0, positive_x, other)
    if out.ndim == 0:
        return float(out)
    return out


def wrap_angle(theta):
    """Reduce angles to [-pi, pi)."""
    return np.mod(np.asarray(theta, dtype=float) + np.pi, 2.0 * np.pi) - np.pi


@dataclass(frozen=True)
class Smoothness:
    """Declared regularity class C^{k, alpha} of the angular pullback.

    ``seminorm`` is the declared value of the Hölder seminorm of the k-th
    derivative, when the caller knows it; bounds built from a declared
    seminorm are marked ``seminorm_source = "declared"``.
    """

    k: int
    alpha: float
    seminorm: Optional[float] = None

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("smoothness order k must be >= 0")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("Hölder exponent must lie in (0, 1]")
        if self.seminorm is not None and self.seminorm < 0.0:
            raise ValueError("declared seminorm must be nonnegative")


class BoundaryData:
    """Angular boundary values f(theta) on [-pi, pi], periodic.

    The source is either a closed-form callable or a vector of M uniform
    samples at theta_j = -pi + 2*pi*j/M.  Immutable after construction.
    """

    def __init__(
        self,
        geometry: DiskGeometry,
        func: Optional[Callable] = None,
        samples: Optional[np.ndarray] = None,
        smoothness: Optional[Smoothness] = None,
        name: str = "",
    ):
        if (func is None) == (samples is None):
            raise ValueError("provide exactly one of func or samples")
        self.geometry = geometry
        self.smoothness = smoothness
        self.name = name
        self._func = func
        if samples is not None:
            samples = np.asarray(samples, dtype=float).ravel()
            if samples.size < 4:
                raise BoundaryDataError("need at least 4 uniform samples")
            if not np.all(np.isfinite(samples)):
                raise BoundaryDataError("non-finite boundary sample")
            self._samples = samples.copy()
            self._samples.setflags(write=False)
        else:
            self._samples = None
            self._check_probe()

    @classmethod
    def from_callable(cls, f, geometry, smoothness=None, name=""):
        return cls(geometry, func=f, smoothness=smoothness, name=name)

    @classmethod
    def from_samples(cls, values, geometry, smoothness=None, name=""):
        return cls(geometry, samples=values, smoothness=smoothness, name=name)

    def _check_probe(self) -> None:
        theta = np.linspace(-np.pi, np.pi, _PROBE_GRID + 1)
        vals = np.asarray(self._func(theta), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise BoundaryDataError("boundary function returned a non-finite value")
        scale = 1.0 + np.max(np.abs(vals))
        if abs(vals[0] - vals[-1]) > _PERIODICITY_TOL * scale:
            raise BoundaryDataError(
                f"boundary data not periodic: f(-pi)={vals[0]!r} vs f(pi)={vals[-1]!r}"
            )

    @property
    def is_sampled(self) -> bool:
        return self._samples is not None

    @property
    def sample_count(self) -> Optional[int]:
        return None if self._samples is None else int(self._samples.size)

    def __call__(self, theta):
        """Evaluate f at angles (scalar or array), treating f as 2*pi-periodic."""
        theta = np.asarray(theta, dtype=float)
        if self._func is not None:
            out = np.asarray(self._func(theta), dtype=float)
        else:
            # periodic linear interpolation on the uniform sample grid
            m = self._samples.size
            pos = (theta + np.pi) * m / (2.0 * np.pi)
            j = np.floor(pos).astype(int)
            frac = pos - j
            j0 = np.mod(j, m)
            j1 = np.mod(j + 1, m)
            out = (1.0 - frac) * self._samples[j0] + frac * self._samples[j1]
        if out.ndim == 0:
            return float(out)
        return out

    def node_values(self, M: int) -> np.ndarray:
        """f at the M uniform quadrature nodes theta_j = -pi + 2*pi*j/M."""
        theta = -np.pi + 2.0 * np.pi * np.arange(M) / M
        return np.asarray(self(theta), dtype=float)

    def grid_range(self, M: int = 4096) -> tuple:
        vals = self.node_values(M)
        return float(vals.min()), float(vals.max())


def pullback(g, geometry: DiskGeometry, smoothness: Optional[Smoothness] = None,
             name: str = "") -> BoundaryData:
    """Restrict g(x, y) to the circle of radius R and pull it back to an angle.

    Probes g on a uniform angular grid and rejects non-finite values.
    """
    R = geometry.R

    def f(theta):
        return g(R * np.cos(theta), R * np.sin(theta))

    return BoundaryData.from_callable(f, geometry, smoothness=smoothness, name=name)


def holder_seminorm_estimate(b: BoundaryData, alpha: float, n_base: int = 2048,
                             n_scales: int = 16) -> float:
    """Lower-bound estimate of the Hölder seminorm of f by grid maximization.

    Maximizes |f(t + d) - f(t)| / d^alpha over n_base uniform base angles and
    dyadic separations d = 2*pi / 2^m, m = 1..n_scales.  Refining either grid
    only adds candidate pairs, so the estimate is monotone nondecreasing under
    refinement and never exceeds the true seminorm.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("Hölder exponent must lie in (0, 1]")
    theta = -np.pi + 2.0 * np.pi * np.arange(n_base) / n_base
    base = np.asarray(b(theta), dtype=float)
    if not np.all(np.isfinite(base)):
        raise BoundaryDataError("non-finite boundary value on probe grid")
    best = 0.0
    for m in range(1, n_scales + 1):
        delta = 2.0 * np.pi / 2.0**m
        shifted = np.asarray(b(wrap_angle(theta + delta)), dtype=float)
        quotients = np.abs(shifted - base) / delta**alpha
        best = max(best, float(quotients.max()))
    return best


def chordal_seminorm_estimate(g, geometry: DiskGeometry, alpha: float,
                              n_base: int = 2048, n_scales: int = 16) -> float:
    """Grid estimate of the Hölder seminorm of g on the circle, with chordal distance.

    Uses the same angle pairs as :func:`holder_seminorm_estimate` but measures
    separation by the chord |p1 - p2| = 2 R sin(|t1 - t2| / 2).
    """
    R = geometry.R
    theta = -np.pi + 2.0 * np.pi * np.arange(n_base) / n_base
    base = np.asarray(g(R * np.cos(theta), R * np.sin(theta)), dtype=float)
    best = 0.0
    for m in range(1, n_scales + 1):
        delta = 2.0 * np.pi / 2.0**m
        t2 = theta + delta
        shifted = np.asarray(g(R * np.cos(t2), R * np.sin(t2)), dtype=float)
        chord = 2.0 * R * math.sin(delta / 2.0)
        quotients = np.abs(shifted - base) / chord**alpha
        best = max(best, float(quotients.max()))
    return best


# ---------------------------------------------------------------------------
# Built-in boundary expression corpus
# ---------------------------------------------------------------------------

def _const(value):
    return lambda theta: np.full_like(np.asarray(theta, dtype=float), value, dtype=float)


def _hat(theta):
    t = wrap_angle(theta)
    return np.maximum(0.0, 1.0 - 2.0 * np.abs(t) / np.pi)


def _square(theta):
    # Jump points sit at theta = 0 and +-pi with midpoint value 0, so uniform
    # quadrature grids see the average of the one-sided limits.
    t = wrap_angle(theta)
    return np.where(np.abs(np.abs(t) - np.pi) < 1e-14, 0.0, np.sign(t))


def _quadwave(theta):
    # Odd piecewise-quadratic wave t*(pi - |t|): C^1 with second derivative -+2.
    t = wrap_angle(theta)
    return t * (np.pi - np.abs(t))


def _abs_sin_pow(p):
    return lambda theta: np.abs(np.sin(np.asarray(theta, dtype=float) / 2.0)) ** p


_EXPR_PATTERN = re.compile(r"^(const|cos|sin|abssin)(-?\d+(?:\.\d+)?)$")

BUILTIN_EXPRESSIONS = (
    "const<v>     g = v                        (e.g. const5)",
    "cos<k>       f(theta) = cos(k theta)      (e.g. cos1, cos3)",
    "sin<k>       f(theta) = sin(k theta)",
    "abssin<p>    f(theta) = |sin(theta/2)|^p, 0 < p <= 1  (Hölder class C^p)",
    "hat          piecewise-linear tent on [-pi/2, pi/2]   (Lipschitz)",
    "quadwave     odd piecewise-quadratic wave             (C^{1,1})",
    "square       square wave sign(theta)                  (discontinuous)",
    "expcos       pullback of e^x cos y                    (entire harmonic)",
)


def boundary_expression(name: str, geometry: DiskGeometry) -> BoundaryData:
    """Build a named member of the closed-form boundary corpus.

    Every member carries its declared smoothness class (k, alpha) and, where
    known in closed form, the exact seminorm, so the bound machinery can emit
    reports with ``seminorm_source = "declared"``.  The square wave declares
    nothing: it fails the continuity hypothesis of every uniform bound.
    """
    R = geometry.R
    if name == "hat":
        sm = Smoothness(k=0, alpha=1.0, seminorm=2.0 / np.pi)
        return BoundaryData.from_callable(_hat, geometry, smoothness=sm, name=name)
    if name == "square":
        return BoundaryData.from_callable(_square, geometry, smoothness=None, name=name)
    if name == "quadwave":
        sm = Smoothness(k=1, alpha=1.0, seminorm=2.0)
        return BoundaryData.from_callable(_quadwave, geometry, smoothness=sm, name=name)
    if name == "expcos":
        # f(theta) = Re exp(R e^{i theta}); sup |f''| = e^R (R^2 + R) exactly.
        sm = Smoothness(k=1, alpha=1.0, seminorm=math.exp(R) * (R * R + R))
        return pullback(lambda x, y: np.exp(x) * np.cos(y), geometry,
                        smoothness=sm, name=name)
    match = _EXPR_PATTERN.match(name)
    if match is None:
        raise ValueError(f"unknown boundary expression {name!r}")
    kind, arg = match.group(1), match.group(2)
    if kind == "const":
        value = float(arg)
        sm = Smoothness(k=1, alpha=1.0, seminorm=0.0)
        return BoundaryData.from_callable(_const(value), geometry, smoothness=sm, name=name)
    if kind in ("cos", "sin"):
        freq = int(arg)
        if freq < 1:
            raise ValueError("harmonic index must be >= 1")
        func = (lambda theta: np.cos(freq * np.asarray(theta, dtype=float))) if kind == "cos" \
            else (lambda theta: np.sin(freq * np.asarray(theta, dtype=float)))
        sm = Smoothness(k=1, alpha=1.0, seminorm=float(freq**2))
        return BoundaryData.from_callable(func, geometry, smoothness=sm, name=name)
    # abssin<p>
    p = float(arg)
    if not 0.0 < p <= 1.0:
        raise ValueError("abssin exponent must lie in (0, 1]")
    # |sin(t/2)|^p is concave on [0, pi] with value 0 at 0, so the seminorm is
    # attained in the short-separation limit at the kink: 2^{-p}.
    sm = Smoothness(k=0, alpha=p, seminorm=2.0 ** (-p))
    return BoundaryData.from_callable(_abs_sin_pow(p), geometry, smoothness=sm, name=name)


def load_boundary_csv(path, geometry: DiskGeometry,
                      smoothness: Optional[Smoothness] = None) -> BoundaryData:
    """Read boundary samples from a CSV with header ``theta,value``.

    Angles must be strictly increasing in [-pi, pi).  Non-uniform grids are
    resampled onto a uniform grid of the same size by periodic linear
    interpolation.
    """
    path = Path(path)
    thetas, values = [], []
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip().lower() for c in header[:2]] != ["theta", "value"]:
            raise BoundaryDataError(f"{path}: expected header 'theta,value'")
        for row in reader:
            if not row:
                continue
            try:
                thetas.append(float(row[0]))
                values.append(float(row[1]))
            except (ValueError, IndexError) as exc:
                raise BoundaryDataError(f"{path}: bad row {row!r}") from exc
    theta = np.asarray(thetas)
    vals = np.asarray(values)
    if theta.size < 4:
        raise BoundaryDataError(f"{path}: need at least 4 samples")
    if np.any(np.diff(theta) <= 0.0):
        raise BoundaryDataError(f"{path}: angles must be strictly increasing")
    if theta[0] < -np.pi or theta[-1] >= np.pi:
        raise BoundaryDataError(f"{path}: angles must lie in [-pi, pi)")
    if not np.all(np.isfinite(vals)):
        raise BoundaryDataError(f"{path}: non-finite value")
    m = theta.size
    uniform = -np.pi + 2.0 * np.pi * np.arange(m) / m
    # wrap-around interpolation: extend one period on each side
    theta_ext = np.concatenate([theta[-1:] - 2.0 * np.pi, theta, theta[:1] + 2.0 * np.pi])
    vals_ext = np.concatenate([vals[-1:], vals, vals[:1]])
    resampled = np.interp(uniform, theta_ext, vals_ext)
    return BoundaryData.from_samples(resampled, geometry, smoothness=smoothness,
                                     name=str(path))
