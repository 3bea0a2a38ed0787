"""Quantitative a-priori bounds as inspectable, recomputable reports.

Every operation returns a :class:`BoundReport` that echoes all of its inputs;
``recompute`` rebuilds any report from its own serialized form, which is the
reproducibility contract for study artifacts.

The Jackson-type constants gamma_0, gamma_k are universal but have no
published numeric value; the configured defaults (3.0) are conservative
placeholders.  Everything multiplied by a gamma is therefore a *shape*
statement, not certified ground truth, and callers are expected to treat
absolute levels as diagnostics.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Tuple

from .boundary_data import BoundaryData
from .errors import DomainError

DEFAULT_GAMMA = 3.0


@dataclass(frozen=True)
class JacksonConstants:
    """Configured values for gamma_0, gamma_1, ... (dimensionless, all > 0)."""

    gamma: Tuple[float, ...] = field(default=(DEFAULT_GAMMA,) * 8)

    def __post_init__(self) -> None:
        if len(self.gamma) == 0 or any(g <= 0.0 for g in self.gamma):
            raise ValueError("all Jackson constants must be positive")

    @property
    def gamma0(self) -> float:
        return self.gamma[0]

    def gamma_k(self, k: int) -> float:
        if k < 1:
            raise ValueError("smooth-order constant index must be >= 1")
        return self.gamma[k] if k < len(self.gamma) else self.gamma[-1]


@dataclass(frozen=True)
class BoundReport:
    """One computed bound with full provenance.

    ``applicable`` is False when a hypothesis of the underlying estimate fails
    (n below the admissible threshold, undeclared continuity, ...); the value
    is still reported for inspection.
    """

    kind: str
    inputs: dict
    value: float
    applicable: bool

    def __post_init__(self) -> None:
        if self.applicable and not (math.isfinite(self.value) and self.value >= 0.0):
            raise ValueError(f"applicable bound must be finite and >= 0, got {self.value!r}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "inputs": dict(self.inputs),
                "value": self.value, "applicable": self.applicable}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        return cls(d["kind"], dict(d["inputs"]), float(d["value"]), bool(d["applicable"]))


def uniform_error_bound(seminorm: float, alpha: float, n: int, point, R: float,
                        gamma0: float = DEFAULT_GAMMA,
                        seminorm_source: str = "declared") -> BoundReport:
    """Jackson-rate uniform bound on |u - u_n| at a point of the closed disk:

        2 gamma0 (2 pi)^alpha [f]_{C^alpha} (|p| / R)^{n+1} n^{-alpha} ln n.

    Applicable once n >= e^{1/alpha} (below that the ln/power product is not
    monotone and the derivation gives nothing).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 < alpha <= 1.0:
        raise ValueError("Hölder exponent must lie in (0, 1]")
    if seminorm < 0.0:
        raise ValueError("seminorm must be nonnegative")
    x, y = float(point[0]), float(point[1])
    rho = math.hypot(x, y)
    if rho > R * (1.0 + 1e-12):
        raise DomainError(f"point at radius {rho} outside the closed disk of radius {R}")
    value = (2.0 * gamma0 * (2.0 * math.pi) ** alpha * seminorm
             * (rho / R) ** (n + 1) * n ** (-alpha) * math.log(n))
    return BoundReport(
        kind="uniform_error",
        inputs={"seminorm": seminorm, "seminorm_source": seminorm_source,
                "alpha": alpha, "n": n, "point": [x, y], "R": R, "gamma0": gamma0},
        value=value,
        applicable=n >= math.exp(1.0 / alpha),
    )


def uniform_error_bound_smooth(seminorm_k: float, k: int, alpha: float, n: int,
                               point, R: float, gamma_k: float = DEFAULT_GAMMA,
                               seminorm_source: str = "declared") -> BoundReport:
    """Accelerated uniform bound for boundary data with f in C^{k, alpha}:
    same shape as :func:`uniform_error_bound` with decay exponent k + alpha,
    applicable once n >= e."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1; use uniform_error_bound for k = 0")
    if not 0.0 < alpha <= 1.0:
        raise ValueError("Hölder exponent must lie in (0, 1]")
    if seminorm_k < 0.0:
        raise ValueError("seminorm must be nonnegative")
    x, y = float(point[0]), float(point[1])
    rho = math.hypot(x, y)
    if rho > R * (1.0 + 1e-12):
        raise DomainError(f"point at radius {rho} outside the closed disk of radius {R}")
    value = (2.0 * gamma_k * (2.0 * math.pi) ** alpha * seminorm_k
             * (rho / R) ** (n + 1) * n ** (-(k + alpha)) * math.log(n))
    return BoundReport(
        kind="uniform_error_smooth",
        inputs={"seminorm_k": seminorm_k, "seminorm_source": seminorm_source,
                "k": k, "alpha": alpha, "n": n, "point": [x, y], "R": R,
                "gamma_k": gamma_k},
        value=value,
        applicable=n >= math.e,
    )


def derivative_bound(l1_f: float, mean_f_abs_term: float, a1: int, a2: int,
                     r: float, R: float) -> BoundReport:
    """L1-boundary-data bound on |D^{(a1,a2)} u| over the closed disk of radius r:

        R (a1+a2)! / (pi (R - r)^{a1+a2+1}) * integral |f|,

    plus, at order zero only, the constant term ``mean_f_abs_term`` (callers
    normally pass l1_f / (2 pi), the magnitude bound on the mean term).  For
    positive orders the constant differentiates away.
    """
    if a1 < 0 or a2 < 0:
        raise ValueError("derivative orders must be nonnegative")
    if l1_f < 0.0:
        raise ValueError("L1 norm must be nonnegative")
    if not 0.0 <= r < R:
        raise DomainError(f"need 0 <= r < R, got r={r}, R={R}")
    s = a1 + a2
    series_term = R * math.factorial(s) * l1_f / (math.pi * (R - r) ** (s + 1))
    value = series_term + (mean_f_abs_term if s == 0 else 0.0)
    return BoundReport(
        kind="derivative",
        inputs={"l1_f": l1_f, "mean_f_abs_term": mean_f_abs_term,
                "a1": a1, "a2": a2, "r": r, "R": R},
        value=value,
        applicable=True,
    )


def interior_derivative_bound(l1_u_circle: float, sup_u: float, order: int,
                              L: float) -> BoundReport:
    """Pointwise bound on order-(a1+a2) derivatives of a harmonic function at
    the center of a circle of radius L on which it is harmonic:

        order! / (pi L^{order+1}) * integral_{circle} |u| ds
        <= 2 order! / L^{order} * sup |u|.

    Both forms are reported; the sharper (smaller) one is the value.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if L <= 0.0:
        raise DomainError("circle radius must be positive")
    if l1_u_circle < 0.0 or sup_u < 0.0:
        raise ValueError("norms must be nonnegative")
    l1_form = math.factorial(order) * l1_u_circle / (math.pi * L ** (order + 1))
    sup_form = 2.0 * math.factorial(order) * sup_u / L**order
    return BoundReport(
        kind="derivative_interior",
        inputs={"l1_u_circle": l1_u_circle, "sup_u": sup_u, "order": order, "L": L,
                "l1_form": l1_form, "sup_form": sup_form},
        value=min(l1_form, sup_form),
        applicable=True,
    )


def taylor_remainder_bound(kappa: float, n: int, L: float,
                           l1_u_circle: float) -> BoundReport:
    """Remainder bound for the degree-(n-1) Taylor polynomial of a harmonic
    function at displacement kappa*L from the expansion center:

        (2 kappa / (1 - kappa))^n * 1 / (pi L (1 - kappa)) * integral |u| ds.

    Only valid for kappa < 1/3, where the geometric ratio is below one.
    """
    if not 0.0 <= kappa < 1.0 / 3.0:
        raise DomainError(f"kappa must lie in [0, 1/3), got {kappa}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if L <= 0.0:
        raise DomainError("circle radius must be positive")
    if l1_u_circle < 0.0:
        raise ValueError("L1 norm must be nonnegative")
    value = (2.0 * kappa / (1.0 - kappa)) ** n * l1_u_circle / (math.pi * L * (1.0 - kappa))
    return BoundReport(
        kind="taylor_remainder",
        inputs={"kappa": kappa, "n": n, "L": L, "l1_u_circle": l1_u_circle},
        value=value,
        applicable=True,
    )


def maximum_principle_bounds(b: BoundaryData, M: int = 4096) -> Tuple[float, float]:
    """(min g, max g) over the quadrature grid: the sandwich every value of the
    converged solution must satisfy."""
    return b.grid_range(M)


_RECOMPUTE = {
    "uniform_error": lambda i: uniform_error_bound(
        i["seminorm"], i["alpha"], i["n"], i["point"], i["R"], i["gamma0"],
        i.get("seminorm_source", "declared")),
    "uniform_error_smooth": lambda i: uniform_error_bound_smooth(
        i["seminorm_k"], i["k"], i["alpha"], i["n"], i["point"], i["R"],
        i["gamma_k"], i.get("seminorm_source", "declared")),
    "derivative": lambda i: derivative_bound(
        i["l1_f"], i["mean_f_abs_term"], i["a1"], i["a2"], i["r"], i["R"]),
    "derivative_interior": lambda i: interior_derivative_bound(
        i["l1_u_circle"], i["sup_u"], i["order"], i["L"]),
    "taylor_remainder": lambda i: taylor_remainder_bound(
        i["kappa"], i["n"], i["L"], i["l1_u_circle"]),
}


def recompute(report) -> BoundReport:
    """Rebuild a report from its own (de)serialized form; the result must
    match the original bit for bit."""
    if isinstance(report, BoundReport):
        report = report.to_dict()
    kind = report["kind"]
    if kind not in _RECOMPUTE:
        raise ValueError(f"unknown bound kind {kind!r}")
    return _RECOMPUTE[kind](report["inputs"])
