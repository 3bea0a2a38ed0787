"""Harmonic polynomial approximants built from a Fourier spectrum.

The degree-n approximant is

    u_n(x, y) = a_0/2 + sum_{k=1}^{n} (a_k P_k(x/R, y/R) + b_k Q_k(x/R, y/R)),

where (P_k, Q_k) are the real and imaginary parts of (x + iy)^k.  Evaluation
uses the complex-product recurrence

    P_k = xh P_{k-1} - yh Q_{k-1},   Q_k = xh Q_{k-1} + yh P_{k-1},

one O(n) pass per point with no trigonometric calls.  Derivatives of any order
are exact: differentiation maps the pair (P_k, Q_k) onto k times the pair one
degree down, with a parity sign and a coefficient swap for odd y-orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import EvalOverflowError, ExpansionUnsupportedError
from .fourier import FourierSpectrum

MONOMIAL_DEGREE_LIMIT = 60


class PQPair(NamedTuple):
    """Values of the degree-k harmonic basis pair at one point, in scaled
    variables: (P_k, Q_k) = ((r/R)^k cos k Theta, (r/R)^k sin k Theta)."""
    value_P: float
    value_Q: float


def pq_pair(x: float, y: float, k: int, R: float = 1.0) -> PQPair:
    """Basis pair of degree k at (x, y) by the complex-product recurrence.
    Satisfies P^2 + Q^2 = ((x^2 + y^2) / R^2)^k."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    xh, yh = x / R, y / R
    p, q = 1.0, 0.0
    for _ in range(k):
        p, q = xh * p - yh * q, xh * q + yh * p
    return PQPair(p, q)


@dataclass(frozen=True)
class HarmonicApproximant:
    """Degree-n harmonic polynomial defined by a Fourier spectrum.

    Immutable; eval and eval_derivative are pure and safe to call from many
    threads.
    """

    spectrum: FourierSpectrum

    @property
    def n(self) -> int:
        return self.spectrum.n_max

    @property
    def geometry(self):
        return self.spectrum.geometry

    def eval(self, x, y):
        """Value of the approximant at (x, y); valid on all of R^2."""
        spec = self.spectrum
        xh = np.asarray(x, dtype=float) / spec.geometry.R
        yh = np.asarray(y, dtype=float) / spec.geometry.R
        out = np.full(np.broadcast(xh, yh).shape, spec.a[0] / 2.0)
        p = np.ones_like(out)
        q = np.zeros_like(out)
        for k in range(1, spec.n_max + 1):
            p, q = xh * p - yh * q, xh * q + yh * p
            out += spec.a[k] * p + spec.b[k - 1] * q
        if out.ndim == 0:
            return float(out)
        return out

    def eval_derivative(self, x, y, a1: int, a2: int):
        """Exact partial derivative d^{a1}_x d^{a2}_y of the approximant.

        Each term of degree k >= a1 + a2 contributes the falling factorial
        k!/(k - a1 - a2)! times the degree-(k - a1 - a2) pair, with sign
        (-1)^{a2/2} for even a2 and the swapped combination
        (-c Q + d P) with sign (-1)^{(a2-1)/2} for odd a2; lower-degree terms
        vanish.  Differentiating in the scaled variables adds one 1/R factor
        per order.
        """
        if a1 < 0 or a2 < 0:
            raise ValueError("derivative orders must be nonnegative")
        s = a1 + a2
        if s == 0:
            return self.eval(x, y)
        spec = self.spectrum
        R = spec.geometry.R
        xh = np.asarray(x, dtype=float) / R
        yh = np.asarray(y, dtype=float) / R
        out = np.zeros(np.broadcast(xh, yh).shape)
        if spec.n_max < s:
            return float(out) if out.ndim == 0 else out
        try:
            float(math.perm(spec.n_max, s))
        except OverflowError as exc:
            raise EvalOverflowError(
                f"falling factorial overflow at degree {spec.n_max}, order {s}") from exc
        sign = (-1.0) ** (a2 // 2) if a2 % 2 == 0 else (-1.0) ** ((a2 - 1) // 2)
        p = np.ones_like(out)   # P_0
        q = np.zeros_like(out)  # Q_0
        for k in range(s, spec.n_max + 1):
            if k > s:
                p, q = xh * p - yh * q, xh * q + yh * p
            falling = float(math.perm(k, s))          # k!/(k-s)!
            if a2 % 2 == 0:
                combo = spec.a[k] * p + spec.b[k - 1] * q
            else:
                combo = -spec.a[k] * q + spec.b[k - 1] * p
            out += falling * combo
        out *= sign / R**s
        if out.ndim == 0:
            return float(out)
        return out

    def laplacian(self, x, y):
        """d^2/dx^2 + d^2/dy^2 via the exact derivative path (identically
        zero in exact arithmetic; measures rounding in floating point)."""
        return self.eval_derivative(x, y, 2, 0) + self.eval_derivative(x, y, 0, 2)

    def monomial_expansion(self) -> np.ndarray:
        """Dense coefficient table m with u_n(x, y) = sum m[i, j] x^i y^j.

        Built from the de Moivre binomial sums with the radius scaling folded
        in.  Refused above degree 60; the recurrence evaluator has no such
        limit and stays available.
        """
        spec = self.spectrum
        n = spec.n_max
        if n > MONOMIAL_DEGREE_LIMIT:
            raise ExpansionUnsupportedError(
                f"monomial expansion supported up to degree {MONOMIAL_DEGREE_LIMIT}, got {n}")
        R = spec.geometry.R
        table = np.zeros((n + 1, n + 1))
        table[0, 0] = spec.a[0] / 2.0
        for k in range(1, n + 1):
            ck = spec.a[k] / R**k
            dk = spec.b[k - 1] / R**k
            for j in range(0, k + 1):
                binom = math.comb(k, j)
                if j % 2 == 0:
                    table[k - j, j] += ck * (-1.0) ** (j // 2) * binom
                else:
                    table[k - j, j] += dk * (-1.0) ** ((j - 1) // 2) * binom
        return table


def evaluate_monomial_table(table: np.ndarray, x, y):
    """Evaluate a monomial coefficient table at (x, y) by direct power sums."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.zeros(np.broadcast(x, y).shape)
    n = table.shape[0] - 1
    ypow = [np.ones_like(out)]
    for _ in range(n):
        ypow.append(ypow[-1] * y)
    xp = np.ones_like(out)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            if table[i, j] != 0.0:
                out += table[i, j] * xp * ypow[j]
        xp = xp * x
    if out.ndim == 0:
        return float(out)
    return out
