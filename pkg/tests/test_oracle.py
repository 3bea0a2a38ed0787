import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmodisk import (
    DiskGeometry,
    DomainError,
    HarmonicApproximant,
    abel_sum,
    boundary_expression,
    compute_spectrum,
    l1_boundary_norm,
    poisson_eval,
    poisson_eval_grid,
    polar_partial_sum,
    pullback,
)
from harmodisk.oracle import default_poisson_nodes
from conftest import random_disk_points


class TestPoissonEval:
    def test_kernel_integrates_to_one(self, unit_disk):
        b = boundary_expression("const5", unit_disk)
        for p in [(0.0, 0.0), (0.5, 0.3), (-0.7, 0.1), (0.0, 0.95)]:
            assert poisson_eval(b, *p) == pytest.approx(5.0, abs=1e-12)

    def test_linear_harmonic(self, unit_disk):
        b = pullback(lambda x, y: x, unit_disk)
        assert poisson_eval(b, 0.5, 0.0) == pytest.approx(0.5, abs=1e-10)

    def test_quadratic_harmonic(self, unit_disk):
        b = pullback(lambda x, y: x * x - y * y, unit_disk)
        assert poisson_eval(b, 0.6, 0.5) == pytest.approx(0.11, abs=1e-9)

    def test_boundary_rejected(self, unit_disk):
        b = boundary_expression("const5", unit_disk)
        with pytest.raises(DomainError):
            poisson_eval(b, 1.0, 0.0)
        with pytest.raises(DomainError):
            poisson_eval(b, 0.8, 0.8)

    def test_near_boundary_node_scaling(self):
        assert default_poisson_nodes(0.5) == 8192
        assert default_poisson_nodes(0.999) == 100_000
        with pytest.raises(DomainError):
            default_poisson_nodes(1.0)

    def test_grid_matches_pointwise(self, unit_disk):
        b = boundary_expression("hat", unit_disk)
        rng = np.random.default_rng(3)
        xs, ys = random_disk_points(rng, 20, radius=0.8)
        grid = poisson_eval_grid(b, xs, ys, M=8192)
        singles = np.array([poisson_eval(b, x, y, M=8192) for x, y in zip(xs, ys)])
        np.testing.assert_allclose(grid, singles, rtol=1e-13, atol=1e-15)

    def test_entire_harmonic_reference(self, unit_disk):
        # pullback of e^x cos y, whose harmonic extension is e^x cos y itself
        b = boundary_expression("expcos", unit_disk)
        for p in [(0.2, 0.3), (-0.5, 0.1), (0.0, -0.8)]:
            exact = math.exp(p[0]) * math.cos(p[1])
            assert poisson_eval(b, *p) == pytest.approx(exact, abs=1e-11)


class TestPolarPartialSum:
    def test_cosine_spectrum(self, unit_disk):
        b = pullback(lambda x, y: x, unit_disk)
        s = compute_spectrum(b, 8, 64)
        assert polar_partial_sum(s, 0.5, 0.0) == pytest.approx(0.5, abs=1e-13)

    def test_center_is_mean(self, unit_disk):
        for name in ["hat", "square", "expcos"]:
            s = compute_spectrum(boundary_expression(name, unit_disk), 12)
            assert polar_partial_sum(s, 0.0, 1.234) == s.a[0] / 2.0

    def test_square_wave_partial_sum_value(self, unit_disk):
        s = compute_spectrum(boundary_expression("square", unit_disk), 5, 1 << 16)
        expected = 4 / math.pi * (1 - 1 / 3 + 1 / 5)
        assert polar_partial_sum(s, 1.0, math.pi / 2) == pytest.approx(expected, abs=1e-6)

    def test_radius_validation(self, unit_disk):
        s = compute_spectrum(boundary_expression("hat", unit_disk), 4)
        with pytest.raises(DomainError):
            polar_partial_sum(s, 1.5, 0.0)


class TestAbelSum:
    def test_spec_examples(self):
        assert abel_sum([1, 1, 1, 1], [1, 2, 3]) == pytest.approx(6.0, rel=1e-15)
        assert abel_sum([1, 2, 3, 4], [1, 1, 1]) == pytest.approx(6.0, rel=1e-15)

    def test_zero_tail(self):
        # geometric weights with ratio zero: only the first term contributes
        assert abel_sum([1.0, 0.0, 0.0, 0.0], [7.0, 3.0, -2.0]) == pytest.approx(7.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            abel_sum([1, 2, 3], [1, 2, 3])
        with pytest.raises(ValueError):
            abel_sum([1], [])

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.floats(-1, 1), min_size=1, max_size=64), st.data())
    def test_matches_dot_product(self, b, data):
        a = data.draw(st.lists(st.floats(-1, 1), min_size=len(b) + 1,
                               max_size=len(b) + 1))
        direct = float(np.dot(a[:-1], b))
        rearranged = abel_sum(a, b)
        assert rearranged == pytest.approx(direct, rel=1e-12, abs=1e-12)


class TestOracleAgreement:
    """The keystone cross-validation: recurrence evaluation against the
    Poisson integral, with every allowance computable.

    The comparison budget is: measured proxy gap |u_n - u_{4n}|, plus the
    rigorous L1 tail of the series beyond degree 4n, plus refinement-based
    allowances for the two quadratures involved (Poisson nodes and spectrum
    nodes).  Nothing is tuned per case.
    """

    SMOOTH = ["cos1", "sin2", "cos3", "expcos", "const5"]
    ROUGH = ["hat", "abssin0.5", "quadwave", "square"]

    @pytest.mark.slow
    def test_full_corpus(self, unit_disk):
        rng = np.random.default_rng(42)
        xs, ys = random_disk_points(rng, 200, radius=0.9)
        for name in self.SMOOTH + self.ROUGH:
            b = boundary_expression(name, unit_disk)
            rough = name in self.ROUGH
            M_spec = (1 << 20) if rough else None
            spec = compute_spectrum(b, 512, M_spec)
            spec_half = compute_spectrum(b, 512, M_spec >> 1) if rough else None
            M_poisson = 262144 if rough else 8192
            pv = poisson_eval_grid(b, xs, ys, M=M_poisson)
            pv_half = poisson_eval_grid(b, xs, ys, M=M_poisson // 2)
            oracle_allow = 3.0 * float(np.max(np.abs(pv - pv_half))) + 1e-12
            l1 = l1_boundary_norm(b, 8192).angular
            for n in (8, 32, 128):
                u_n = HarmonicApproximant(spec.truncate(n))
                vals = u_n.eval(xs, ys)
                proxy = float(np.max(np.abs(
                    vals - HarmonicApproximant(spec.truncate(4 * n)).eval(xs, ys))))
                tail = l1 / math.pi * 0.9 ** (4 * n + 1) / (1 - 0.9)
                spec_allow = 1e-13
                if rough:
                    half_vals = HarmonicApproximant(spec_half.truncate(n)).eval(xs, ys)
                    spec_allow += 3.0 * float(np.max(np.abs(vals - half_vals)))
                lhs = float(np.max(np.abs(vals - pv)))
                assert lhs <= proxy + tail + oracle_allow + spec_allow, (
                    f"{name} at n={n}: {lhs} vs proxy {proxy} + tail {tail}")

    def test_smooth_corpus_tight(self, unit_disk):
        rng = np.random.default_rng(43)
        xs, ys = random_disk_points(rng, 200, radius=0.9)
        for name in self.SMOOTH:
            b = boundary_expression(name, unit_disk)
            u = HarmonicApproximant(compute_spectrum(b, 128))
            pv = poisson_eval_grid(b, xs, ys, M=8192)
            assert float(np.max(np.abs(u.eval(xs, ys) - pv))) <= 1e-8
