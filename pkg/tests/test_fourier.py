import math

import numpy as np
import pytest

from harmodisk import (
    AliasingError,
    BoundaryData,
    DiskGeometry,
    FourierSpectrum,
    boundary_expression,
    compute_spectrum,
    l1_boundary_norm,
    pullback,
)


class TestComputeSpectrum:
    def test_pure_cosine(self, unit_disk):
        b = BoundaryData.from_callable(np.cos, unit_disk)
        s = compute_spectrum(b, 3, 64)
        np.testing.assert_allclose(s.a, [0, 1, 0, 0], atol=1e-14)
        np.testing.assert_allclose(s.b, [0, 0, 0], atol=1e-14)

    def test_constant(self, unit_disk):
        b = boundary_expression("const5", unit_disk)
        s = compute_spectrum(b, 4, 64)
        assert s.a[0] == pytest.approx(10.0, abs=1e-13)
        np.testing.assert_allclose(s.a[1:], 0, atol=1e-13)
        np.testing.assert_allclose(s.b, 0, atol=1e-13)

    def test_square_wave_classic_coefficients(self, unit_disk):
        # sign(theta) has b_k = 4/(pi k) for odd k, zero otherwise
        b = boundary_expression("square", unit_disk)
        s = compute_spectrum(b, 5, 4096)
        for k, expected in [(1, 4 / math.pi), (3, 4 / (3 * math.pi)),
                            (5, 4 / (5 * math.pi))]:
            assert s.b[k - 1] == pytest.approx(expected, abs=2e-3)
        np.testing.assert_allclose(s.a, 0, atol=2e-3)
        np.testing.assert_allclose(s.b[1::2], 0, atol=2e-3)

    def test_minimal_node_count_no_aliasing(self, unit_disk):
        b = pullback(lambda x, y: x * x - y * y, unit_disk)  # f = cos(2 theta)
        tight = compute_spectrum(b, 2, 6)
        fine = compute_spectrum(b, 2, 4096)
        assert tight.a[2] == pytest.approx(1.0, abs=1e-14)
        np.testing.assert_allclose(tight.a, fine.a, atol=1e-13)
        np.testing.assert_allclose(tight.b, fine.b, atol=1e-13)

    def test_refuses_undersampling(self, unit_disk):
        b = BoundaryData.from_callable(np.cos, unit_disk)
        with pytest.raises(AliasingError):
            compute_spectrum(b, 8, 17)

    def test_default_node_policy(self, unit_disk):
        b = BoundaryData.from_callable(np.cos, unit_disk)
        assert compute_spectrum(b, 8).M == 4096
        assert compute_spectrum(b, 1000).M == 8000

    def test_spectral_exactness_random_trig_polys(self, unit_disk):
        rng = np.random.default_rng(5)
        for _ in range(20):
            deg = int(rng.integers(1, 9))
            ca = rng.uniform(-1, 1, deg + 1)
            cb = rng.uniform(-1, 1, deg)

            def f(theta, ca=ca, cb=cb, deg=deg):
                theta = np.asarray(theta, dtype=float)
                out = np.full(theta.shape, ca[0] / 2.0)
                for k in range(1, deg + 1):
                    out += ca[k] * np.cos(k * theta) + cb[k - 1] * np.sin(k * theta)
                return out

            b = BoundaryData.from_callable(f, unit_disk)
            n_max = 10
            M = int(rng.choice([2 * n_max + 2, 64, 257]))
            s = compute_spectrum(b, n_max, M)
            expected_a = np.zeros(n_max + 1)
            expected_a[: deg + 1] = ca
            expected_b = np.zeros(n_max)
            expected_b[:deg] = cb
            np.testing.assert_allclose(s.a, expected_a, atol=1e-13)
            np.testing.assert_allclose(s.b, expected_b, atol=1e-13)

    def test_refinement_stability_past_4096(self, unit_disk):
        b = boundary_expression("square", unit_disk)
        ms = [2**12, 2**13, 2**14, 2**15]
        spectra = [compute_spectrum(b, 16, m) for m in ms]
        deltas = [max(np.max(np.abs(s1.a - s2.a)), np.max(np.abs(s1.b - s2.b)))
                  for s1, s2 in zip(spectra, spectra[1:])]
        assert all(d1 >= d2 for d1, d2 in zip(deltas, deltas[1:]))

    def test_scaling_covariance(self, unit_disk):
        base = boundary_expression("hat", unit_disk)
        s1 = compute_spectrum(base, 12, 256)
        for lam in (2.0, 0.5):   # power-of-two scalings commute exactly
            scaled = BoundaryData.from_callable(lambda t, lam=lam: lam * base(t), unit_disk)
            s2 = compute_spectrum(scaled, 12, 256)
            assert np.array_equal(s2.a, lam * s1.a)
            assert np.array_equal(s2.b, lam * s1.b)
        scaled = BoundaryData.from_callable(lambda t: 3.0 * base(t), unit_disk)
        s3 = compute_spectrum(scaled, 12, 256)
        np.testing.assert_allclose(s3.a, 3.0 * s1.a, rtol=1e-14, atol=1e-16)

    def test_coefficients_bounded_by_l1(self, unit_disk):
        for name in ["square", "hat", "expcos", "abssin0.5"]:
            b = boundary_expression(name, unit_disk)
            s = compute_spectrum(b, 32)
            l1 = l1_boundary_norm(b, s.M).angular
            fmax = np.max(np.abs(b.node_values(s.M)))
            bound = l1 / math.pi + 1e-12
            assert np.all(np.abs(s.a) <= bound)
            assert np.all(np.abs(s.b) <= bound)
            assert bound <= 2.0 * fmax + 1e-12


class TestL1Norm:
    def test_constant(self, unit_disk):
        b = boundary_expression("const5", unit_disk)
        assert l1_boundary_norm(b, 4096).angular == pytest.approx(10 * math.pi, rel=1e-12)

    def test_cosine(self, unit_disk):
        # integral of |cos| over a period is 4; refinement converges to it
        b = BoundaryData.from_callable(np.cos, unit_disk)
        vals = [l1_boundary_norm(b, M).angular for M in (4096, 8192, 16384)]
        errs = [abs(v - 4.0) for v in vals]
        assert errs[0] < 1e-5
        assert errs[-1] <= errs[0]

    def test_arclength_scaling(self):
        geometry = DiskGeometry(2.0)
        b = BoundaryData.from_callable(np.sin, geometry)
        res = l1_boundary_norm(b, 1 << 16)
        assert res.angular == pytest.approx(4.0, abs=1e-6)
        assert res.arclength == pytest.approx(8.0, abs=2e-6)


class TestSerialization:
    def test_round_trip(self, tmp_path, unit_disk):
        b = boundary_expression("hat", unit_disk)
        s = compute_spectrum(b, 8, 128)
        d = s.to_dict()
        assert set(d) == {"R", "n_max", "M", "a", "b"}
        assert len(d["a"]) == 9 and len(d["b"]) == 8
        s2 = FourierSpectrum.from_dict(d)
        assert np.array_equal(s.a, s2.a) and np.array_equal(s.b, s2.b)
        path = tmp_path / "s.json"
        s.save(path)
        s3 = FourierSpectrum.load(path)
        assert np.array_equal(s.a, s3.a) and s3.geometry.R == s.geometry.R

    def test_truncate(self, unit_disk):
        b = boundary_expression("hat", unit_disk)
        s = compute_spectrum(b, 16, 256)
        t = s.truncate(5)
        assert t.n_max == 5
        assert np.array_equal(t.a, s.a[:6])
        assert np.array_equal(t.b, s.b[:5])
        with pytest.raises(ValueError):
            s.truncate(17)
