import numpy as np
import pytest

from blochbohr import (EvaluatorDomainError, ExtremalSpec, GridSpec,
                       ParameterDomainError, PoleError, TruncatedSeries,
                       avkhadiev_coefficients, avkhadiev_eval,
                       avkhadiev_majorant_closed_form, coefficient_sum,
                       eval_series, extremal_coefficients, extremal_eval,
                       majorant, weighted_bloch_norm, weighted_bloch_seminorm,
                       weighted_radial_sup)
from conftest import random_polynomial

A_MAX = 1.0 / np.sqrt(3.0)
COEF = 1.5 * np.sqrt(3.0)

LEAN = GridSpec(r_points=512, theta_points=512)


class TestBlochNorm:
    def test_constant(self, std):
        assert weighted_bloch_norm(TruncatedSeries.polynomial([3.0j]), std) == 3.0

    def test_identity_map(self, std):
        s = TruncatedSeries.polynomial([0.0, 1.0])
        assert weighted_bloch_norm(s, std) == pytest.approx(1.0, abs=1e-12)

    def test_square_map_calculus_oracle(self, std):
        # sup over r of (1-r^2) 2r = 4/(3 sqrt(3)) at r = 1/sqrt(3)
        s = TruncatedSeries.polynomial([0.0, 0.0, 1.0])
        assert weighted_bloch_norm(s, std) == pytest.approx(
            0.769800358919501, abs=1e-10)

    def test_homogeneity(self, std):
        rng = np.random.default_rng(21)
        s = random_polynomial(rng)
        base = weighted_bloch_norm(s, std, LEAN)
        for c in (0.25, 3.0, 117.0):
            scaled = TruncatedSeries.polynomial(c * s.coeffs)
            assert weighted_bloch_norm(scaled, std, LEAN) == pytest.approx(
                c * base, rel=1e-12)

    def test_seminorm_relation(self, std):
        rng = np.random.default_rng(22)
        s = random_polynomial(rng)
        norm = weighted_bloch_norm(s, std, LEAN)
        semi = weighted_bloch_seminorm(s, std, LEAN)
        assert norm == pytest.approx(abs(s.coeffs[0]) + semi, abs=1e-14)

    def test_complex_coefficient_path_against_dense_scan(self, std):
        s = TruncatedSeries.polynomial([0.0, 1.0j, -0.5, 0.25j])
        norm = weighted_bloch_norm(s, std)
        r = np.linspace(0, 1 - 1e-6, 4000)[:, None]
        theta = np.linspace(0, 2 * np.pi, 512, endpoint=False)[None, :]
        z = r * np.exp(1j * theta)
        deriv = 1.0j - 1.0 * z + 0.75j * z ** 2
        brute = ((1 - r ** 2) * np.abs(deriv)).max()
        assert norm >= brute - 1e-9
        assert norm == pytest.approx(brute, abs=1e-5)


class TestRadialSup:
    def test_constant_function(self, const):
        rep = weighted_radial_sup(lambda z: np.ones_like(z), const)
        assert rep.value == pytest.approx(1.0, abs=1e-12)

    def test_extremal_witness_at_anchor_below_r0(self):
        # on [0, r0] the circle sup of the extremal is the theta = pi profile
        # and the weighted sup sits exactly at r0 for an admissible weight
        from blochbohr import builtin_weight
        spec = ExtremalSpec(r0=0.8)
        w = builtin_weight("example2", r0=0.8, alpha=1)
        grid = GridSpec(r_points=2048, theta_points=1024, r_max=0.8)
        rep = weighted_radial_sup(lambda z: extremal_eval(spec, z), w, grid)
        assert abs(rep.witness_r - 0.8) < 2 * grid.r_step
        assert rep.value == pytest.approx(1.0, abs=1e-8)
        # strictly below r0 the circle maximum sits at theta = pi
        # (at r0 itself |f| is constant 1 on the circle, so theta is a plateau)
        sub = weighted_radial_sup(lambda z: extremal_eval(spec, z), w,
                                  GridSpec(r_points=256, theta_points=1024,
                                           r_max=0.6))
        assert abs((sub.witness_theta % (2 * np.pi)) - np.pi) < 1e-2

    @pytest.mark.parametrize("a", [0.1, 0.2, 0.3, 0.35])
    def test_unit_sup_function(self, a, std):
        grid = GridSpec(r_points=1024, theta_points=1024, refine=False)
        rough = weighted_radial_sup(lambda z: avkhadiev_eval(a, z), std, grid)
        assert rough.value == pytest.approx(1.0, abs=1e-4)
        refined = weighted_radial_sup(lambda z: avkhadiev_eval(a, z), std,
                                      GridSpec(r_points=1024, theta_points=1024))
        assert refined.value == pytest.approx(1.0, abs=1e-8)

    def test_majorant_dominates(self, std):
        rng = np.random.default_rng(8)
        grid = GridSpec(r_points=256, theta_points=256, r_max=0.85)
        for _ in range(5):
            s = random_polynomial(rng)
            m = majorant(s)
            sup_f = weighted_radial_sup(lambda z: eval_series(s, z).value, std, grid)
            sup_m = weighted_radial_sup(lambda z: eval_series(m, z).value, std, grid)
            assert sup_m.value >= sup_f.value - 1e-10

    def test_scalar_evaluator_fallback(self, const):
        def scalar_only(z):
            if isinstance(z, np.ndarray):
                raise TypeError("scalar only")
            return complex(z)

        grid = GridSpec(r_points=64, theta_points=32, r_max=0.5)
        rep = weighted_radial_sup(scalar_only, const, grid)
        assert rep.value == pytest.approx(0.5, abs=1e-10)

    def test_nonfinite_evaluator_rejected(self, const):
        grid = GridSpec(r_points=16, theta_points=16, r_max=0.5)
        with pytest.raises(EvaluatorDomainError):
            weighted_radial_sup(lambda z: np.full_like(z, np.nan), const, grid)

    def test_report_serialization(self, const):
        grid = GridSpec(r_points=16, theta_points=16, r_max=0.5)
        rep = weighted_radial_sup(lambda z: z, const, grid)
        d = rep.to_json_dict()
        assert set(d) == {"value", "witness_r", "witness_theta", "grid"}
        assert d["grid"]["r_points"] == 16


class TestAvkhadievEval:
    def test_zero_at_a(self):
        assert avkhadiev_eval(0.35, 0.35) == 0.0

    def test_value_at_origin(self):
        for a in (0.1, 0.35, 0.5):
            expected = -COEF * a * (1.0 - a * a)
            assert avkhadiev_eval(a, 0.0) == pytest.approx(expected, abs=1e-15)

    def test_parameter_domain(self):
        for bad in (0.0, -0.1, A_MAX, 0.6, 1.0):
            with pytest.raises(ParameterDomainError):
                avkhadiev_eval(bad, 0.2)

    def test_pole(self):
        with pytest.raises(PoleError):
            avkhadiev_eval(0.5, 2.0)

    def test_closed_form_against_series(self):
        s = avkhadiev_coefficients(0.35)
        for z in (0.5, -0.3, 0.2 + 0.4j):
            assert abs(eval_series(s, z).value - avkhadiev_eval(0.35, z)) < 1e-10


class TestAvkhadievCoefficients:
    @pytest.mark.parametrize("a", [0.1, 0.35, 0.57])
    def test_sign_pattern(self, a):
        s = avkhadiev_coefficients(a)
        coeffs = s.coeffs.real
        assert coeffs[0] < 0.0
        assert np.all(coeffs[1:] > 0.0)
        assert np.all(s.coeffs.imag == 0.0)

    def test_positivity_fails_past_third_root(self):
        with pytest.raises(ParameterDomainError):
            avkhadiev_coefficients(0.6)
        # b_1 = 2 (1/2 - a^2/(1-a^2)) is negative there
        a = 0.6
        atil = a * a / (1.0 - a * a)
        assert 2.0 * (0.5 - atil) < 0.0

    def test_b1_positivity_boundary(self):
        for a in (0.1, 0.35, 0.57):
            atil = a * a / (1.0 - a * a)
            assert 2.0 * (0.5 - atil) > 0.0

    def test_first_coefficient(self):
        s = avkhadiev_coefficients(0.35)
        assert s.coeffs[0].real == pytest.approx(-COEF * 0.35 * (1 - 0.35 ** 2),
                                                 abs=1e-14)

    def test_tail_is_sound(self):
        a = 0.35
        s = avkhadiev_coefficients(a, n_terms=40)
        atil = a * a / (1.0 - a * a)
        norm = COEF * (1.0 - a * a) ** 2 / a
        n = np.arange(40, 400, dtype=float)
        true_tail = np.abs(norm * (n + 1.0) * (0.5 * n - atil) * a ** n)
        assert np.all(true_tail <= s.tail_m * s.tail_rho ** n)


class TestAvkhadievMajorant:
    def test_value_at_origin_is_abs_a0(self):
        for a in (0.1, 0.35):
            got = avkhadiev_majorant_closed_form(a, 0.0)
            assert got == pytest.approx(COEF * a * (1.0 - a * a), abs=1e-15)

    def test_matches_term_sums(self):
        s = avkhadiev_coefficients(0.35)
        for x in (0.2, 0.5, 0.9):
            term_sum = coefficient_sum(majorant(s), x)
            closed = avkhadiev_majorant_closed_form(0.35, x)
            assert abs(term_sum - closed) < 1e-10

    def test_small_a_limit(self):
        got = avkhadiev_majorant_closed_form(1e-7, 0.5)
        assert got == pytest.approx(COEF * 0.5, abs=1e-6)

    def test_domain_and_pole(self):
        with pytest.raises(ParameterDomainError):
            avkhadiev_majorant_closed_form(0.35, -0.5)
        with pytest.raises(PoleError):
            avkhadiev_majorant_closed_form(0.5, 2.0)


class TestExtremalSeriesNorms:
    def test_extremal_circle_sup_formula_below_anchor(self):
        from blochbohr import circle_norms, extremal_sup_modulus
        spec = ExtremalSpec(r0=0.8)
        s = extremal_coefficients(spec)
        for r in (0.3, 0.6, 0.8):
            cn = circle_norms(s, r)
            assert cn.sup_norm == pytest.approx(extremal_sup_modulus(0.8, r),
                                                abs=1e-8)


class TestSeminormClosedForms:
    def test_mobius_seminorm_is_one(self, std):
        # sup (1-r^2)(1-alpha^2)/(1-alpha r)^2 = 1 exactly, at r = alpha
        from blochbohr import mobius_series
        for alpha in (0.3, 0.5, 0.9):
            s = mobius_series(alpha)
            assert weighted_bloch_seminorm(s, std) == pytest.approx(1.0,
                                                                    abs=1e-10)

    def test_extremal_seminorm_closed_form(self, std):
        # |f'| peaks on the positive axis: sup (1-r^2) (2 r0)^{-1} (1-rho r)^{-2}
        # equals (2 r0)^{-1} / (1-rho^2) at r = rho, rho = 1/(sqrt(2) r0)
        for r0 in (0.8, 0.9):
            s = extremal_coefficients(ExtremalSpec(r0=r0))
            rho = 1.0 / (np.sqrt(2.0) * r0)
            exact = (1.0 / (2.0 * r0)) / (1.0 - rho * rho)
            assert weighted_bloch_seminorm(s, std) == pytest.approx(exact,
                                                                    abs=1e-9)

    def test_radial_sup_dominates_grid_samples(self, std):
        from blochbohr import avkhadiev_eval
        grid = GridSpec(r_points=128, theta_points=128)
        rep = weighted_radial_sup(lambda z: avkhadiev_eval(0.3, z), std, grid)
        theta = grid.angles()
        for r in grid.radii()[::16]:
            sampled = std(float(r)) * np.abs(
                avkhadiev_eval(0.3, r * np.exp(1j * theta))).max()
            assert rep.value >= sampled - 1e-12
