import json

import numpy as np
import pytest

from blochbohr import (DivergenceRegionError, ExtremalSpec, GridSpec,
                       ParameterDomainError, TruncatedSeries, circle_norms,
                       coefficient_sum, derivative, eval_series,
                       extremal_coefficients, extremal_eval, majorant,
                       scale_argument, tail_bound)
from conftest import random_polynomial, trig_quadrature_l2

SQRT2 = np.sqrt(2.0)


def geometric_series(q, n, m=1.0):
    return TruncatedSeries.with_geometric_tail(m * q ** np.arange(n + 1), q, m)


def extremal_moduli_oracle(r0, count):
    """Expand (z/r0 - 1/sqrt(2)) * sum q^n z^n by direct convolution."""
    q = 1.0 / (SQRT2 * r0)
    coeffs = [-1.0 / SQRT2]
    for n in range(1, count):
        coeffs.append(q ** (n - 1) / r0 - (1.0 / SQRT2) * q ** n)
    return np.abs(np.array(coeffs))


class TestConstruction:
    def test_rejects_empty_and_nonfinite(self):
        with pytest.raises(ParameterDomainError):
            TruncatedSeries(np.array([]))
        with pytest.raises(ParameterDomainError):
            TruncatedSeries([1.0, np.inf])

    def test_tail_validation(self):
        with pytest.raises(ParameterDomainError):
            TruncatedSeries([1.0], 1.0, 1.0)
        with pytest.raises(ParameterDomainError):
            TruncatedSeries([1.0], 0.5, -1.0)
        with pytest.raises(ParameterDomainError):
            TruncatedSeries([1.0], 0.5, None)

    def test_immutable(self):
        s = TruncatedSeries.polynomial([1.0, 2.0])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0

    def test_polynomial_is_exact(self):
        s = TruncatedSeries.polynomial([1.0, 2.0])
        assert s.has_tail and s.tail_rho == 0.0 and s.tail_m == 0.0


class TestMajorant:
    def test_moduli(self):
        s = TruncatedSeries.polynomial([1.0, -1.0j, 2.0])
        np.testing.assert_allclose(majorant(s).coeffs, [1.0, 1.0, 2.0])

    def test_idempotent_on_nonnegative(self):
        s = TruncatedSeries.polynomial([0.5, 1.0, 0.0, 2.0])
        np.testing.assert_array_equal(majorant(s).coeffs, s.coeffs)

    def test_extremal_moduli_against_expansion_oracle(self):
        spec = ExtremalSpec(r0=0.8, truncation=8)
        got = np.abs(majorant(extremal_coefficients(spec)).coeffs)
        expected = extremal_moduli_oracle(0.8, 9)
        np.testing.assert_allclose(got, expected, atol=1e-14)
        # frozen oracle values
        assert abs(got[0] - 0.7071067811865476) < 1e-12
        assert abs(got[1] - 0.625) < 1e-12
        assert abs(got[2] - 0.5524271728019903) < 1e-8

    def test_preserves_tail(self):
        s = geometric_series(0.5, 10)
        m = majorant(s)
        assert m.tail_rho == 0.5 and m.tail_m == 1.0


class TestDerivative:
    def test_constant(self):
        d = derivative(TruncatedSeries.polynomial([3.0]))
        np.testing.assert_array_equal(d.coeffs, [0.0])

    def test_linear_quadratic(self):
        d = derivative(TruncatedSeries.polynomial([0.0, 1.0, 1.0]))
        np.testing.assert_allclose(d.coeffs, [1.0, 2.0])

    def test_geometric_spot_value(self):
        s = TruncatedSeries.polynomial(0.5 ** np.arange(8))
        d = derivative(s)
        assert abs(d.coeffs[2] - 3 * 0.125) < 1e-15

    def test_tail_remains_sound(self):
        # beyond the stored range, |(n+1) a_{n+1}| must stay below M' rho'^n
        q, n_stored = 0.6, 12
        d = derivative(geometric_series(q, n_stored))
        assert d.tail_rho > q
        n = np.arange(n_stored, 200)
        true_next = (n + 1) * q ** (n + 1)
        assert np.all(true_next <= d.tail_m * d.tail_rho ** n + 1e-300)

    def test_constant_with_real_tail_rejected(self):
        s = TruncatedSeries.with_geometric_tail([1.0], 0.5, 1.0)
        with pytest.raises(ParameterDomainError):
            derivative(s)


class TestScaleArgument:
    def test_identity(self):
        s = random_polynomial(np.random.default_rng(0))
        np.testing.assert_array_equal(scale_argument(s, 1.0).coeffs, s.coeffs)

    def test_zero_keeps_constant_term(self):
        s = TruncatedSeries.polynomial([2.0, 3.0, 4.0])
        np.testing.assert_allclose(scale_argument(s, 0.0).coeffs, [2.0, 0.0, 0.0])

    def test_powers_of_inv_sqrt2(self):
        s = TruncatedSeries.polynomial([1.0, 1.0, 1.0])
        got = scale_argument(s, 1.0 / SQRT2).coeffs
        np.testing.assert_allclose(got, [1.0, 1.0 / SQRT2, 0.5], atol=1e-15)

    def test_tail_ratio_scales(self):
        s = geometric_series(0.5, 10)
        assert scale_argument(s, 0.5).tail_rho == 0.25
        assert scale_argument(s, 3.0).has_tail is False

    def test_negative_scale_rejected(self):
        with pytest.raises(ParameterDomainError):
            scale_argument(TruncatedSeries.polynomial([1.0]), -0.1)


class TestEval:
    def test_constant(self):
        out = eval_series(TruncatedSeries.polynomial([1.0]), 0.37 + 0.1j)
        assert out.value == 1.0 + 0.0j
        assert out.tail_bound == 0.0 and out.certified

    def test_geometric_closed_form(self):
        s = geometric_series(0.5, 60)
        out = eval_series(s, 0.5)
        assert abs(out.value - 4.0 / 3.0) < 1e-12
        # certified bound must cover the actual truncation error
        actual = abs(1.0 / (1.0 - 0.25) - out.value)
        assert actual <= out.tail_bound

    def test_beyond_unit_disc_with_tail(self):
        s = geometric_series(0.5, 120)
        out = eval_series(s, 1.5)
        assert abs(out.value - 1.0 / (1.0 - 0.75)) < 1e-12

    def test_divergence_region(self):
        s = geometric_series(0.5, 20)
        with pytest.raises(DivergenceRegionError):
            eval_series(s, 2.0)

    def test_uncertified_flag_and_cutoff(self):
        s = TruncatedSeries([1.0, 1.0])
        out = eval_series(s, 0.5)
        assert out.tail_bound is None and not out.certified
        with pytest.raises(DivergenceRegionError):
            eval_series(s, 0.95)

    def test_extremal_value_at_minus_anchor(self):
        spec = ExtremalSpec(r0=0.8)
        s = extremal_coefficients(spec)
        got = eval_series(s, -0.8)
        assert abs(got.value - (-1.0)) < 1e-12
        assert abs(got.value - extremal_eval(spec, -0.8)) < 1e-12

    def test_array_argument(self):
        s = TruncatedSeries.polynomial([1.0, 2.0])
        out = eval_series(s, np.array([0.0, 0.5]))
        np.testing.assert_allclose(out.value, [1.0, 2.0])
        np.testing.assert_array_equal(out.tail_bound, [0.0, 0.0])


class TestCoefficientSum:
    def test_matches_majorant_eval(self):
        rng = np.random.default_rng(7)
        s = random_polynomial(rng)
        r = 0.6
        direct = coefficient_sum(s, r)
        via_majorant = eval_series(majorant(s), r).value.real
        assert abs(direct - via_majorant) < 1e-12

    def test_tail_bound_helper(self):
        s = geometric_series(0.5, 10)
        assert tail_bound(s, 0.5) == 0.25 ** 11 / 0.75
        assert tail_bound(TruncatedSeries([1.0]), 0.5) is None


class TestCircleNorms:
    def test_constant(self):
        cn = circle_norms(TruncatedSeries.polynomial([-2.0j]), 0.7)
        assert cn.sup_norm == pytest.approx(2.0, abs=1e-14)
        assert cn.l2_norm == pytest.approx(2.0, abs=1e-14)
        assert cn.coeff_sum == pytest.approx(2.0, abs=1e-14)

    def test_identity_map(self):
        cn = circle_norms(TruncatedSeries.polynomial([0.0, 1.0]), 0.5)
        for value in (cn.sup_norm, cn.l2_norm, cn.coeff_sum):
            assert value == pytest.approx(0.5, abs=1e-13)

    def test_extremal_sup_is_one_at_anchor(self):
        s = extremal_coefficients(ExtremalSpec(r0=0.8))
        cn = circle_norms(s, 0.8)
        assert cn.sup_norm == pytest.approx(1.0, abs=1e-8)

    def test_norm_chain_random(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            s = random_polynomial(rng)
            r = float(rng.uniform(0.05, 0.89))
            cn = circle_norms(s, r)
            assert cn.l2_norm <= cn.sup_norm + 1e-10
            assert cn.sup_norm <= cn.coeff_sum + 1e-10

    def test_parseval_against_quadrature(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            s = random_polynomial(rng, max_degree=32)
            r = float(rng.uniform(0.1, 0.89))
            cn = circle_norms(s, r)
            assert abs(cn.l2_norm - trig_quadrature_l2(s.coeffs, r)) < 1e-8

    def test_domain_checks(self):
        s = TruncatedSeries.polynomial([1.0])
        with pytest.raises(ParameterDomainError):
            circle_norms(s, 1.0)
        with pytest.raises(DivergenceRegionError):
            circle_norms(TruncatedSeries([1.0, 1.0]), 0.95)


class TestMajorantDomination:
    def test_pointwise_on_circle(self):
        rng = np.random.default_rng(5)
        theta = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
        for _ in range(20):
            s = random_polynomial(rng)
            r = float(rng.uniform(0.1, 0.89))
            dominating = eval_series(majorant(s), r).value.real
            values = np.abs(eval_series(s, r * np.exp(1j * theta)).value)
            assert np.all(values <= dominating + 1e-10)


class TestSerialization:
    def test_round_trip_with_tail(self):
        s = geometric_series(0.5, 6, m=2.0)
        restored = TruncatedSeries.loads(s.dumps())
        np.testing.assert_array_equal(restored.coeffs, s.coeffs)
        assert restored.tail_rho == 0.5 and restored.tail_m == 2.0

    def test_round_trip_without_tail(self):
        s = TruncatedSeries([1.0 + 2.0j, -3.0])
        restored = TruncatedSeries.loads(s.dumps())
        np.testing.assert_array_equal(restored.coeffs, s.coeffs)
        assert restored.has_tail is False

    def test_wire_schema(self):
        payload = json.loads(TruncatedSeries.with_geometric_tail([1.0, -1.0j], 0.25, 3.0).dumps())
        assert payload == {"coeffs": [[1.0, 0.0], [0.0, -1.0]],
                           "tail": {"rho": 0.25, "M": 3.0}}
        assert json.loads(TruncatedSeries([1.0]).dumps())["tail"] is None
