"""Weighted Bloch norms and radial suprema.

The Bloch norm of f = sum a_n z^n under a radial weight omega is
|a_0| + sup_{z in D} omega(|z|) |f'(z)|.  The same two-stage scan (radial
grid, then golden-section polish, with an inner angle scan per radius)
also serves the derivative-free problem sup_r omega(r) max_theta |f(r e^{i
theta})| for arbitrary evaluators.

The module also provides the cubed-Mobius test function
f(z) = (3 sqrt(3)/2) (1-a^2) (z-a) / (1-az)^3 for 0 < a < 1/sqrt(3), whose
weighted sup under 1-r^2 equals 1, together with its coefficient series
C(a) (n+1)(n/2 - a^2/(1-a^2)) a^n and the closed form of its majorant sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (BlochBohrError, DivergenceRegionError, EvaluatorDomainError,
                     ParameterDomainError, PoleError)
from .search import GridSpec, golden_max, grid_golden_max
from .series import (TruncatedSeries, _angle_count, _check_certified, _horner,
                     circle_sup, derivative)
from .weights import Weight

A_MAX = 1.0 / np.sqrt(3.0)
_COEF = 1.5 * np.sqrt(3.0)  # 3 sqrt(3) / 2


@dataclass(frozen=True)
class RadialSupReport:
    """Result of a weighted radial supremum scan with its witness point."""

    value: float
    witness_r: float
    witness_theta: float
    grid: GridSpec

    def to_json_dict(self) -> dict:
        return {"value": self.value, "witness_r": self.witness_r,
                "witness_theta": self.witness_theta, "grid": self.grid.to_dict()}


def _abs_coeff_sum(mods: np.ndarray, r) -> np.ndarray:
    powers = np.asarray(r, dtype=float)[..., None] ** np.arange(mods.size)
    return powers @ mods


def _batch_circle_max(coeffs: np.ndarray, radii: np.ndarray,
                      theta_points: int) -> np.ndarray:
    """max_theta |f(r e^{i theta})| on the raw angle grid, for every radius."""
    count = _angle_count(theta_points, coeffs.size)
    exps = np.arange(coeffs.size, dtype=float)
    out = np.empty(radii.size)
    chunk = max(1, 2_000_000 // count)
    for start in range(0, radii.size, chunk):
        rr = radii[start:start + chunk]
        buf = np.zeros((rr.size, count), dtype=complex)
        buf[:, :coeffs.size] = coeffs[None, :] * rr[:, None] ** exps[None, :]
        out[start:start + chunk] = np.abs(np.fft.ifft(buf, axis=1) * count).max(axis=1)
    return out


def _series_radial_sup(s: TruncatedSeries, w: Weight,
                       grid: GridSpec) -> tuple[float, float, float]:
    """sup_r w(r) max_theta |f(r e^{i theta})| -> (value, witness_r, witness_theta).

    Ties resolve to the smallest witness radius.
    """
    _check_certified(s, grid.r_max, "radial scan")
    if s.is_nonnegative:
        mods = np.abs(s.coeffs)
        profile = lambda r: np.asarray(w(r)) * _abs_coeff_sum(mods, r)
        x, v = grid_golden_max(profile, grid.r_min, grid.r_max, grid.r_points,
                               refine=grid.refine, tol=grid.refine_tol)
        return v, x, 0.0

    radii = grid.radii()
    rough = np.asarray(w(radii)) * _batch_circle_max(s.coeffs, radii, grid.theta_points)
    i = int(np.argmax(rough))

    def polished(r: float) -> tuple[float, float]:
        sup, theta = circle_sup(s, float(r), grid)
        return float(w(float(r))) * sup, theta

    best_r = float(radii[i])
    best_v, best_theta = polished(best_r)
    if grid.refine:
        lo = float(radii[max(i - 1, 0)])
        hi = float(radii[min(i + 1, radii.size - 1)])
        if hi > lo:
            xr, vr = golden_max(lambda r: polished(r)[0], lo, hi, tol=grid.refine_tol)
            if vr > best_v:
                best_r = xr
                best_v, best_theta = polished(xr)
    return best_v, best_r, best_theta


def weighted_bloch_seminorm(s: TruncatedSeries, w: Weight,
                            grid: GridSpec | None = None) -> float:
    """sup_r omega(r) max_theta |f'(r e^{i theta})| (the norm without |a_0|).

    This is the gradient part of the Bloch norm; constants have seminorm
    zero.  The majorant-ratio bound R/sqrt(1-R^2) controls exactly this
    quantity, which is why the strictness probe divides seminorms.
    """
    grid = grid or GridSpec()
    ds = derivative(s)
    sup, _, _ = _series_radial_sup(ds, w, grid)
    return sup


def weighted_bloch_norm(s: TruncatedSeries, w: Weight,
                        grid: GridSpec | None = None) -> float:
    """|a_0| + sup_r omega(r) max_theta |f'(r e^{i theta})|.

    The series must be certified up to the scan radius (polynomials always
    are); otherwise a DivergenceRegionError is raised.
    """
    return float(abs(s.coeffs[0])) + weighted_bloch_seminorm(s, w, grid)


def _call_evaluator(evaluator: Callable, z: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(evaluator(z), dtype=complex)
        if out.shape != z.shape:
            raise ValueError("shape mismatch")
    except BlochBohrError:
        raise
    except Exception:
        try:
            out = np.array([evaluator(complex(p)) for p in z.ravel()],
                           dtype=complex).reshape(z.shape)
        except BlochBohrError:
            raise
        except Exception as exc:
            raise EvaluatorDomainError(f"evaluator failed on the scan disc: {exc}")
    if not np.all(np.isfinite(out)):
        raise EvaluatorDomainError("evaluator produced non-finite values on the scan disc")
    return out


def weighted_radial_sup(evaluator: Callable, w: Weight,
                        grid: GridSpec | None = None) -> RadialSupReport:
    """sup_r omega(r) max_theta |f(r e^{i theta})| for an arbitrary evaluator.

    ``evaluator`` maps complex points to complex values and must be defined
    on the closed disc of radius ``grid.r_max``; vectorized callables are
    used as-is, scalar ones fall back to an elementwise loop.  The best
    radial bracket is polished monotonically; ties report the smallest
    witness radius.
    """
    grid = grid or GridSpec()
    radii = grid.radii()
    angles = grid.angles()
    rough = np.empty(radii.size)
    chunk = max(1, 2_000_000 // angles.size)
    for start in range(0, radii.size, chunk):
        rr = radii[start:start + chunk]
        z = rr[:, None] * np.exp(1j * angles)[None, :]
        rough[start:start + chunk] = np.abs(_call_evaluator(evaluator, z)).max(axis=1)
    weighted = np.asarray(w(radii)) * rough
    i = int(np.argmax(weighted))

    def circle_max(r: float) -> tuple[float, float]:
        vals = np.abs(_call_evaluator(evaluator, r * np.exp(1j * angles)))
        j = int(np.argmax(vals))
        theta, sup = float(angles[j]), float(vals[j])
        if grid.refine and angles.size >= 2:
            step = angles[1] - angles[0] if angles.size > 1 else np.pi
            f = lambda th: np.abs(_call_evaluator(
                evaluator, np.asarray(r * np.exp(1j * th), dtype=complex)))
            th_r, sup_r = golden_max(f, theta - step, theta + step, tol=grid.refine_tol)
            if sup_r > sup:
                theta, sup = th_r % (2.0 * np.pi), sup_r
        return sup, theta

    def weighted_at(r: float) -> tuple[float, float]:
        sup, theta = circle_max(float(r))
        return float(w(float(r))) * sup, theta

    best_r = float(radii[i])
    best_v, best_theta = weighted_at(best_r)
    if grid.refine:
        lo = float(radii[max(i - 1, 0)])
        hi = float(radii[min(i + 1, radii.size - 1)])
        if hi > lo:
            xr, vr = golden_max(lambda r: weighted_at(r)[0], lo, hi, tol=grid.refine_tol)
            if vr > best_v:
                best_r = xr
                best_v, best_theta = weighted_at(xr)
    return RadialSupReport(value=best_v, witness_r=best_r,
                           witness_theta=best_theta, grid=grid)


def _check_a(a):
    arr = np.asarray(a, dtype=float)
    if np.any(arr <= 0.0) or np.any(arr >= A_MAX):
        raise ParameterDomainError(
            f"parameter a must lie in (0, 1/sqrt(3)) = (0, {A_MAX:.6f})")
    return float(arr) if arr.ndim == 0 else arr


def avkhadiev_eval(a: float, z):
    """The unit-sup Bloch test function (3 sqrt(3)/2)(1-a^2)(z-a)/(1-az)^3.

    Under the standard weight, sup_z (1 - |z|^2) |f(z)| = 1 for every
    a in (0, 1/sqrt(3)).
    """
    a = _check_a(float(a))
    z = np.asarray(z, dtype=complex)
    den = 1.0 - a * z
    if np.any(den == 0.0):
        raise PoleError(f"pole at z = 1/a = {1.0 / a:.6g}")
    out = _COEF * (1.0 - a * a) * (z - a) / den ** 3
    if z.ndim == 0:
        return complex(out)
    return out


def avkhadiev_coefficients(a: float, n_terms: int = 257) -> TruncatedSeries:
    """Maclaurin coefficients C(a) (n+1)(n/2 - t) a^n with t = a^2/(1-a^2).

    The normalizer C(a) = (3 sqrt(3)/2)(1-a^2)^2 / a makes the series match
    avkhadiev_eval; then a_0 = -(3 sqrt(3)/2) a (1-a^2) < 0 and a_n > 0 for
    n >= 1 exactly when 0 < a < 1/sqrt(3).  Outside that range positivity
    fails and the parameter is rejected.
    """
    a = _check_a(float(a))
    if n_terms < 2:
        raise ParameterDomainError("need at least 2 coefficient terms")
    atil = a * a / (1.0 - a * a)
    norm = _COEF * (1.0 - a * a) ** 2 / a
    n = np.arange(n_terms, dtype=float)
    coeffs = norm * (n + 1.0) * (0.5 * n - atil) * a ** n
    rho = 0.5 * (1.0 + a)
    t = a / rho
    ks = np.arange(0, int(6.0 / np.log(1.0 / t)) + 8, dtype=float)
    m = norm * float(np.max((ks + 1.0) * (0.5 * ks + atil) * t ** ks))
    return TruncatedSeries(coeffs.astype(complex), rho, m)


def avkhadiev_majorant_closed_form(a, x):
    """sum |a_n| x^n = (3 sqrt(3)(1-a^2)/2) ((x-a)/(1-ax)^3 + 2a) for x >= 0.

    Broadcasts over both arguments.
    """
    a = _check_a(a)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ParameterDomainError("majorant argument must be nonnegative")
    if np.any(a * x == 1.0):
        raise PoleError("pole at x = 1/a")
    if np.any(a * x > 1.0):
        raise DivergenceRegionError("majorant sum diverges past x = 1/a")
    out = _COEF * (1.0 - a * a) * ((x - a) / (1.0 - a * x) ** 3 + 2.0 * a)
    if np.ndim(out) == 0:
        return float(out)
    return out
