"""Truncated Maclaurin series with certified geometric tails.

A series f(z) = sum a_n z^n is stored through its first N+1 coefficients.
Optional tail data (rho, M) certifies |a_n| <= M rho^n for every n > N, so
each evaluation returns a value together with a rigorous truncation bound
M (rho|z|)^{N+1} / (1 - rho|z|).  Polynomials carry the exact tail (0, 0);
series without tail data are evaluated only on |z| <= 0.9 and their results
are flagged as truncation-uncertified.

All values are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DivergenceRegionError, ParameterDomainError
from .search import GridSpec, golden_max

#: largest |z| at which a series without tail data may be evaluated
UNCERTIFIED_RADIUS = 0.9

#: default truncation order for series derived from rational functions
DEFAULT_ORDER = 256


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_N plus an optional geometric tail bound.

    ``tail_rho``/``tail_m`` certify |a_n| <= tail_m * tail_rho**n for n > N.
    """

    coeffs: np.ndarray
    tail_rho: Optional[float] = None
    tail_m: Optional[float] = None

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ParameterDomainError("coeffs must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(c)):
            raise ParameterDomainError("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)
        if (self.tail_rho is None) != (self.tail_m is None):
            raise ParameterDomainError("tail_rho and tail_m must be given together")
        if self.tail_rho is not None:
            if not 0.0 <= self.tail_rho < 1.0:
                raise ParameterDomainError("tail ratio must lie in [0, 1)")
            if self.tail_m < 0.0:
                raise ParameterDomainError("tail constant must be nonnegative")

    @classmethod
    def polynomial(cls, coeffs) -> "TruncatedSeries":
        """A polynomial: the stored coefficients are all there is (tail 0)."""
        return cls(np.asarray(coeffs, dtype=complex), 0.0, 0.0)

    @classmethod
    def with_geometric_tail(cls, coeffs, rho: float, m: float) -> "TruncatedSeries":
        return cls(np.asarray(coeffs, dtype=complex), float(rho), float(m))

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def has_tail(self) -> bool:
        return self.tail_rho is not None

    @property
    def is_nonnegative(self) -> bool:
        """True when every stored coefficient is real and >= 0."""
        return bool(np.all(self.coeffs.imag == 0.0) and np.all(self.coeffs.real >= 0.0))

    def to_json_dict(self) -> dict:
        tail = None
        if self.has_tail:
            tail = {"rho": self.tail_rho, "M": self.tail_m}
        return {"coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
                "tail": tail}

    @classmethod
    def from_json_dict(cls, d: dict) -> "TruncatedSeries":
        coeffs = np.array([complex(re, im) for re, im in d["coeffs"]])
        tail = d.get("tail")
        if tail is None:
            return cls(coeffs)
        return cls(coeffs, float(tail["rho"]), float(tail["M"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def loads(cls, text: str) -> "TruncatedSeries":
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class SeriesValue:
    """A partial-sum evaluation plus its truncation bound.

    ``tail_bound`` is None when the series carries no tail certificate, in
    which case the value is truncation-uncertified.
    """

    value: complex
    tail_bound: Optional[float]

    @property
    def certified(self) -> bool:
        return self.tail_bound is not None


@dataclass(frozen=True)
class CircleNorms:
    """Norms of f on the circle |z| = r.

    ``l2_norm`` is the angle-averaged L2 norm sqrt(sum |a_n|^2 r^{2n})
    (Parseval), ``sup_norm`` the maximum modulus over the circle, and
    ``coeff_sum`` the majorant value sum |a_n| r^n.  For any series
    l2_norm <= sup_norm <= coeff_sum.
    """

    r: float
    sup_norm: float
    l2_norm: float
    coeff_sum: float


def majorant(s: TruncatedSeries) -> TruncatedSeries:
    """Replace every coefficient by its modulus; the tail bound carries over."""
    return TruncatedSeries(np.abs(s.coeffs).astype(complex), s.tail_rho, s.tail_m)


def derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative: coefficients n a_n shifted down one index.

    The geometric tail cannot keep its ratio under differentiation (the
    factor n grows), so the ratio is enlarged to (1 + rho)/2 and the
    constant adjusted to absorb sup_n (n+1) (rho/rho')^n.
    """
    n = s.order
    if n == 0:
        if s.has_tail and s.tail_rho > 0.0 and s.tail_m > 0.0:
            raise ParameterDomainError(
                "cannot differentiate a constant-only series with a nonzero tail: "
                "all derivative coefficients would be unstored")
        return TruncatedSeries.polynomial([0.0])
    d = s.coeffs[1:] * np.arange(1, n + 1)
    if not s.has_tail:
        return TruncatedSeries(d)
    rho, m = s.tail_rho, s.tail_m
    if rho == 0.0 or m == 0.0:
        return TruncatedSeries(d, 0.0, 0.0)
    rho2 = 0.5 * (1.0 + rho)
    t = rho / rho2
    ks = np.arange(0, int(np.ceil(-2.0 / np.log(t))) + 2)
    growth = float(np.max((ks + 1) * t ** ks))
    return TruncatedSeries(d, rho2, m * rho * growth)


def scale_argument(s: TruncatedSeries, scale: float) -> TruncatedSeries:
    """Map f(z) to f(scale * z): coefficients a_n scale^n.

    The tail ratio is multiplied by the scale; if that pushes it to 1 or
    beyond, the certificate is dropped.
    """
    if scale < 0.0:
        raise ParameterDomainError("argument scale must be nonnegative")
    c = s.coeffs * float(scale) ** np.arange(s.coeffs.size)
    if s.has_tail and s.tail_rho * scale < 1.0:
        return TruncatedSeries(c, s.tail_rho * scale, s.tail_m)
    return TruncatedSeries(c)


def _horner(coeffs: np.ndarray, z) -> np.ndarray:
    """Evaluate the partial sum at z (scalar or array), highest degree first."""
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, coeffs[-1], dtype=complex)
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def _check_certified(s: TruncatedSeries, radius: float, what: str = "evaluation") -> None:
    if s.has_tail:
        if s.tail_rho * radius >= 1.0:
            raise DivergenceRegionError(
                f"{what} at |z|={radius:.6g} leaves the certified region "
                f"(tail ratio {s.tail_rho:.6g})")
    elif radius > UNCERTIFIED_RADIUS:
        raise DivergenceRegionError(
            f"{what} at |z|={radius:.6g} requires tail certification "
            f"beyond |z| = {UNCERTIFIED_RADIUS}")


def tail_bound(s: TruncatedSeries, radius: float) -> Optional[float]:
    """Rigorous bound on the dropped terms at |z| = radius, or None."""
    if not s.has_tail:
        return None
    x = s.tail_rho * radius
    if x >= 1.0:
        raise DivergenceRegionError(f"tail diverges at |z|={radius:.6g}")
    return s.tail_m * x ** (s.order + 1) / (1.0 - x)


def eval_series(s: TruncatedSeries, z) -> SeriesValue:
    """Horner-evaluate the partial sum with a rigorous truncation bound.

    ``z`` may be a scalar or an array; the certified region is checked at
    the largest modulus present.  Without tail data the result is flagged
    uncertified (tail_bound None) and |z| must stay within 0.9.
    """
    z = np.asarray(z, dtype=complex)
    radius = float(np.max(np.abs(z))) if z.size else 0.0
    _check_certified(s, radius)
    value = _horner(s.coeffs, z)
    if z.ndim == 0:
        value = complex(value)
    if not s.has_tail:
        return SeriesValue(value, None)
    x = s.tail_rho * np.abs(z)
    bound = s.tail_m * x ** (s.order + 1) / (1.0 - x)
    if z.ndim == 0:
        bound = float(bound)
    return SeriesValue(value, bound)


def coefficient_sum(s: TruncatedSeries, radius: float) -> float:
    """The majorant value sum |a_n| radius^n of the stored coefficients."""
    if radius < 0.0:
        raise ParameterDomainError("radius must be nonnegative")
    _check_certified(s, radius, "majorant sum")
    return float(np.abs(s.coeffs) @ radius ** np.arange(s.coeffs.size, dtype=float))


def _angle_count(requested: int, n_coeffs: int) -> int:
    """Angle count for an aliasing-free FFT scan (raised to cover the degree)."""
    count = max(int(requested), 1)
    if count < n_coeffs:
        count = 1 << (n_coeffs - 1).bit_length()
    return count


def values_on_angle_grid(s: TruncatedSeries, r: float,
                         theta_points: int) -> tuple[np.ndarray, np.ndarray]:
    """f(r e^{i theta_k}) on a uniform angle grid via one padded inverse FFT.

    Returns (angles, values).  The grid is enlarged to the next power of two
    past the coefficient count when the request would alias.
    """
    count = _angle_count(theta_points, s.coeffs.size)
    buf = np.zeros(count, dtype=complex)
    buf[:s.coeffs.size] = s.coeffs * float(r) ** np.arange(s.coeffs.size, dtype=float)
    values = np.fft.ifft(buf) * count
    angles = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    return angles, values


def circle_sup(s: TruncatedSeries, r: float, grid: GridSpec) -> tuple[float, float]:
    """max_theta |f(r e^{i theta})| with its witness angle.

    Uniform angle scan, then golden-section polish of the best bracket.
    Series with real nonnegative coefficients peak at theta = 0 exactly
    (their circle maximum is the coefficient sum), so they skip the scan.
    """
    _check_certified(s, r, "circle scan")
    if s.is_nonnegative:
        return coefficient_sum(s, r), 0.0
    angles, values = values_on_angle_grid(s, r, grid.theta_points)
    mods = np.abs(values)
    j = int(np.argmax(mods))
    best_theta, best = float(angles[j]), float(mods[j])
    if grid.refine and angles.size >= 2:
        step = angles[1] - angles[0]
        f = lambda th: np.abs(_horner(s.coeffs, r * np.exp(1j * th)))
        theta_r, sup_r = golden_max(f, best_theta - step, best_theta + step,
                                    tol=grid.refine_tol)
        if sup_r > best:
            best_theta, best = theta_r % (2.0 * np.pi), sup_r
    return best, best_theta


def circle_norms(s: TruncatedSeries, r: float, grid: GridSpec | None = None) -> CircleNorms:
    """Sup, L2, and majorant norms of f on the circle |z| = r.

    The L2 norm comes from the coefficients by Parseval; the sup norm from
    an angle scan with local refinement; coeff_sum is sum |a_n| r^n.
    """
    if r < 0.0 or r >= 1.0:
        raise ParameterDomainError("circle radius must lie in [0, 1)")
    grid = grid or GridSpec()
    _check_certified(s, r, "circle norms")
    powers = float(r) ** np.arange(s.coeffs.size, dtype=float)
    mods = np.abs(s.coeffs)
    l2 = float(np.sqrt(np.sum((mods * powers) ** 2)))
    csum = float(mods @ powers)
    sup, _ = circle_sup(s, r, grid)
    return CircleNorms(r=float(r), sup_norm=sup, l2_norm=l2, coeff_sum=csum)
