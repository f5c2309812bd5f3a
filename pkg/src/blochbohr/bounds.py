"""Quantitative Bohr-radius bounds.

* ``theorem1_root`` / ``theorem1_optimize``: the lower bound for the
  Bloch-to-bounded Bohr radius.  For each exponent s in (0, 1) the radius
  solves log(1 - r^{2s}) = (r^{2(1-s)} - 1) / r^{2(1-s)}; maximizing the
  root over s gives r* = 0.563777 at s* = 0.333771.  At s = 1/2 the
  equation reduces to 1 - r + r log(1 - r) = 0 with root 0.55356.
* ``cauchy_chain_check``: the three-term Cauchy-Schwarz chain
  w(r) R sum |a_n| (Rr)^n <= w(r) ||f||_L2 R/sqrt(1-R^2)
  <= w(r) ||f||_Linf R/sqrt(1-R^2), tight multiplier 1 at R = 1/sqrt(2).
* ``theorem4_*``: the upper-bound certificate via the unit-sup test
  function; its scaled majorant R (1-r^2) sum |a_n| (Rr)^n exceeds 1 for
  suitable (a, R), e.g. a = 0.35 and R = 0.769.
* ``bombieri_m_infty`` / ``mobius_majorant_sup``: the closed form
  (3 - sqrt(8(1-r^2)))/r of the bounded-function majorant supremum on
  [1/3, 1/sqrt(2)], and its independent realization by the Mobius family
  a + (1-a^2) r / (1-ar).
* ``theorem5_gap``: numerical strictness probe of
  m_Bloch(R) < R/sqrt(1-R^2) over a finite test-function family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ParameterDomainError, PoleError
from .extremal import ExtremalSpec, extremal_coefficients
from .norms import (A_MAX, avkhadiev_majorant_closed_form, weighted_bloch_norm,
                    weighted_bloch_seminorm)
from .search import GridSpec, bisect_root, golden_max, grid_golden_max
from .series import TruncatedSeries, circle_norms, coefficient_sum, majorant, scale_argument
from .weights import Weight, builtin_weight

#: exponent grid endpoints: the bound degenerates at both ends of (0, 1)
S_CLIP = (1e-4, 1.0 - 1e-4)

#: "exceeds 1" means strictly above this, to avoid rounding-false positives
EXCEED_THRESHOLD = 1.0 + 1e-9

#: lean scan grid for probe-family norms (margins there are large)
PROBE_GRID = GridSpec(r_points=1024, theta_points=1024)


@dataclass(frozen=True)
class SolverConfig:
    """Bracketing, tolerance and iteration-cap settings for scalar solves."""

    abs_tol: float = 1e-10
    max_iter: int = 200
    bracket: tuple[float, float] = (1e-6, 1.0 - 1e-6)

    def __post_init__(self) -> None:
        lo, hi = self.bracket
        if not lo < hi:
            raise ParameterDomainError("bracket must satisfy lo < hi")
        if self.abs_tol <= 0.0:
            raise ParameterDomainError("abs_tol must be positive")
        if self.max_iter < 1:
            raise ParameterDomainError("max_iter must be >= 1")


@dataclass(frozen=True)
class ScanReport:
    """Result of a parameter scan: best point found and threshold verdict."""

    best_value: float
    best_params: dict
    exceeded_threshold: bool
    samples: int

    def to_json_dict(self) -> dict:
        return {"best_value": self.best_value, "best_params": dict(self.best_params),
                "exceeded_threshold": self.exceeded_threshold, "samples": self.samples}


def _t1_residual(r, s):
    return np.log(1.0 - r ** (2.0 * s)) - 1.0 + r ** (-2.0 * (1.0 - s))


def theorem1_root(s: float, cfg: SolverConfig | None = None) -> float:
    """Radius solving log(1 - r^{2s}) - 1 + r^{-2(1-s)} = 0 for s in (0, 1).

    Bracketing bisection with sign-change verification; the residual is
    driven below cfg.abs_tol.  s is clipped into [1e-4, 1 - 1e-4] where the
    equation is well conditioned.
    """
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ParameterDomainError(f"exponent s must lie in (0, 1), got {s}")
    s = min(max(s, S_CLIP[0]), S_CLIP[1])
    cfg = cfg or SolverConfig()
    lo, hi = cfg.bracket
    return bisect_root(lambda r: _t1_residual(r, s), lo, hi,
                       abs_tol=cfg.abs_tol, max_iter=cfg.max_iter)


def _theorem1_roots_vector(ss: np.ndarray, cfg: SolverConfig) -> np.ndarray:
    """Simultaneous bisection of the radius equation over an exponent grid.

    The residual is strictly decreasing in r, so the sign at the midpoint
    steers every lane independently.
    """
    lo = np.full(ss.shape, cfg.bracket[0])
    hi = np.full(ss.shape, cfg.bracket[1])
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        positive = _t1_residual(mid, ss) > 0.0
        lo = np.where(positive, mid, lo)
        hi = np.where(positive, hi, mid)
    return 0.5 * (lo + hi)


def theorem1_optimize(cfg: SolverConfig | None = None,
                      scan_points: int = 1000) -> tuple[float, float]:
    """Maximize the radius of ``theorem1_root`` over the exponent s.

    Coarse scan on a ~1e-3-step grid, then golden-section polish once the
    scan confirms a single local maximum; with several comparable maxima
    the raw scan winner is returned.  Returns (s_star, r_star).
    """
    cfg = cfg or SolverConfig()
    ss = np.linspace(S_CLIP[0], S_CLIP[1], scan_points)
    rs = _theorem1_roots_vector(ss, cfg)
    top = int(np.argmax(rs))

    interior = np.zeros(ss.size, dtype=bool)
    interior[1:-1] = (rs[1:-1] >= rs[:-2]) & (rs[1:-1] >= rs[2:])
    peaks = np.flatnonzero(interior)
    contenders = [i for i in peaks if rs[i] >= rs[top] - 1e-9]
    clusters = 1 + int(np.sum(np.diff(contenders) > 1)) if contenders else 0
    if clusters != 1:
        return float(ss[top]), float(rs[top])

    lo = float(ss[max(top - 1, 0)])
    hi = float(ss[min(top + 1, ss.size - 1)])
    s_star, r_star = golden_max(lambda s: theorem1_root(float(s), cfg), lo, hi,
                                tol=1e-10)
    if r_star < rs[top]:
        return float(ss[top]), float(rs[top])
    return float(s_star), float(r_star)


def bloch_coefficient_bound_check(s: TruncatedSeries, r: float) -> float:
    """Margin r^2/(1-r^2)^2 - sum n^2 |a_n|^2 r^{2n}.

    Nonnegative whenever the series has standard-weight Bloch norm <= 1
    (caller-asserted).
    """
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ParameterDomainError("radius must lie in (0, 1)")
    n = np.arange(s.coeffs.size, dtype=float)
    weighted = float(np.sum(n ** 2 * np.abs(s.coeffs) ** 2 * r ** (2.0 * n)))
    return r * r / (1.0 - r * r) ** 2 - weighted


def cauchy_chain_check(s: TruncatedSeries, w: Weight, scale: float, r: float,
                       grid: GridSpec | None = None) -> tuple[float, float, float]:
    """The three chain values at (R, r); weakly increasing for every input.

    v1 = w(r) R sum |a_n| (R r)^n, v2 = w(r) ||f||_L2(r) R/sqrt(1-R^2),
    v3 = w(r) ||f||_Linf(r) R/sqrt(1-R^2).
    """
    scale = float(scale)
    if not 0.0 < scale < 1.0:
        raise ParameterDomainError("the scale R must lie in (0, 1)")
    norms = circle_norms(s, r, grid)
    wr = float(w(float(r)))
    multiplier = float(scale / np.sqrt(1.0 - scale * scale))
    v1 = wr * scale * coefficient_sum(majorant(s), scale * r)
    v2 = wr * norms.l2_norm * multiplier
    v3 = wr * norms.sup_norm * multiplier
    return v1, v2, v3


def theorem4_expression(a, scale: float, r):
    """R (1-r^2) (3 sqrt(3)(1-a^2)/2) ((Rr-a)/(1-aRr)^3 + 2a) on r in [0, 1].

    Broadcasts over a and r.
    """
    scale = float(scale)
    if scale < 0.0:
        raise ParameterDomainError("the scale R must be nonnegative")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0) or np.any(r > 1.0):
        raise ParameterDomainError("radius must lie in [0, 1]")
    out = scale * (1.0 - r * r) * avkhadiev_majorant_closed_form(a, scale * r)
    if np.ndim(out) == 0:
        return float(out)
    return out


def theorem4_sup(a: float, scale: float, r_points: int = 2048,
                 refine: bool = True) -> tuple[float, float]:
    """sup over r in [0, 1] of ``theorem4_expression`` -> (value, witness_r)."""
    x, v = grid_golden_max(lambda r: theorem4_expression(a, scale, r),
                           0.0, 1.0, r_points, refine=refine)
    return v, x


def theorem4_upper_bound(cfg: SolverConfig | None = None, a_points: int = 200,
                         r_points: int = 2048) -> ScanReport:
    """Least scale R (by bisection) at which some a pushes the sup past 1.

    Any such R is an upper bound for the Bloch-space Bohr radius.  The
    expression grows monotonically in R, so bisection on the exceedance
    flag is valid.  The default bracket is (1/sqrt(2), 0.7691).  The report
    carries the certificate at the returned scale: best_params holds
    (R, a, r) and best_value the expression value there.
    """
    cfg = cfg or SolverConfig(abs_tol=1e-5, bracket=(1.0 / np.sqrt(2.0), 0.7691))
    a_grid = np.linspace(1e-6, A_MAX - 1e-9, a_points)
    r_grid = np.linspace(0.0, 1.0, r_points)
    samples = 0

    def best_over_a(scale: float) -> tuple[float, float, float]:
        nonlocal samples
        table = theorem4_expression(a_grid[:, None], scale, r_grid[None, :])
        samples += table.size
        i, j = np.unravel_index(int(np.argmax(table)), table.shape)
        a_star = float(a_grid[i])
        value, r_star = theorem4_sup(a_star, scale, r_points)
        return value, a_star, r_star

    lo, hi = cfg.bracket
    v_lo, _, _ = best_over_a(lo)
    if v_lo > EXCEED_THRESHOLD:
        raise ParameterDomainError(
            f"bracket low end {lo} already exceeds 1; lower it")
    v_hi, a_hi, r_hi = best_over_a(hi)
    if v_hi <= EXCEED_THRESHOLD:
        raise ParameterDomainError(
            f"bracket high end {hi} does not exceed 1; raise it")
    for _ in range(cfg.max_iter):
        if hi - lo <= cfg.abs_tol:
            break
        mid = 0.5 * (lo + hi)
        value, a_mid, r_mid = best_over_a(mid)
        if value > EXCEED_THRESHOLD:
            hi, v_hi, a_hi, r_hi = mid, value, a_mid, r_mid
        else:
            lo = mid
    return ScanReport(best_value=v_hi,
                      best_params={"R": hi, "a": a_hi, "r": r_hi},
                      exceeded_threshold=True, samples=samples)


def bombieri_m_infty(r):
    """m_infty(r) = (3 - sqrt(8 (1 - r^2))) / r on [1/3, 1/sqrt(2)].

    Endpoint values: 1 at r = 1/3 and sqrt(2) at r = 1/sqrt(2).
    """
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 1.0 / 3.0 - 1e-12) or np.any(arr > 1.0 / np.sqrt(2.0) + 1e-12):
        raise ParameterDomainError(
            "the closed form holds for r in [1/3, 1/sqrt(2)] only")
    out = (3.0 - np.sqrt(8.0 * (1.0 - arr * arr))) / arr
    if arr.ndim == 0:
        return float(out)
    return out


def mobius_majorant_sum(a, r):
    """Majorant sum of (a - z)/(1 - az) at radius r: a + (1 - a^2) r / (1 - ar)."""
    a = np.asarray(a, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(a * r == 1.0):
        raise PoleError("pole at ar = 1")
    return a + (1.0 - a * a) * r / (1.0 - a * r)


def mobius_majorant_sup(r: float, a_points: int = 2048,
                        refine: bool = True) -> float:
    """max over a in [0, 1) of the Mobius-family majorant sum at radius r.

    On [1/3, 1/sqrt(2)] this reproduces the closed form
    ``bombieri_m_infty``; it never exceeds the Cauchy-Schwarz bound
    1/sqrt(1 - r^2), with equality only at r = 1/sqrt(2).
    """
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ParameterDomainError("radius must lie in (0, 1)")
    _, v = grid_golden_max(lambda a: mobius_majorant_sum(a, r),
                           0.0, 1.0 - 1e-9, a_points, refine=refine)
    return v


def mobius_series(alpha: float, n_terms: int = 257) -> TruncatedSeries:
    """Coefficients of the disc automorphism (alpha - z)/(1 - alpha z).

    c_0 = alpha and c_n = -(1 - alpha^2) alpha^{n-1} for n >= 1, with a
    geometric tail of ratio alpha.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise ParameterDomainError("alpha must lie in [0, 1)")
    if n_terms < 2:
        raise ParameterDomainError("need at least 2 coefficient terms")
    coeffs = np.empty(n_terms, dtype=complex)
    coeffs[0] = alpha
    coeffs[1:] = -(1.0 - alpha * alpha) * alpha ** np.arange(0, n_terms - 1, dtype=float)
    if alpha == 0.0:
        return TruncatedSeries.polynomial(coeffs[:2])
    return TruncatedSeries(coeffs, alpha, (1.0 - alpha * alpha) / alpha)


@dataclass
class ProbeFunction:
    """A named test function with a per-grid cache of its Bloch seminorm."""

    name: str
    series: TruncatedSeries
    _norms: dict = field(default_factory=dict, repr=False, compare=False)

    def bloch_seminorm(self, w: Weight, grid: GridSpec) -> float:
        key = (w.name, tuple(sorted(w.params.items())), grid)
        if key not in self._norms:
            self._norms[key] = weighted_bloch_seminorm(self.series, w, grid)
        return self._norms[key]


@lru_cache(maxsize=1)
def default_probe_family() -> tuple[ProbeFunction, ...]:
    """The documented strictness-probe family: monomials, low-degree
    polynomials, disc automorphisms (plain and dilated), and degree-one
    Blaschke extremals.  Finite and explicitly non-exhaustive.
    """
    members = [
        ProbeFunction("z", TruncatedSeries.polynomial([0.0, 1.0])),
        ProbeFunction("z^2", TruncatedSeries.polynomial([0.0, 0.0, 1.0])),
        ProbeFunction("z^3", TruncatedSeries.polynomial([0.0, 0.0, 0.0, 1.0])),
        ProbeFunction("1+z", TruncatedSeries.polynomial([1.0, 1.0])),
        ProbeFunction("z+z^2/2", TruncatedSeries.polynomial([0.0, 1.0, 0.5])),
        ProbeFunction("1-z+z^2", TruncatedSeries.polynomial([1.0, -1.0, 1.0])),
        ProbeFunction("0.5+iz-0.3z^2",
                      TruncatedSeries.polynomial([0.5, 1.0j, -0.3])),
    ]
    for alpha in (0.3, 0.5, 1.0 / np.sqrt(2.0), 0.9):
        members.append(ProbeFunction(f"mobius({alpha:.4f})", mobius_series(alpha)))
    members.append(ProbeFunction(
        "mobius(0.7071) at 0.9z",
        scale_argument(mobius_series(1.0 / np.sqrt(2.0)), 0.9)))
    for r0 in (0.75, 0.9):
        members.append(ProbeFunction(
            f"extremal(r0={r0})", extremal_coefficients(ExtremalSpec(r0=r0))))
    return tuple(members)


def theorem5_ratios(scale: float, family=None,
                    grid: GridSpec | None = None) -> dict[str, float]:
    """Majorant-to-function Bloch seminorm ratio per probe-family member.

    The ratio uses the gradient seminorm sup omega |f'| on both sides:
    with the |a_0| term included, constants alone would push the ratio to 1
    and the strict bound could not hold for small scales.  Members must
    have positive seminorm.
    """
    scale = float(scale)
    if not 0.0 < scale < 1.0:
        raise ParameterDomainError("the scale R must lie in (0, 1)")
    family = default_probe_family() if family is None else family
    grid = grid or PROBE_GRID
    std = builtin_weight("standard")
    ratios = {}
    for member in family:
        denominator = member.bloch_seminorm(std, grid)
        if denominator <= 0.0:
            raise ParameterDomainError(
                f"probe member {member.name} has zero Bloch seminorm")
        scaled = scale_argument(majorant(member.series), scale)
        numerator = weighted_bloch_seminorm(scaled, std, grid)
        ratios[member.name] = numerator / denominator
    return ratios


def theorem5_gap(scale: float, family=None, grid: GridSpec | None = None) -> float:
    """R/sqrt(1-R^2) minus the best majorant ratio over the probe family.

    A positive value is consistent with strictness of the bound; only a
    negative value would be decisive (falsification).
    """
    ratios = theorem5_ratios(scale, family=family, grid=grid)
    scale = float(scale)
    return scale / np.sqrt(1.0 - scale * scale) - max(ratios.values())
