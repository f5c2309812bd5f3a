"""Radial weights for Bloch spaces and the sharpness criterion.

The criterion bounds are omega1(r) = 2 - r/r0 and
omega2(r) = (sqrt(2) r0 + r) / (sqrt(2) r + r0); a weight is admissible at
an anchor r0 in [1/sqrt(2), 1] when omega(r)/omega(r0) stays below their
pointwise minimum h(r) for every r in [0, 1).  h equals omega2 left of r0
and omega1 right of it, and is decreasing and convex on [0, r0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from .errors import ParameterDomainError, ZeroDenominatorError
from .search import GridSpec, bisect_root, trisect_min

SQRT2 = float(np.sqrt(2.0))
R0_MIN = 1.0 / SQRT2

#: default scan grid for criterion checks: 10_000 points on [0, 1 - 1e-6]
CRITERION_GRID = GridSpec(r_points=10_000, r_max=1.0 - 1e-6)

#: equality in the criterion is admissible, so passing tolerates tiny rounding
CRITERION_TOL = 1e-12


@dataclass(frozen=True)
class Weight:
    """A nonnegative radial weight on [0, 1).

    ``fn`` must be vectorized over numpy arrays.  Calls at exactly r = 1 are
    answered with ``limit_at_one`` when that limit is finite and rejected
    otherwise; the open-interval domain is the contract everywhere else.
    """

    name: str
    fn: Callable = field(repr=False)
    params: Mapping[str, float] = field(default_factory=dict)
    limit_at_one: float = np.inf

    def __call__(self, r):
        arr = np.asarray(r, dtype=float)
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise ParameterDomainError(f"weight {self.name} is defined on [0, 1)")
        if np.any(arr == 1.0) and not np.isfinite(self.limit_at_one):
            raise ParameterDomainError(
                f"weight {self.name} has no finite limit at r = 1")
        at_one = arr == 1.0
        inner = np.where(at_one, 0.0, arr)
        out = np.asarray(self.fn(inner), dtype=float)
        out = np.where(at_one, self.limit_at_one, out)
        if arr.ndim == 0:
            return float(out)
        return out

    def scaled(self, c: float) -> "Weight":
        """The weight multiplied by a positive constant."""
        if c <= 0.0:
            raise ParameterDomainError("scale must be positive")
        return Weight(name=f"{c}*{self.name}", fn=lambda r: c * self.fn(r),
                      params=dict(self.params),
                      limit_at_one=c * self.limit_at_one)


@dataclass(frozen=True)
class CriterionReport:
    """Verdict of the admissibility inequality at an anchor radius r0.

    ``worst_margin`` is the minimum over the scan of h(r) - omega(r)/omega(r0);
    the check passes when it is >= -tolerance.  On failure
    ``violation_witness`` holds a radius where the inequality breaks.
    """

    r0: float
    passed: bool
    worst_margin: float
    violation_witness: Optional[float]


def _check_example_params(r0: float, alpha: float) -> None:
    if not R0_MIN - 1e-12 <= r0 < 1.0:
        raise ParameterDomainError(
            f"example weights need r0 in [1/sqrt(2), 1), got {r0}")
    if alpha < 1.0:
        raise ParameterDomainError(f"example weights need alpha >= 1, got {alpha}")


def builtin_weight(kind: str, **params) -> Weight:
    """Construct one of the built-in weights.

    Kinds: ``standard`` (1 - r^2), ``constant`` (identically 1),
    ``example2`` (1 left of r0, ((1-r)/(1-r0))^alpha right of it) and
    ``example3`` ((1 - |(r-r0)/(1-r0 r)|)^alpha).  The example weights
    require r0 in [1/sqrt(2), 1) and alpha >= 1.
    """
    if kind == "standard":
        if params:
            raise ParameterDomainError("standard weight takes no parameters")
        return Weight(name="standard", fn=lambda r: 1.0 - r * r, limit_at_one=0.0)
    if kind == "constant":
        if params:
            raise ParameterDomainError("constant weight takes no parameters")
        return Weight(name="constant", fn=lambda r: np.ones_like(np.asarray(r, float)),
                      limit_at_one=1.0)
    if kind == "example2":
        r0 = float(params.pop("r0"))
        alpha = float(params.pop("alpha", 1.0))
        if params:
            raise ParameterDomainError(f"unknown parameters {sorted(params)}")
        _check_example_params(r0, alpha)
        fn = lambda r: np.where(r <= r0, 1.0, ((1.0 - r) / (1.0 - r0)) ** alpha)
        return Weight(name="example2", fn=fn, params={"r0": r0, "alpha": alpha},
                      limit_at_one=0.0)
    if kind == "example3":
        r0 = float(params.pop("r0"))
        alpha = float(params.pop("alpha", 1.0))
        if params:
            raise ParameterDomainError(f"unknown parameters {sorted(params)}")
        _check_example_params(r0, alpha)
        fn = lambda r: (1.0 - np.abs((r - r0) / (1.0 - r0 * r))) ** alpha
        return Weight(name="example3", fn=fn, params={"r0": r0, "alpha": alpha},
                      limit_at_one=0.0)
    raise ParameterDomainError(f"unknown weight kind {kind!r}")


def weight_from_token(token: str) -> Weight:
    """Parse a CLI weight token.

    ``standard``, ``constant``, ``example2:r0=0.8,alpha=2``,
    ``example3:r0=0.75,alpha=1``.
    """
    kind, _, tail = token.partition(":")
    params = {}
    if tail:
        for item in tail.split(","):
            key, _, value = item.partition("=")
            if not _ or not key:
                raise ParameterDomainError(f"malformed weight parameter {item!r}")
            try:
                params[key.strip()] = float(value)
            except ValueError:
                raise ParameterDomainError(
                    f"weight parameter {key!r} needs a decimal literal, got {value!r}")
    return builtin_weight(kind.strip(), **params)


def _check_r0(r0: float) -> float:
    if not R0_MIN - 1e-12 <= r0 <= 1.0:
        raise ParameterDomainError(f"anchor r0 must lie in [1/sqrt(2), 1], got {r0}")
    return float(r0)


def criterion_bound(r, r0: float):
    """h(r) = min(2 - r/r0, (sqrt(2) r0 + r)/(sqrt(2) r + r0))."""
    r0 = _check_r0(r0)
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ParameterDomainError("criterion bound is evaluated on [0, 1)")
    w1 = 2.0 - arr / r0
    w2 = (SQRT2 * r0 + arr) / (SQRT2 * arr + r0)
    out = np.minimum(w1, w2)
    if arr.ndim == 0:
        return float(out)
    return out


def criterion_check(w: Weight, r0: float, grid: GridSpec | None = None,
                    tol: float = CRITERION_TOL) -> CriterionReport:
    """Scan h(r) - omega(r)/omega(r0) over [0, 1) and report the worst margin.

    The scan grid is refined by trisection around its minimum.  A zero
    weight value at the anchor raises ZeroDenominatorError; an infinite one
    is rejected as a parameter-domain error.
    """
    r0 = _check_r0(r0)
    grid = grid or CRITERION_GRID
    w0 = float(w(r0))
    if w0 == 0.0:
        raise ZeroDenominatorError(f"weight {w.name} vanishes at r0 = {r0}")
    if not np.isfinite(w0):
        raise ParameterDomainError(f"weight {w.name} is not finite at r0 = {r0}")

    def margin(r):
        return criterion_bound(r, r0) - w(r) / w0

    radii = grid.radii()
    values = np.asarray(margin(radii), dtype=float)
    i = int(np.argmin(values))
    worst_r, worst = float(radii[i]), float(values[i])
    if grid.refine:
        lo = float(radii[max(i - 1, 0)])
        hi = float(radii[min(i + 1, radii.size - 1)])
        if hi > lo:
            xr, mr = trisect_min(margin, lo, hi, tol=grid.refine_tol)
            if mr < worst:
                worst_r, worst = xr, mr
    passed = worst >= -tol
    return CriterionReport(r0=r0, passed=passed, worst_margin=worst,
                           violation_witness=None if passed else worst_r)


def find_admissible_r0(w: Weight, r0_points: int = 100,
                       grid: GridSpec | None = None,
                       tol: float = CRITERION_TOL,
                       ) -> Optional[tuple[float, CriterionReport]]:
    """Search [1/sqrt(2), 1] for an anchor where the criterion passes.

    Scans a uniform anchor grid (plus the weight's own r0 parameter when it
    declares one: piecewise weights may be admissible at a single anchor
    that no uniform grid hits), takes the first passing candidate, and
    sharpens the pass/fail boundary against the preceding failing candidate
    by bisection.  Anchors where the weight vanishes count as failures.
    Returns (r0, report) or None when every candidate fails.
    """
    candidates = np.linspace(R0_MIN, 1.0, r0_points)
    own = w.params.get("r0")
    if own is not None and R0_MIN - 1e-12 <= own <= 1.0:
        candidates = np.union1d(candidates, [float(own)])

    def check(r0: float) -> Optional[CriterionReport]:
        try:
            report = criterion_check(w, r0, grid=grid, tol=tol)
        except ZeroDenominatorError:
            return None
        return report if report.passed else None

    previous_fail = None
    for r0 in candidates:
        report = check(float(r0))
        if report is None:
            previous_fail = float(r0)
            continue
        best = (float(r0), report)
        if previous_fail is None:
            return best
        lo, hi = previous_fail, float(r0)
        for _ in range(60):
            if hi - lo <= 1e-12:
                break
            mid = 0.5 * (lo + hi)
            mid_report = check(mid)
            if mid_report is None:
                lo = mid
            else:
                hi, best = mid, (mid, mid_report)
        return best
    return None


def h_profile(r0: float, n_points: int = 512, r_max: float = 1.0 - 1e-6,
              include_r0: bool = True) -> np.ndarray:
    """Tabulate (r, omega1, omega2, h) for plotting.

    Returns an (n, 4) array over a uniform grid on [0, r_max]; the anchor
    radius is inserted as an extra sample so the h(r0) = 1 corner is always
    present.  h is decreasing everywhere and convex left of r0.
    """
    r0 = _check_r0(r0)
    if n_points < 2:
        raise ParameterDomainError("profile needs at least 2 points")
    radii = np.linspace(0.0, r_max, n_points)
    if include_r0 and r0 <= r_max:
        radii = np.union1d(radii, [r0])
    w1 = 2.0 - radii / r0
    w2 = (SQRT2 * r0 + radii) / (SQRT2 * radii + r0)
    return np.column_stack([radii, w1, w2, np.minimum(w1, w2)])
