"""Grid plans and 1-D search primitives.

Every supremum in the library is computed the same way: a uniform grid scan
followed by local polish of the best bracket.  Maximization polish uses
golden-section search, minimization polish (for worst criterion margins)
uses plain trisection.  Root-finding is bracketed bisection with an explicit
sign-change check, converging on the residual rather than the bracket width.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Callable

import numpy as np

from .errors import ConvergenceError, NoSignChangeError

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan for radius/angle/parameter scans.

    ``r_points`` uniform samples cover ``[r_min, r_max]`` and ``theta_points``
    cover one period of the circle.  When ``refine`` is set, the best bracket
    of a scan is polished to ``refine_tol`` (absolute, in the scan variable).
    """

    r_points: int = 2048
    theta_points: int = 4096
    r_min: float = 0.0
    r_max: float = 1.0 - 1e-6
    refine: bool = True
    refine_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.r_points < 2 or self.theta_points < 1:
            raise ValueError("grid needs at least 2 radial and 1 angular point")
        if not 0.0 <= self.r_min < self.r_max:
            raise ValueError("grid requires 0 <= r_min < r_max")
        if self.refine_tol <= 0.0:
            raise ValueError("refine_tol must be positive")

    def radii(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.r_points)

    def angles(self) -> np.ndarray:
        return np.linspace(0.0, 2.0 * np.pi, self.theta_points, endpoint=False)

    @property
    def r_step(self) -> float:
        return (self.r_max - self.r_min) / (self.r_points - 1)

    def to_dict(self) -> dict:
        return asdict(self)


def _feval(f: Callable, x: float) -> float:
    return float(np.asarray(f(x)))


def golden_max(f: Callable, lo: float, hi: float, tol: float = 1e-12,
               max_iter: int = 200) -> tuple[float, float]:
    """Maximize a scalar function on [lo, hi] by golden-section search.

    Assumes unimodality on the bracket.  Ties keep the left subinterval, so
    plateaus drift toward the smaller argument.  Returns (argmax, max).
    """
    a, b = float(lo), float(hi)
    if not b > a:
        return a, _feval(f, a)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = _feval(f, c), _feval(f, d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = _feval(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = _feval(f, d)
    x = 0.5 * (a + b)
    fx = _feval(f, x)
    # never report worse than an interior probe
    for xe, fe in ((c, fc), (d, fd)):
        if fe > fx:
            x, fx = xe, fe
    return x, fx


def trisect_min(f: Callable, lo: float, hi: float, tol: float = 1e-12,
                max_iter: int = 300) -> tuple[float, float]:
    """Minimize a scalar function on [lo, hi] by trisection.

    Returns the best (argmin, min) among all probed points.
    """
    a, b = float(lo), float(hi)
    best_x, best_f = a, _feval(f, a)
    fb = _feval(f, b)
    if fb < best_f:
        best_x, best_f = b, fb
    for _ in range(max_iter):
        if b - a <= tol:
            break
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        f1, f2 = _feval(f, m1), _feval(f, m2)
        if f1 < best_f:
            best_x, best_f = m1, f1
        if f2 < best_f:
            best_x, best_f = m2, f2
        if f1 <= f2:
            b = m2
        else:
            a = m1
    return best_x, best_f


def bisect_root(g: Callable, lo: float, hi: float, abs_tol: float = 1e-10,
                max_iter: int = 200) -> float:
    """Find a root of g on [lo, hi] by bisection.

    The bracket must carry a sign change (NoSignChangeError otherwise).
    Convergence criterion is |g(x)| <= abs_tol; ConvergenceError is raised
    if the bracket collapses to machine width before the residual drops.
    """
    a, b = float(lo), float(hi)
    ga, gb = _feval(g, a), _feval(g, b)
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if np.sign(ga) == np.sign(gb):
        raise NoSignChangeError(
            f"no sign change on [{a}, {b}]: g(lo)={ga:.6g}, g(hi)={gb:.6g}")
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        gm = _feval(g, mid)
        if abs(gm) <= abs_tol:
            return mid
        if np.sign(gm) == np.sign(ga):
            a, ga = mid, gm
        else:
            b, gb = mid, gm
        if b - a <= np.finfo(float).eps * max(abs(a), abs(b)):
            if abs(gm) <= abs_tol:
                return mid
            raise ConvergenceError(
                f"bracket exhausted at {mid} with residual {gm:.3g} > {abs_tol:.3g}")
    raise ConvergenceError(f"no convergence to |g| <= {abs_tol:.3g} in {max_iter} iterations")


def grid_golden_max(f: Callable, lo: float, hi: float, n_points: int,
                    refine: bool = True, tol: float = 1e-12) -> tuple[float, float]:
    """Maximize on [lo, hi]: uniform n-point scan, then golden polish.

    ``f`` must accept numpy arrays.  Ties on the grid resolve to the smallest
    argument; the polished value is used only when it strictly improves on
    the grid, which keeps plateau witnesses deterministic.
    """
    xs = np.linspace(lo, hi, n_points)
    vals = np.asarray(f(xs), dtype=float)
    i = int(np.argmax(vals))
    best_x, best_f = float(xs[i]), float(vals[i])
    if refine and n_points >= 2:
        a = float(xs[max(i - 1, 0)])
        b = float(xs[min(i + 1, n_points - 1)])
        if b > a:
            xr, fr = golden_max(f, a, b, tol=tol)
            if fr > best_f:
                best_x, best_f = xr, fr
    return best_x, best_f
