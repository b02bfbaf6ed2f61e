"""Special functions and generic solvers.

Log-gamma, log ascending factorials, bracketed monotone root finding, and a
two-dimensional Nelder-Mead minimizer. Everything here is a pure function;
the statistical meaning lives in the callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BracketingError, NumericError

__all__ = [
    "RealInterval",
    "MinimizeResult",
    "log_gamma",
    "log_rising",
    "solve_root",
    "minimize_2d",
]

# Below this j, sum logs factor by factor. Log-gamma differences at small x
# lose digits to cancellation when only a few factors are involved.
RISING_DIRECT_MAX = 32


@dataclass(frozen=True)
class RealInterval:
    """A finite open bracket lo < hi."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"interval requires lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class MinimizeResult:
    """Outcome of a simplex minimization.

    ``converged`` is False when the iteration cap was reached; ``point`` then
    holds the best vertex found so far.
    """

    point: tuple[float, float]
    value: float
    iterations: int
    converged: bool


def log_gamma(x: float) -> float:
    """Natural log of the gamma function, x > 0 only."""
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise ValueError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


def log_rising(x: float, j: int) -> float:
    """ln of the ascending factorial x(x+1)...(x+j-1).

    Direct log-sum for small j, log-gamma difference for large j; the two
    branches agree to ~1e-10 at the crossover.
    """
    if not (math.isfinite(x) and x > 0):
        raise ValueError(f"log_rising requires finite x > 0, got {x!r}")
    if j < 0:
        raise ValueError(f"log_rising requires j >= 0, got {j}")
    if j == 0:
        return 0.0
    if j <= RISING_DIRECT_MAX:
        return math.fsum(math.log(x + i) for i in range(j))
    return math.lgamma(x + j) - math.lgamma(x)


def solve_root(
    f: Callable[[float], float],
    bracket: RealInterval | tuple[float, float],
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float:
    """Find the root of a continuous monotone f inside ``bracket`` by bisection.

    ``tol`` is relative: iteration stops once the bracket width drops below
    tol * max(1, |lo|, |hi|). Bisection halves the bracket every step, so 200
    iterations are always enough for float64.
    """
    if not isinstance(bracket, RealInterval):
        bracket = RealInterval(*bracket)
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo), f(hi)
    for v in (flo, fhi):
        if not math.isfinite(v):
            raise NumericError(f"f evaluated to a non-finite value {v} on the bracket")
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketingError(f"no sign change on [{lo}, {hi}]: f(lo)={flo}, f(hi)={fhi}")

    for _ in range(max_iter):
        if hi - lo <= tol * max(1.0, abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket exhausted at float resolution
            break
        fmid = f(mid)
        if not math.isfinite(fmid):
            raise NumericError(f"f({mid}) is non-finite")
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return 0.5 * (lo + hi)


def _simplex_diameter(pts: Sequence[tuple[float, float]]) -> float:
    best = 0.0
    for i in range(len(pts)):
        for k in range(i + 1, len(pts)):
            d = math.hypot(pts[i][0] - pts[k][0], pts[i][1] - pts[k][1])
            if d > best:
                best = d
    return best


def minimize_2d(
    f: Callable[[float, float], float],
    start: tuple[float, float],
    tol: float = 1e-8,
    max_iter: int = 10_000,
    step: float = 0.5,
) -> MinimizeResult:
    """Minimize f over the plane with a Nelder-Mead simplex.

    Standard reflection/expansion/contraction/shrink coefficients
    (1, 2, 0.5, 0.5). Convergence means simplex diameter <= tol; after the
    first convergence the search restarts once from the best point with a
    tenth of the initial step. Bounded domains are the caller's business via
    reparametrization. Non-finite f values are treated as +inf.
    """
    x0, y0 = float(start[0]), float(start[1])
    f0 = f(x0, y0)
    if not math.isfinite(f0):
        raise ValueError(f"f must be finite at the start point, got {f0}")

    def safe_f(x: float, y: float) -> float:
        v = f(x, y)
        return v if (isinstance(v, (int, float)) and math.isfinite(v)) else math.inf

    refl, expa, contr, shrink = 1.0, 2.0, 0.5, 0.5
    iterations = 0

    def run(cx: float, cy: float, h: float) -> tuple[tuple[float, float], float, bool]:
        nonlocal iterations
        simplex = [
            ((cx, cy), safe_f(cx, cy)),
            ((cx + h, cy), safe_f(cx + h, cy)),
            ((cx, cy + h), safe_f(cx, cy + h)),
        ]
        while iterations < max_iter:
            iterations += 1
            simplex.sort(key=lambda pv: pv[1])
            if _simplex_diameter([p for p, _ in simplex]) <= tol:
                return simplex[0][0], simplex[0][1], True
            (bx, by), fb = simplex[0]
            (wx, wy), fw = simplex[2]
            fs = simplex[1][1]
            mx = 0.5 * (bx + simplex[1][0][0])
            my = 0.5 * (by + simplex[1][0][1])

            rx, ry = mx + refl * (mx - wx), my + refl * (my - wy)
            fr = safe_f(rx, ry)
            if fb <= fr < fs:
                simplex[2] = ((rx, ry), fr)
                continue
            if fr < fb:
                ex, ey = mx + expa * (mx - wx), my + expa * (my - wy)
                fe = safe_f(ex, ey)
                simplex[2] = ((ex, ey), fe) if fe < fr else ((rx, ry), fr)
                continue
            cxp, cyp = mx + contr * (wx - mx), my + contr * (wy - my)
            fc = safe_f(cxp, cyp)
            if fc < fw:
                simplex[2] = ((cxp, cyp), fc)
                continue
            # Shrink toward the best vertex.
            new = [simplex[0]]
            for (px, py), _ in simplex[1:]:
                sx, sy = bx + shrink * (px - bx), by + shrink * (py - by)
                new.append(((sx, sy), safe_f(sx, sy)))
            simplex = new
        simplex.sort(key=lambda pv: pv[1])
        return simplex[0][0], simplex[0][1], False

    (px, py), fv, ok = run(x0, y0, step)
    if ok:
        (px, py), fv, ok = run(px, py, step * 0.1)
    return MinimizeResult(point=(px, py), value=fv, iterations=iterations, converged=ok)
