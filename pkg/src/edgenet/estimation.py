"""Parameter estimation and the limiting degree law.

Two routes to the parameters: the moment method (tail exponent gamma_hat
gives alpha_hat = gamma_hat - 1, then theta_hat makes the expected vertex
count match the observed one) and full maximum likelihood over the exact
closed-form graph probability. Exponents live in (1, 2); that band is the
model's, and estimates outside it are rejected rather than clamped.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import (
    DivergentEstimateError,
    ExponentOutOfRangeError,
    InsufficientDataError,
    InvalidInputError,
    UnattainableTargetError,
)
from .generator import Params
from .graph import DegreeHistogram, Multigraph
from .likelihood import log_prob_from_stats
from .numerics import RealInterval, log_gamma, log_rising, minimize_2d, solve_root

__all__ = [
    "FitResult",
    "limit_pmf",
    "limit_pmf_asymptotic",
    "estimate_gamma_ccdf",
    "estimate_gamma_mle",
    "expected_vertices",
    "solve_theta",
    "fit_moment",
    "fit_mle",
]

THETA_BRACKET_CAP = 1e8
KMIN_AUTO_MAX = 100


@dataclass(frozen=True)
class FitResult:
    """Estimated parameters plus method diagnostics.

    ``gamma_hat`` always equals ``alpha_hat + 1`` (the model's exponent
    relation); for the moment method that is the direction the estimate
    flowed, for MLE it is derived.
    """

    alpha_hat: float
    theta_hat: float
    gamma_hat: float
    method: str
    n_edges: int
    n_vertices: int
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict[str, Any]:
        """Serializable view with a fixed key order."""
        return {
            "alpha_hat": self.alpha_hat,
            "theta_hat": self.theta_hat,
            "gamma_hat": self.gamma_hat,
            "method": self.method,
            "n_edges": self.n_edges,
            "n_vertices": self.n_vertices,
            "log_likelihood": self.diagnostics.get("log_likelihood"),
            "kmin": self.diagnostics.get("kmin"),
            "converged": bool(self.diagnostics.get("converged", True)),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def limit_pmf(k: int, alpha: float) -> float:
    """Exact limiting degree mass: alpha * (1-alpha)^{rising (k-1)} / k!.

    This is the unique fixed point of the degree dynamics; its large-k
    behavior is the power law alpha * k^-(alpha+1) / Gamma(1-alpha), see
    ``limit_pmf_asymptotic``.
    """
    _check_alpha(alpha)
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    return math.exp(
        math.log(alpha) + log_rising(1.0 - alpha, k - 1) - log_gamma(k + 1.0)
    )


def limit_pmf_asymptotic(k: int, alpha: float) -> float:
    """Large-k power-law approximant of ``limit_pmf``."""
    _check_alpha(alpha)
    if k < 1:
        raise ValueError(f"degree must be >= 1, got {k}")
    return alpha * k ** (-(alpha + 1.0)) / math.exp(log_gamma(1.0 - alpha))


def estimate_gamma_ccdf(hist: DegreeHistogram, kmin: int = 1) -> float:
    """Exponent from the log-log slope of the empirical CCDF tail.

    Least-squares slope s of ln CCDF(k) against ln k over support degrees
    k >= kmin; the CCDF of a gamma-power law decays with exponent gamma - 1,
    so gamma_hat = 1 - s.
    """
    if kmin < 1:
        raise ValueError(f"kmin must be >= 1, got {kmin}")
    points = [(k, c) for k, c in hist.ccdf() if k >= kmin and c > 0]
    if len(points) < 2:
        raise InsufficientDataError(
            f"need >= 2 support degrees at kmin={kmin}, found {len(points)}"
        )
    log_k = np.log([k for k, _ in points])
    log_c = np.log([c for _, c in points])
    slope = np.polyfit(log_k, log_c, 1)[0]
    return 1.0 - float(slope)


def estimate_gamma_mle(hist: DegreeHistogram, kmin: int = 1) -> float:
    """Tail-exponent maximum-likelihood estimate (continuous approximation).

    gamma_hat = 1 + m / sum over degrees k >= kmin of ln(k / (kmin - 0.5)),
    with m the number of contributing vertices.
    """
    if kmin < 1:
        raise ValueError(f"kmin must be >= 1, got {kmin}")
    m = 0
    log_sum = 0.0
    for k, count in hist.counts.items():
        if k >= kmin:
            m += count
            log_sum += count * math.log(k / (kmin - 0.5))
    if m < 1:
        raise InsufficientDataError(f"no vertices with degree >= kmin={kmin}")
    if all(k == kmin for k in hist.counts if k >= kmin):
        raise DivergentEstimateError(
            f"all contributing degrees equal kmin={kmin}; no tail information"
        )
    return 1.0 + m / log_sum


def expected_vertices(params: Params, n: int) -> float:
    """Asymptotic expected vertex count after n edges.

    Gamma(theta+1) / (alpha * Gamma(theta+alpha)) * (2n)^alpha, evaluated in
    log space.
    """
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    a, t = params.alpha, params.theta
    return math.exp(
        log_gamma(t + 1.0) - math.log(a) - log_gamma(t + a) + a * math.log(2.0 * n)
    )


def solve_theta(alpha: float, n: int, n_vertices_observed: float) -> float:
    """The unique theta > -alpha whose expected vertex count matches the data.

    The expected count is strictly increasing in theta, so a bracket is
    expanded upward until it straddles the target and then bisected.
    """
    _check_alpha(alpha)
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if not 1 <= n_vertices_observed <= 2 * n:
        raise ValueError(
            f"observed vertex count must lie in [1, 2n], got {n_vertices_observed}"
        )

    def gap(theta: float) -> float:
        return expected_vertices(Params(alpha, theta), n) - n_vertices_observed

    lo = -alpha + 1e-12
    hi = 1.0
    while gap(hi) < 0:
        hi *= 2.0
        if hi > THETA_BRACKET_CAP:
            raise UnattainableTargetError(
                f"no theta <= {THETA_BRACKET_CAP:.0e} reaches "
                f"{n_vertices_observed} vertices at alpha={alpha}, n={n}"
            )
    return solve_root(gap, RealInterval(lo, hi), tol=1e-12)


def _ks_distance(hist: DegreeHistogram, kmin: int, gamma: float) -> float:
    """KS distance between the empirical tail CCDF and the fitted power law."""
    tail = [(k, c) for k, c in hist.counts.items() if k >= kmin]
    m = sum(c for _, c in tail)
    worst = 0.0
    remaining = m
    for k, count in sorted(tail):
        emp = remaining / m
        model = ((k - 0.5) / (kmin - 0.5)) ** (1.0 - gamma)
        worst = max(worst, abs(emp - model))
        remaining -= count
    return worst


def _select_kmin(hist: DegreeHistogram, kmin_max: int = KMIN_AUTO_MAX) -> tuple[int, float]:
    """Pick kmin minimizing the KS distance of the fitted tail; returns (kmin, gamma)."""
    best: tuple[float, int, float] | None = None
    for kmin in range(1, min(kmin_max, hist.max_degree) + 1):
        try:
            gamma = estimate_gamma_mle(hist, kmin)
        except (InsufficientDataError, DivergentEstimateError):
            continue
        ks = _ks_distance(hist, kmin, gamma)
        if best is None or ks < best[0]:
            best = (ks, kmin, gamma)
    if best is None:
        raise ExponentOutOfRangeError("no kmin yields a usable tail estimate")
    return best[1], best[2]


def fit_moment(
    g: Multigraph,
    kmin: int | str = "auto",
    estimator: str = "mle",
) -> FitResult:
    """Moment-method fit: alpha from the tail exponent, theta from the
    vertex-growth relation.

    ``kmin="auto"`` scans 1..100 for the KS-best cutoff. ``estimator``
    selects the tail-exponent estimator: "mle" (default) or "ccdf".
    """
    if estimator not in ("mle", "ccdf"):
        raise ValueError(f"estimator must be 'mle' or 'ccdf', got {estimator!r}")
    if g.num_edges < 1:
        raise ValueError("graph must have at least one edge")
    hist = g.degree_histogram()

    if kmin == "auto":
        kmin_val, gamma = _select_kmin(hist)
        if estimator == "ccdf":
            gamma = estimate_gamma_ccdf(hist, kmin_val)
    else:
        kmin_val = int(kmin)
        if estimator == "mle":
            gamma = estimate_gamma_mle(hist, kmin_val)
        else:
            gamma = estimate_gamma_ccdf(hist, kmin_val)

    if not 1.0 < gamma < 2.0:
        raise ExponentOutOfRangeError(
            f"gamma_hat={gamma:.4f} outside the model band (1, 2)"
        )
    alpha_hat = gamma - 1.0
    theta_hat = solve_theta(alpha_hat, g.num_edges, g.num_vertices)
    return FitResult(
        alpha_hat=alpha_hat,
        theta_hat=theta_hat,
        gamma_hat=gamma,
        method="moment",
        n_edges=g.num_edges,
        n_vertices=g.num_vertices,
        diagnostics={
            "kmin": kmin_val,
            "estimator": estimator,
            "converged": True,
        },
    )


def _logistic(u: float) -> float:
    if u >= 0:
        return 1.0 / (1.0 + math.exp(-u))
    e = math.exp(u)
    return e / (1.0 + e)


def fit_mle(g: Multigraph, projected: bool = False) -> FitResult:
    """Maximum-likelihood fit of (alpha, theta) on the exact graph probability.

    The search runs unconstrained over u = logit(alpha), w = ln(theta+alpha),
    which maps the plane onto the whole parameter domain. Started from the
    moment estimate when that succeeds, else from (0.5, 1). Multiplicities
    must be intact: callers holding a projected simple graph must say so via
    ``projected=True``, which is rejected because the closed form does not
    apply to projections.
    """
    if projected:
        raise InvalidInputError(
            "maximum likelihood needs the multigraph; the projected simple "
            "graph does not follow the closed-form law"
        )
    if g.num_edges < 1:
        raise ValueError("graph must have at least one edge")
    hist = g.degree_histogram()
    counts = dict(hist.counts)
    n, v = g.num_edges, g.num_vertices

    try:
        start_fit = fit_moment(g)
        start_params = (start_fit.alpha_hat, start_fit.theta_hat)
    except Exception:
        start_params = (0.5, 1.0)

    def objective(u: float, w: float) -> float:
        if abs(u) > 60.0 or abs(w) > 60.0:
            return math.inf
        alpha = _logistic(u)
        theta = math.exp(w) - alpha
        return -log_prob_from_stats(n, v, counts, Params(alpha, theta))

    a0, t0 = start_params
    start_uw = (math.log(a0 / (1.0 - a0)), math.log(t0 + a0))
    result = minimize_2d(objective, start_uw, tol=1e-9)
    u_hat, w_hat = result.point
    alpha_hat = _logistic(u_hat)
    theta_hat = math.exp(w_hat) - alpha_hat
    return FitResult(
        alpha_hat=alpha_hat,
        theta_hat=theta_hat,
        gamma_hat=alpha_hat + 1.0,
        method="mle",
        n_edges=n,
        n_vertices=v,
        diagnostics={
            "log_likelihood": -result.value,
            "iterations": result.iterations,
            "converged": result.converged,
            "start": start_params,
        },
    )


def _check_alpha(alpha: float) -> None:
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and 0.0 < alpha < 1.0):
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
