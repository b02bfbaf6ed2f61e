"""Exact network log-probability, both closed-form and sequential.

The closed form for a graph with n edges, V vertices, and degrees deg(v) is

    prod_{i=1}^{V-1} (theta + i*alpha)
    ----------------------------------- * prod_{deg(v) >= 2} (1-alpha)^{rising (deg(v)-1)}
      (theta + 1)^{rising (2n - 1)}

which is the literal product
alpha^V (theta/alpha)^{rising V} / theta^{rising 2n} * prod (1-alpha)^{rising (deg-1)}
with the shared leading factor theta cancelled. The cancelled form keeps
every factor strictly positive for all theta > -alpha, including
theta in (-alpha, 0] where the literal leading factor is nonpositive.

The value depends only on (n, V, degree multiset) and is independent of the
order in which edges arrive; permutation replays are the cheapest way to
check that, and enumeration of all small graphs checks normalization.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import MalformedGraphError
from .generator import GeneratorState, Params
from .graph import Multigraph
from .numerics import log_rising

__all__ = [
    "log_prob_closed",
    "log_prob_sequential",
    "enumerate_graphs",
    "log_prob_from_stats",
]

ENUMERATION_MAX_EDGES = 3


def log_prob_from_stats(
    n_edges: int,
    n_vertices: int,
    degree_counts: dict[int, int],
    params: Params,
) -> float:
    """Closed-form log-probability from sufficient statistics.

    ``degree_counts`` maps degree k to the number of vertices with that
    degree. Shared with the MLE objective so the fitted surface and the
    reported likelihood are the same code path.
    """
    if n_edges < 1 or n_vertices < 1:
        raise ValueError("need n_edges >= 1 and n_vertices >= 1")
    alpha, theta = params.alpha, params.theta
    vertex_term = 0.0
    if n_vertices > 1:
        vertex_term = float(np.log(theta + alpha * np.arange(1, n_vertices)).sum())
    denom_term = log_rising(theta + 1.0, 2 * n_edges - 1)
    degree_term = 0.0
    for k, count in degree_counts.items():
        if k >= 2:
            degree_term += count * log_rising(1.0 - alpha, k - 1)
    return vertex_term - denom_term + degree_term


def log_prob_closed(g: Multigraph, params: Params) -> float:
    """Closed-form ln pr(G_n = g) for a canonical multigraph."""
    if g.num_edges < 1:
        raise MalformedGraphError("graph must have at least one edge")
    if not g.is_canonical():
        raise MalformedGraphError("graph labels must follow first-appearance order")
    hist = g.degree_histogram()
    return log_prob_from_stats(g.num_edges, g.num_vertices, dict(hist.counts), params)


def log_prob_sequential(g: Multigraph, params: Params) -> float:
    """ln pr(G_n = g) by replaying the 2n endpoint choices in arrival order.

    Permuted-but-consistent labelings are re-canonicalized defensively
    before replay rather than rejected.
    """
    if g.num_edges < 1:
        raise MalformedGraphError("graph must have at least one edge")
    if not g.is_canonical():
        g = g.canonicalize()
    state = GeneratorState(params, seed=None)
    total = 0.0
    for u, v in g.edges:
        total += state.endpoint_logprob(u)
        state.apply(u)
        total += state.endpoint_logprob(v)
        state.apply(v)
    return total


def enumerate_graphs(n: int, params: Params) -> list[tuple[Multigraph, float]]:
    """All distinct canonical n-edge multigraphs with their log-probabilities.

    Walks every sequence of 2n endpoint choices; each sequence lands on a
    distinct canonical graph, and graphs are deduplicated by value as a
    guard. Exact probabilities over the full list sum to 1. Capped at n <= 3
    because the choice tree grows factorially.
    """
    if not 1 <= n <= ENUMERATION_MAX_EDGES:
        raise ValueError(f"n must be in 1..{ENUMERATION_MAX_EDGES}, got {n}")

    out: dict[tuple[tuple[int, int], ...], tuple[Multigraph, float]] = {}
    choices: list[int] = []

    def walk(num_vertices: int) -> None:
        if len(choices) == 2 * n:
            edges = tuple(
                (choices[2 * t], choices[2 * t + 1]) for t in range(n)
            )
            if edges not in out:
                g = Multigraph.from_edges(edges, directed=False)
                out[edges] = (g, log_prob_closed(g, params))
            return
        for choice in range(1, num_vertices + 2):
            choices.append(choice)
            walk(num_vertices + 1 if choice == num_vertices + 1 else num_vertices)
            choices.pop()

    walk(0)
    return list(out.values())
