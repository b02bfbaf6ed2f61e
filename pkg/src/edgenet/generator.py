"""Sequential edge sampler.

One edge arrives per step; each endpoint is an existing vertex i with weight
degree(i) - alpha or the next unseen vertex with weight theta + alpha * N,
where N is the current vertex count. Degrees update per endpoint, not per
edge: the first endpoint's increment is visible when the second endpoint is
drawn. That convention is what makes the sequential product match the
closed-form graph probability (see the likelihood module).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Multigraph

__all__ = ["Params", "GeneratorState", "generate", "RNG_NAME"]

# Endpoint draws consume one uniform each, pulled from a refillable block.
RNG_NAME = "pcg64"
_BUFFER_SIZE = 8192


@dataclass(frozen=True)
class Params:
    """Model parameters: 0 < alpha < 1 and theta > -alpha."""

    alpha: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 1.0):
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not (math.isfinite(self.theta) and self.theta > -self.alpha):
            raise ValueError(f"theta must exceed -alpha, got theta={self.theta}")


class GeneratorState:
    """Mutable sampling state for the sequential model.

    Tracks per-vertex degrees, the running total degree, and a repeat list in
    which vertex v appears exactly degree(v) - 1 times. Sampling an existing
    vertex with weight degree - alpha splits into: a uniform pick from the
    repeat list (mass total_degree - N) or a uniform pick among all vertices
    (mass N * (1 - alpha)), which keeps every draw O(1) amortized.

    Single-threaded by contract; the sequential dependence is inherent.
    """

    __slots__ = ("params", "degrees", "repeat_list", "total_degree", "num_vertices",
                 "_rng", "_buf", "_pos")

    def __init__(self, params: Params, seed: int | None = 0):
        self.params = params
        self.degrees: list[int] = []
        self.repeat_list: list[int] = []
        self.total_degree = 0
        self.num_vertices = 0
        self._rng = np.random.default_rng(seed)
        self._buf = None
        self._pos = 0

    def _next_uniform(self) -> float:
        buf = self._buf
        if buf is None or self._pos >= _BUFFER_SIZE:
            buf = self._buf = self._rng.random(_BUFFER_SIZE)
            self._pos = 0
        u = buf[self._pos]
        self._pos += 1
        return u

    def sample_endpoint(self) -> int:
        """Draw one endpoint, update the state, and return the vertex id.

        With no vertices yet the new vertex is the only positive-weight
        option (theta alone may be <= 0), so it is chosen outright.
        """
        nv = self.num_vertices
        if nv == 0:
            choice = 1
        else:
            alpha = self.params.alpha
            u = self._next_uniform() * (self.total_degree + self.params.theta)
            repeat_mass = self.total_degree - nv
            if u < repeat_mass:
                # u is uniform on [0, repeat_mass) here and repeat_mass is an
                # integer, so int(u) is a uniform index into the repeat list.
                choice = self.repeat_list[int(u)]
            else:
                u -= repeat_mass
                uniform_mass = nv * (1.0 - alpha)
                if u < uniform_mass:
                    choice = int(u / (1.0 - alpha)) + 1
                    if choice > nv:  # guard the float boundary
                        choice = nv
                else:
                    choice = nv + 1
        self.apply(choice)
        return choice

    def apply(self, choice: int) -> None:
        """Record a known endpoint choice (used by sampling and by replay)."""
        nv = self.num_vertices
        if choice == nv + 1:
            self.num_vertices = nv + 1
            self.degrees.append(1)
        elif 1 <= choice <= nv:
            self.degrees[choice - 1] += 1
            self.repeat_list.append(choice)
        else:
            raise ValueError(f"endpoint {choice} out of range 1..{nv + 1}")
        self.total_degree += 1

    def endpoint_logprob(self, choice: int) -> float:
        """ln of the probability the next draw would pick ``choice``. Pure."""
        nv = self.num_vertices
        if nv == 0:
            if choice != 1:
                raise ValueError(f"endpoint {choice} out of range; only 1 is reachable")
            return 0.0
        denom = self.total_degree + self.params.theta
        if 1 <= choice <= nv:
            return math.log((self.degrees[choice - 1] - self.params.alpha) / denom)
        if choice == nv + 1:
            return math.log((self.params.theta + self.params.alpha * nv) / denom)
        raise ValueError(f"endpoint {choice} out of range 1..{nv + 1}")


def generate(params: Params, n: int, seed: int | None = 0, directed: bool = False) -> Multigraph:
    """Generate a canonical multigraph with exactly n edges.

    Edge t is the pair of two successive endpoint draws; identical
    (params, n, seed, directed) inputs yield identical graphs. In the
    directed case edges point from the first endpoint to the second.
    """
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    state = GeneratorState(params, seed=seed)
    draw = state.sample_endpoint
    edges = [(draw(), draw()) for _ in range(n)]
    return Multigraph.from_edges(edges, directed=directed)
