"""Multigraph data model, degree accounting, projection, and edge-list I/O.

Vertices are consecutive 1-based integers. In canonical form they are
numbered by first appearance when the edge list is read in order, first
endpoint before second. A self-loop contributes 2 to its vertex's degree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EmptyInputError, ParseError

__all__ = [
    "Multigraph",
    "DegreeHistogram",
    "parse_edge_list",
    "write_edge_list",
]

COMMENT_CHARS = ("#", "%")


@dataclass(frozen=True)
class Multigraph:
    """An ordered list of edges over vertices 1..num_vertices.

    Self-loops and parallel edges are allowed. Every vertex id in range must
    appear in at least one edge. Edges keep the arrival order of their
    endpoints even in the undirected case; ``directed`` only changes how
    projection and downstream consumers interpret the pairs. Instances are
    immutable; ``labels`` optionally maps vertex id i to its original string
    label (index i-1) after parsing and is ignored by comparisons.
    """

    edges: tuple[tuple[int, int], ...]
    directed: bool
    num_vertices: int
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u < 1 or v < 1:
                raise ValueError(f"vertex ids must be >= 1, got edge ({u}, {v})")
            seen.add(u)
            seen.add(v)
        if len(seen) != self.num_vertices or (seen and max(seen) != self.num_vertices):
            raise ValueError(
                f"vertex ids must be exactly 1..{self.num_vertices} with no gaps"
            )
        if self.labels is not None and len(self.labels) != self.num_vertices:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        directed: bool = False,
        labels: tuple[str, ...] | None = None,
    ) -> "Multigraph":
        edge_tuple = tuple((int(u), int(v)) for u, v in edges)
        n_vertices = max((w for e in edge_tuple for w in e), default=0)
        return cls(edges=edge_tuple, directed=directed, num_vertices=n_vertices, labels=labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> dict[int, int]:
        """Map vertex id -> degree, counting each edge-endpoint slot once."""
        degrees: Counter[int] = Counter()
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return dict(degrees)

    def degree_histogram(self) -> "DegreeHistogram":
        counts = Counter(self.degree_sequence().values())
        return DegreeHistogram(
            counts=dict(counts),
            total_vertices=self.num_vertices,
            total_edges=self.num_edges,
        )

    def is_canonical(self) -> bool:
        """True when vertex ids follow first-appearance order along the edges."""
        seen = 0
        for u, v in self.edges:
            for w in (u, v):
                if w > seen:
                    if w != seen + 1:
                        return False
                    seen = w
        return True

    def canonicalize(self) -> "Multigraph":
        """Relabel vertices by first appearance; edge order is unchanged."""
        if self.is_canonical():
            return self
        mapping: dict[int, int] = {}
        new_edges = []
        for u, v in self.edges:
            for w in (u, v):
                if w not in mapping:
                    mapping[w] = len(mapping) + 1
            new_edges.append((mapping[u], mapping[v]))
        new_labels = None
        if self.labels is not None:
            inverse = {new: old for old, new in mapping.items()}
            new_labels = tuple(self.labels[inverse[i] - 1] for i in range(1, self.num_vertices + 1))
        return Multigraph(
            edges=tuple(new_edges),
            directed=self.directed,
            num_vertices=self.num_vertices,
            labels=new_labels,
        )

    def project_simple(self) -> "Multigraph":
        """Collapse parallel edges, keeping each distinct edge's first occurrence.

        Undirected graphs treat (u, v) and (v, u) as the same edge; directed
        graphs keep antiparallel edges distinct. The vertex set is unchanged.
        """
        seen: set[tuple[int, int]] = set()
        kept = []
        for u, v in self.edges:
            key = (u, v) if self.directed or u <= v else (v, u)
            if key not in seen:
                seen.add(key)
                kept.append((u, v))
        return Multigraph(
            edges=tuple(kept),
            directed=self.directed,
            num_vertices=self.num_vertices,
            labels=self.labels,
        )


@dataclass(frozen=True)
class DegreeHistogram:
    """Vertex counts by degree, with derived proportions and CCDF."""

    counts: Mapping[int, int]
    total_vertices: int
    total_edges: int

    def __post_init__(self) -> None:
        if any(k < 1 for k in self.counts):
            raise ValueError("degrees must be >= 1")
        if sum(self.counts.values()) != self.total_vertices:
            raise ValueError("counts must sum to total_vertices")
        if sum(k * c for k, c in self.counts.items()) != 2 * self.total_edges:
            raise ValueError("sum of k * counts[k] must equal 2 * total_edges")

    def proportions(self) -> dict[int, float]:
        """Empirical degree proportions: share of vertices at each degree."""
        n = self.total_vertices
        return {k: c / n for k, c in sorted(self.counts.items())}

    def ccdf(self) -> list[tuple[int, float]]:
        """Points (k, Pr(degree >= k)) at each degree in the support, ascending."""
        ks = sorted(self.counts)
        n = self.total_vertices
        out = []
        remaining = n
        for k in ks:
            out.append((k, remaining / n))
            remaining -= self.counts[k]
        return out

    @property
    def max_degree(self) -> int:
        return max(self.counts) if self.counts else 0


def parse_edge_list(text: str | Iterable[str], directed: bool = False) -> Multigraph:
    """Parse a whitespace-separated edge list into a canonical Multigraph.

    Lines beginning with '#' or '%' and blank lines are skipped. Each
    remaining line must hold exactly two vertex labels (arbitrary strings);
    labels are remapped to consecutive ids by first appearance and retained
    on the result's ``labels`` attribute.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] in COMMENT_CHARS:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {line_number}: expected 2 tokens, found {len(tokens)}",
                line_number=line_number,
            )
        pair = []
        for tok in tokens:
            if tok not in ids:
                ids[tok] = len(ids) + 1
            pair.append(ids[tok])
        edges.append((pair[0], pair[1]))
    if not edges:
        raise EmptyInputError("input contains no edges")
    labels = tuple(sorted(ids, key=ids.get))
    return Multigraph.from_edges(edges, directed=directed, labels=labels)


def write_edge_list(g: Multigraph) -> str:
    """Serialize g to the package edge-list format.

    Header comments carry the edge count, vertex count, and orientation;
    edges follow one per line, tab separated, LF endings. Round-trips
    through ``parse_edge_list`` up to canonical relabeling.
    """
    header = (
        f"# edges={g.num_edges}\n"
        f"# vertices={g.num_vertices}\n"
        f"# directed={'true' if g.directed else 'false'}\n"
    )
    body = "".join(f"{u}\t{v}\n" for u, v in g.edges)
    return header + body
