"""Monte Carlo experiment runner.

Replicate seeds are a pure function of (base_seed, replicate_index) via a
splitmix64 mix, so replicates are order-independent and reruns are
bit-identical. All CSV output uses fixed schemas: growth tables are
``replicate,seed,n_vertices``, CCDF tables are ``degree,ccdf``, and summary
rows are prefixed ``#summary,``. Reals are written with 17 significant
digits so files re-parse to the in-memory values exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import InsufficientDataError, ParseError
from .estimation import estimate_gamma_ccdf, expected_vertices
from .generator import Params, generate
from .graph import Multigraph

__all__ = [
    "ExperimentConfig",
    "ReplicateRecord",
    "GrowthResult",
    "CcdfTable",
    "DegreeExperimentResult",
    "mix_seed",
    "run_growth_experiment",
    "run_degree_experiment",
    "parse_growth_csv",
    "parse_ccdf_csv",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

GROWTH_HEADER = "replicate,seed,n_vertices"
CCDF_HEADER = "degree,ccdf"
SUMMARY_PREFIX = "#summary,"


def mix_seed(base_seed: int, index: int) -> int:
    """Deterministic 64-bit replicate seed: splitmix64 output stream.

    The state base_seed + (index + 1) * golden-gamma (mod 2^64) is run
    through the splitmix64 finalizer (xor-shift / multiply twice).
    """
    z = (base_seed + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


@dataclass(frozen=True)
class ExperimentConfig:
    params: Params
    n_edges: int
    replicates: int = 1
    base_seed: int = 0
    directed: bool = False
    output_path: Path | str | None = None

    def __post_init__(self) -> None:
        if self.n_edges < 1:
            raise ValueError(f"n_edges must be >= 1, got {self.n_edges}")
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")


@dataclass(frozen=True)
class ReplicateRecord:
    replicate_index: int
    seed: int
    n_vertices: int
    gamma_hat_multigraph: float | None = None
    gamma_hat_projected: float | None = None


@dataclass(frozen=True)
class GrowthResult:
    """Per-replicate vertex counts plus the mean-over-prediction summary."""

    records: tuple[ReplicateRecord, ...]
    mean_vertices: float
    expected: float
    ratio: float

    def to_csv(self) -> str:
        lines = [GROWTH_HEADER]
        for r in self.records:
            lines.append(f"{r.replicate_index},{r.seed},{r.n_vertices}")
        lines.append(
            f"{SUMMARY_PREFIX}mean_n_vertices={_fmt(self.mean_vertices)},"
            f"expected_vertices={_fmt(self.expected)},ratio={_fmt(self.ratio)}"
        )
        return "\n".join(lines) + "\n"


def run_growth_experiment(cfg: ExperimentConfig) -> GrowthResult:
    """Generate independent replicates and compare mean N_n to the growth law."""
    records = []
    for i in range(cfg.replicates):
        seed = mix_seed(cfg.base_seed, i)
        g = generate(cfg.params, cfg.n_edges, seed=seed, directed=cfg.directed)
        records.append(ReplicateRecord(replicate_index=i, seed=seed, n_vertices=g.num_vertices))
    mean_vertices = sum(r.n_vertices for r in records) / len(records)
    expected = expected_vertices(cfg.params, cfg.n_edges)
    result = GrowthResult(
        records=tuple(records),
        mean_vertices=mean_vertices,
        expected=expected,
        ratio=mean_vertices / expected,
    )
    if cfg.output_path is not None:
        Path(cfg.output_path).write_text(result.to_csv(), encoding="utf-8", newline="\n")
    return result


@dataclass(frozen=True)
class CcdfTable:
    """CCDF points for one graph, with the fitted tail exponent when available."""

    points: tuple[tuple[int, float], ...]
    gamma_hat: float | None
    note: str | None = None

    def to_csv(self) -> str:
        lines = [CCDF_HEADER]
        for k, c in self.points:
            lines.append(f"{k},{_fmt(c)}")
        gamma = "nan" if self.gamma_hat is None else _fmt(self.gamma_hat)
        lines.append(f"{SUMMARY_PREFIX}gamma_hat={gamma}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DegreeExperimentResult:
    multigraph: CcdfTable
    projected: CcdfTable
    seed: int

    def save(self, base_path: Path | str) -> tuple[Path, Path]:
        base = Path(base_path)
        multi = base.with_name(base.name + ".multigraph.csv")
        proj = base.with_name(base.name + ".projected.csv")
        multi.write_text(self.multigraph.to_csv(), encoding="utf-8", newline="\n")
        proj.write_text(self.projected.to_csv(), encoding="utf-8", newline="\n")
        return multi, proj

    def gnuplot_script(self, base_path: Path | str) -> str:
        """A ready-to-run log-log CCDF plot with a dashed power-law guide.

        The guide's geometric slope is -(gamma_hat - 1): that is how the
        CCDF of a gamma-exponent power law falls off.
        """
        base = Path(base_path)
        lines = [
            "# log-log degree CCDFs; run: gnuplot <this file>",
            f'set output "{base.name}.png"',
            "set terminal pngcairo size 900,700",
            "set logscale xy",
            'set datafile separator ","',
            'set xlabel "degree k"',
            'set ylabel "Pr(degree >= k)"',
            "set key bottom left",
        ]
        plots = [
            f'"{base.name}.multigraph.csv" skip 1 using 1:2 with points pt 7 title "multigraph"',
            f'"{base.name}.projected.csv" skip 1 using 1:2 with points pt 9 title "projected"',
        ]
        gamma = self.multigraph.gamma_hat
        if gamma is not None:
            k0, c0 = self.multigraph.points[0]
            offset = c0 * k0 ** (gamma - 1.0)
            lines.append(f"guide(x) = {_fmt(offset)} * x**(-{_fmt(gamma - 1.0)})")
            plots.append(
                f'guide(x) with lines dashtype 2 lw 2 title "gamma_hat={gamma:.3f}"'
            )
        lines.append("plot " + ", \\\n     ".join(plots))
        return "\n".join(lines) + "\n"


def run_degree_experiment(cfg: ExperimentConfig, kmin: int = 5) -> DegreeExperimentResult:
    """One generated graph: CCDF and fitted exponent, multigraph and projection."""
    seed = mix_seed(cfg.base_seed, 0)
    g = generate(cfg.params, cfg.n_edges, seed=seed, directed=cfg.directed)
    tables = []
    for graph in (g, g.project_simple()):
        hist = graph.degree_histogram()
        points = tuple(hist.ccdf())
        try:
            gamma = estimate_gamma_ccdf(hist, kmin)
            note = None
        except InsufficientDataError as exc:
            gamma = None
            note = f"insufficient-data: {exc}"
        tables.append(CcdfTable(points=points, gamma_hat=gamma, note=note))
    result = DegreeExperimentResult(multigraph=tables[0], projected=tables[1], seed=seed)
    if cfg.output_path is not None:
        result.save(cfg.output_path)
    return result


def parse_growth_csv(text: str) -> GrowthResult:
    """Inverse of GrowthResult.to_csv, for round-trip checks and tooling."""
    records = []
    summary: dict[str, float] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        if line.startswith(SUMMARY_PREFIX):
            summary = _parse_summary(line)
        elif line == GROWTH_HEADER:
            continue
        else:
            parts = line.split(",")
            if len(parts) != 3:
                raise ParseError(f"line {line_number}: expected 3 fields", line_number)
            records.append(
                ReplicateRecord(
                    replicate_index=int(parts[0]),
                    seed=int(parts[1]),
                    n_vertices=int(parts[2]),
                )
            )
    if not summary:
        raise ParseError("missing #summary row")
    return GrowthResult(
        records=tuple(records),
        mean_vertices=summary["mean_n_vertices"],
        expected=summary["expected_vertices"],
        ratio=summary["ratio"],
    )


def parse_ccdf_csv(text: str) -> CcdfTable:
    """Inverse of CcdfTable.to_csv."""
    points = []
    gamma: float | None = None
    saw_summary = False
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line or line == CCDF_HEADER:
            continue
        if line.startswith(SUMMARY_PREFIX):
            value = _parse_summary(line)["gamma_hat"]
            gamma = None if math.isnan(value) else value
            saw_summary = True
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError(f"line {line_number}: expected 2 fields", line_number)
        points.append((int(parts[0]), float(parts[1])))
    if not saw_summary:
        raise ParseError("missing #summary row")
    return CcdfTable(points=tuple(points), gamma_hat=gamma)


def _parse_summary(line: str) -> dict[str, Any]:
    out: dict[str, float] = {}
    for item in line[len(SUMMARY_PREFIX):].split(","):
        key, _, value = item.partition("=")
        out[key] = float(value)
    return out
