"""Edge-driven scale-free multigraph model.

Networks grow one edge at a time; each endpoint attaches to an existing
vertex size-biased by (degree - alpha) or opens a new vertex with weight
theta + alpha * N. The package covers simulation, the exact closed-form
graph probability, parameter estimation (moment method and maximum
likelihood), projection to simple graphs, and a Monte Carlo harness.
"""

from .errors import (
    BracketingError,
    DivergentEstimateError,
    EdgenetError,
    EmptyInputError,
    ExponentOutOfRangeError,
    InsufficientDataError,
    InvalidInputError,
    MalformedGraphError,
    NumericError,
    ParseError,
    UnattainableTargetError,
)
from .estimation import (
    FitResult,
    estimate_gamma_ccdf,
    estimate_gamma_mle,
    expected_vertices,
    fit_mle,
    fit_moment,
    limit_pmf,
    limit_pmf_asymptotic,
    solve_theta,
)
from .generator import GeneratorState, Params, generate
from .graph import DegreeHistogram, Multigraph, parse_edge_list, write_edge_list
from .harness import (
    CcdfTable,
    DegreeExperimentResult,
    ExperimentConfig,
    GrowthResult,
    ReplicateRecord,
    mix_seed,
    run_degree_experiment,
    run_growth_experiment,
)
from .likelihood import enumerate_graphs, log_prob_closed, log_prob_sequential
from .numerics import (
    MinimizeResult,
    RealInterval,
    log_gamma,
    log_rising,
    minimize_2d,
    solve_root,
)

__version__ = "0.1.0"

__all__ = [
    "BracketingError",
    "CcdfTable",
    "DegreeExperimentResult",
    "DegreeHistogram",
    "DivergentEstimateError",
    "EdgenetError",
    "EmptyInputError",
    "ExperimentConfig",
    "ExponentOutOfRangeError",
    "FitResult",
    "GeneratorState",
    "GrowthResult",
    "InsufficientDataError",
    "InvalidInputError",
    "MalformedGraphError",
    "MinimizeResult",
    "Multigraph",
    "NumericError",
    "Params",
    "ParseError",
    "RealInterval",
    "ReplicateRecord",
    "UnattainableTargetError",
    "enumerate_graphs",
    "estimate_gamma_ccdf",
    "estimate_gamma_mle",
    "expected_vertices",
    "fit_mle",
    "fit_moment",
    "generate",
    "limit_pmf",
    "limit_pmf_asymptotic",
    "log_gamma",
    "log_prob_closed",
    "log_prob_sequential",
    "log_rising",
    "minimize_2d",
    "mix_seed",
    "parse_edge_list",
    "run_degree_experiment",
    "run_growth_experiment",
    "solve_root",
    "solve_theta",
    "write_edge_list",
]
