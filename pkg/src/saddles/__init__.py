"""Estimate a graph's complementary cumulative degree histogram from a small
sample of vertex, neighbor and (optionally) degree queries."""
from .baselines import BaselineKind, SampledDegreeSet, collect, naive_scale
from .degree import DegreeEstimate, DegreeProbe, deg, effective_degree
from .errors import (
    ContractViolationError, InvalidInputError, InvalidParameterError,
    ModelViolationError, ParseError, SaddlesError,
)
from .estimator import (
    EstimateSeries, SamplerConfig, default_degree_set, estimate_ccdh, run_saddles, run_trial,
)
from .graph import (
    CCDH, FatnessIndices, Graph, exact_ccdh, fatness_indices, generate_power_law, graph_stats,
    load_edge_list,
)
from .kernels import BACKEND
from .metrics import AlphaError, alpha_error, eps_check, weight_oracle
from .oracle import ModelKind, QueryLedger, QueryOracle

__version__ = "0.1.0"
