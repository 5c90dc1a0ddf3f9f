"""rankshift: quantify how sampling away a random node layer perturbs
degree- and betweenness-centrality rankings on random graphs."""

__version__ = "0.1.0"

from .centrality import (CentralityKind, betweenness_centrality,
                         compute_centrality, degree_centrality, rank)
from .errors import ConfigError, TrialSkipped
from .experiment import (LayerAssignment, SweepConfig, SweepSummary,
                         TrialRecord, run_sweep, run_trial, sample_layer)
from .generators import (ScaleFreeParams, SmallWorldParams, degree_histogram,
                         generate_scale_free, generate_small_world)
from .graph import Graph, IdMap, connected_components, induced_subgraph
from .metrics import ErrorPair, epsilon, epsilon_n, error_pair

__all__ = [
    "__version__",
    "CentralityKind",
    "ConfigError",
    "ErrorPair",
    "Graph",
    "IdMap",
    "LayerAssignment",
    "ScaleFreeParams",
    "SmallWorldParams",
    "SweepConfig",
    "SweepSummary",
    "TrialRecord",
    "TrialSkipped",
    "betweenness_centrality",
    "compute_centrality",
    "connected_components",
    "degree_centrality",
    "degree_histogram",
    "epsilon",
    "epsilon_n",
    "error_pair",
    "generate_scale_free",
    "generate_small_world",
    "induced_subgraph",
    "rank",
    "run_sweep",
    "run_trial",
    "sample_layer",
]
