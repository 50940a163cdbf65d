"""Maximum-clique heuristics for social-network graphs.

Ships an ACO baseline, the ACO-PSO hybrid (particle-updated trail
deposits), an exact branch-and-bound oracle for validating heuristic
output, and a benchmark harness for seeded multi-run experiments.
"""

from .backends import available_backends, default_backend, get_backend
from .bench import (BenchmarkReport, DatasetSpec, SuiteConfig, compare,
                    emit_report, run_suite)
from .exact import OracleResult, enumerate_maximal_cliques, max_clique_exact
from .graph import (Clique, Graph, GraphError, GraphSummary, candidates,
                    gnp_random, is_clique, summarize)
from .io import (ParseError, ParseWarning, load_graph, parse_edge_list,
                 parse_gml, parse_pajek, to_edge_list)
from .pheromone import PheromoneState
from .rng import SplitMix64, stream_seed
from .solver import (IterationStats, RunRecord, RunState, SolverConfig,
                     alpha_schedule, construct_clique, delta_binary,
                     delta_quality_gap, pso_delta_update, pso_velocity,
                     rho_schedule, run, select_vertex)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkReport", "Clique", "DatasetSpec", "Graph", "GraphError",
    "GraphSummary", "IterationStats", "OracleResult", "ParseError",
    "ParseWarning", "PheromoneState", "RunRecord", "RunState",
    "SolverConfig", "SplitMix64", "SuiteConfig", "alpha_schedule",
    "available_backends", "candidates", "compare", "construct_clique",
    "default_backend", "delta_binary", "delta_quality_gap", "emit_report",
    "enumerate_maximal_cliques", "get_backend", "gnp_random", "is_clique",
    "load_graph", "max_clique_exact", "parse_edge_list", "parse_gml",
    "parse_pajek", "pso_delta_update", "pso_velocity", "rho_schedule",
    "run", "run_suite", "select_vertex", "stream_seed", "summarize",
    "to_edge_list", "__version__",
]
