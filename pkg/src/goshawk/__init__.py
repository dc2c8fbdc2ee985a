"""Northern goshawk optimization (NGO) with chaotic initialization and
bidirectional population evolution, plus baselines, a benchmark suite and a
wireless-sensor-network coverage model."""

from .baselines import BaselineConfig, abc_run, fa_run, random_search_run
from .benchmarks import FUNCTION_IDS, benchmark_spec, evaluate_benchmark, make_objective
from .campaign import ALGORITHMS, run_algorithm, run_campaign
from .chaos import coupled_map, dcmis_init
from .config import ExperimentConfig, load_experiment_config
from .core import ConfigurationError, EvaluationError, PopulationStateError, RunResult, SearchSpace, make_rng
from .experiments import run_experiment
from .ngo import VARIANTS, OptimizerConfig, StrategyFlags, run
from .output import emit_outputs
from .wsn import WsnScenario, connectivity_rate, coverage_objective, coverage_rate

__all__ = [
    "ALGORITHMS", "FUNCTION_IDS", "VARIANTS", "BaselineConfig", "ConfigurationError", "EvaluationError",
    "ExperimentConfig", "OptimizerConfig", "PopulationStateError", "RunResult", "SearchSpace", "StrategyFlags",
    "WsnScenario", "abc_run", "benchmark_spec", "connectivity_rate", "coupled_map", "coverage_objective",
    "coverage_rate", "dcmis_init", "emit_outputs", "evaluate_benchmark", "fa_run", "load_experiment_config", "make_rng",
    "make_objective", "random_search_run", "run", "run_algorithm", "run_campaign", "run_experiment",
]
__version__ = "0.1.0"
