"""Experiment configuration: JSON loading, defaults and validation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .benchmarks import FUNCTION_IDS, benchmark_spec
from .campaign import ABLATION_VARIANTS, resolve_algorithm
from .core import ConfigurationError
from .wsn import WsnScenario

KINDS = ("ablation", "wsn", "bench")
KIND_ALIASES = {"ablate": "ablation"}

DEFAULTS = {
    "ablation": dict(algorithms=list(ABLATION_VARIANTS), trials=20, t_max=500, population=30),
    "wsn": dict(algorithms=["NGO", "INGO", "ABC", "FA"], trials=30, t_max=500, population=30),
    "bench": dict(algorithms=["INGO", "NGO", "ABC", "FA", "RANDOM"], trials=20, t_max=500, population=30),
}


class ConfigFileError(ConfigurationError):
    """Configuration file is missing or unreadable."""


class ConfigSyntaxError(ConfigurationError):
    """Configuration file is not valid JSON."""


@dataclass
class ExperimentConfig:
    kind: str
    algorithms: list = None
    functions: list = None
    scenario: dict = None
    trials: int = None
    t_max: int = None
    population: int = None
    seed: int = 0
    output: str = "results"
    jobs: int = 1
    plots: bool = True

    def __post_init__(self):
        kind = KIND_ALIASES.get(str(self.kind), str(self.kind))
        if kind not in KINDS:
            raise ConfigurationError(f"kind must be one of {', '.join(KINDS)}; got {self.kind!r}")
        self.kind = kind
        defaults = DEFAULTS[kind]
        for key, value in defaults.items():
            if getattr(self, key) is None:
                setattr(self, key, list(value) if isinstance(value, list) else value)
        self.validate()

    def validate(self):
        try:
            self.algorithms = [resolve_algorithm(a) for a in self.algorithms]
        except ValueError as exc:
            raise ConfigurationError(str(exc)) from None
        if not self.algorithms:
            raise ConfigurationError("at least one algorithm is required")
        if self.kind == "wsn":
            if self.functions is not None:
                raise ConfigurationError("'functions' does not apply to wsn experiments")
            try:
                self.scenario = WsnScenario(**(self.scenario or {})).to_dict()
            except TypeError as exc:
                raise ConfigurationError(f"invalid scenario: {exc}") from None
        else:
            if self.scenario is not None:
                raise ConfigurationError(f"'scenario' does not apply to {self.kind} experiments")
            try:
                self.functions = [benchmark_spec(f).id for f in (self.functions or FUNCTION_IDS)]
            except ValueError as exc:
                raise ConfigurationError(str(exc)) from None
        for name in ("trials", "t_max", "jobs"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer; got {value!r}")
        if not isinstance(self.population, int) or self.population < 5:
            raise ConfigurationError(f"population must be an integer of at least 5; got {self.population!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64 - self.trials:
            raise ConfigurationError(f"seed must be a non-negative 64-bit integer; got {self.seed!r}")
        if not isinstance(self.plots, bool):
            raise ConfigurationError("plots must be true or false")

    @property
    def wsn_scenario(self) -> WsnScenario:
        return WsnScenario(**self.scenario)

    def to_dict(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


FIELD_NAMES = {f.name for f in fields(ExperimentConfig)}


def config_from_dict(data: dict, overrides: dict | None = None) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise ConfigurationError("configuration must be a JSON object")
    merged = dict(data)
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    unknown = sorted(set(merged) - FIELD_NAMES)
    if unknown:
        raise ConfigurationError(f"unknown configuration keys: {', '.join(unknown)}")
    if "kind" not in merged:
        raise ConfigurationError("configuration must specify 'kind'")
    return ExperimentConfig(**merged)


def load_experiment_config(path, overrides: dict | None = None) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigFileError(f"configuration file not found: {path}") from None
    except OSError as exc:
        raise ConfigFileError(f"cannot read configuration file {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigSyntaxError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return config_from_dict(data, overrides)
