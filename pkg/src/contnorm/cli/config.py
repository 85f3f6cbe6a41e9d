# contnorm/cli/config.py
"""
Run-config documents.

A run is described by one YAML document; every physics parameter lives in
the file and only paths and formats come from the command line::

    potential:
      kind: square-well
      V0: 1.0
      a: 1.0
    mass: 1.0
    parity: both
    k_grid: {min: 0.5, max: 3.0, count: 6}
    solver: {step: 1.0e-3, method: numerov}
    verify:
      delta: {k0: 1.0, sigma: 0.05, L: 200}
"""
from pathlib import Path
from typing import List, Literal, Optional, Union

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

# imports
from contnorm.errors import ConfigError
from contnorm.integrators.solver_config import DEFAULT_METHOD, DEFAULT_STEP, KNOWN_METHODS, SolverConfig
from contnorm.integrators.wave_samples import Parity
from contnorm.potentials.potential import DEFAULT_SUPPORT_TOLERANCE, Potential
from contnorm.potentials.registry import PotentialRegistry, get_potential, load_builtin_kinds

# parameters each kind needs besides epsilon_v
_REQUIRED_PARAMS = {
    "square-well": ("V0", "a"),
    "square-barrier": ("V0", "a"),
    "gaussian": ("V0", "w"),
    "free": (),
}


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True, allow_inf_nan=False)


class PotentialSpec(_Block):
    """Potential described by value: {kind, V0, a | w, epsilon_v}."""
    kind: str
    v0: Optional[float] = Field(default=None, alias="V0")
    a: Optional[float] = None
    w: Optional[float] = None
    epsilon_v: float = Field(default=DEFAULT_SUPPORT_TOLERANCE, ge=0)

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, value: str) -> str:
        load_builtin_kinds()
        available = PotentialRegistry.list_available()
        if value.lower() not in available:
            raise ValueError(f"unknown potential kind '{value}'; available kinds: {', '.join(available)}")
        return value.lower()

    @model_validator(mode="after")
    def _required_params(self) -> "PotentialSpec":
        given = {"V0": self.v0, "a": self.a, "w": self.w}
        required = _REQUIRED_PARAMS.get(self.kind, ())
        missing = [name for name in required if given[name] is None]
        if missing:
            raise ValueError(f"kind '{self.kind}' requires parameter(s): {', '.join(missing)}")
        unexpected = [name for name, value in given.items() if value is not None and name not in required]
        if unexpected:
            raise ValueError(f"kind '{self.kind}' does not take parameter(s): {', '.join(unexpected)}")
        return self

    def build(self) -> Potential:
        kwargs = {"support_tolerance": self.epsilon_v}
        if self.v0 is not None:
            kwargs["v0"] = self.v0
        if self.a is not None:
            kwargs["a"] = self.a
        if self.w is not None:
            kwargs["w"] = self.w
        return get_potential(self.kind, **kwargs)


class KGridSpec(_Block):
    min: float = Field(gt=0)
    max: float = Field(gt=0)
    count: int = Field(default=1, ge=1)
    spacing: Literal["linear"] = "linear"

    @model_validator(mode="after")
    def _ordered(self) -> "KGridSpec":
        if self.max < self.min:
            raise ValueError(f"max ({self.max}) must not be below min ({self.min})")
        return self

    def values(self) -> List[float]:
        if self.count == 1:
            return [self.min]
        return [float(k) for k in np.linspace(self.min, self.max, self.count)]


class SolverSpec(_Block):
    step: float = Field(default=DEFAULT_STEP, gt=0)
    method: str = DEFAULT_METHOD

    @field_validator("method")
    @classmethod
    def _known_method(cls, value: str) -> str:
        if value not in KNOWN_METHODS:
            raise ValueError(f"unknown method '{value}'; available methods: {', '.join(KNOWN_METHODS)}")
        return value


class OutputSpec(_Block):
    """Default destinations; command-line flags take precedence."""
    path: Optional[Path] = None
    format: Literal["csv", "json"] = "csv"
    reports: Optional[Path] = None


class DeltaSpec(_Block):
    k0: float = Field(gt=0)
    sigma: float = Field(gt=0)
    window: float = Field(alias="L", gt=0)
    parity: Literal["even", "odd"] = "even"
    tolerance: float = Field(default=0.02, gt=0)


class CompletenessSpec(_Block):
    x: float
    y: float
    k_max: float = Field(gt=0)
    sigma_x: float = Field(gt=0)
    tolerance: float = Field(default=0.05, gt=0)


class VerifySpec(_Block):
    delta: Optional[DeltaSpec] = None
    completeness: Optional[CompletenessSpec] = None


class RunConfig(_Block):
    """
    A fully validated run.

    Attributes:
        potential: Potential by value
        mass: Particle mass (hbar = 1)
        parity: "even", "odd" or "both"
        k_grid: Wavenumbers of the sweep
        solver: Step and propagation method
        output: Default output destinations
        workers: Threads for the sweep and the verification checks
        verify: Optional verification blocks
    """
    potential: PotentialSpec
    mass: float = Field(default=1.0, gt=0)
    parity: Literal["even", "odd", "both"] = "both"
    k_grid: KGridSpec
    solver: SolverSpec = Field(default_factory=SolverSpec)
    output: OutputSpec = Field(default_factory=OutputSpec)
    workers: int = Field(default=1, ge=1)
    verify: VerifySpec = Field(default_factory=VerifySpec)

    def parities(self) -> List[Parity]:
        if self.parity == "both":
            return [Parity.EVEN, Parity.ODD]
        return [Parity(self.parity)]

    def solver_config(self) -> SolverConfig:
        return SolverConfig(mass=self.mass, step=self.solver.step, method=self.solver.method)

    def build_potential(self) -> Potential:
        return self.potential.build()


def _format_errors(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<document>"
        lines.append(f"{location}: {item['msg']}")
    return "; ".join(lines)


def parse_config(text: str) -> RunConfig:
    """
    Parse and validate a YAML run-config document.

    Args:
        text: The document

    Returns:
        RunConfig with defaults applied

    Raises:
        ConfigError: On malformed YAML or a failed validation; the message
                     names the offending field by its dotted path
    """
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}" if mark is not None else ""
        raise ConfigError(f"malformed config document{where}: {exc}") from exc
    if not isinstance(document, dict):
        raise ConfigError("config document must be a mapping of keys to values")
    try:
        config = RunConfig.model_validate(document)
    except ValidationError as exc:
        raise ConfigError(_format_errors(exc)) from exc
    try:
        config.build_potential()
    except ValueError as exc:
        raise ConfigError(f"potential: {exc}") from exc
    return config


def load_config(path: Union[str, Path]) -> RunConfig:
    """
    Read and parse a run-config file.

    Raises:
        ConfigError: If the file cannot be read or fails validation
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text)
