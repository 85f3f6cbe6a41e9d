# contnorm/cli/sweep.py
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

# imports
from contnorm.cli.config import RunConfig
from contnorm.continuum.matching import phase_shift
from contnorm.continuum.normalization import NormalizedState, normalized_state
from contnorm.continuum.verification import DeltaReport, verify_completeness, verify_delta
from contnorm.errors import (BoundStateError, ContNormError, InvalidWavenumberError,
                             StepTooCoarseError, WindowTooSmallError)
from contnorm.integrators.solver_config import SolverConfig
from contnorm.integrators.wave_samples import Parity
from contnorm.logging_config import get_logger
from contnorm.parallel import ordered_map
from contnorm.potentials.potential import Potential

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

SWEEP_COLUMNS = ("k", "parity", "A_re", "A_im", "A_abs", "phase_mod_pi",
                 "norm_constant", "delta_strength")
REPORT_COLUMNS = ("check", "parity", "k0", "sigma", "window", "measured", "expected",
                  "relative_error", "x", "y", "tolerance", "passed")

# verification errors caused by the parameters in the document rather than the numerics
_PARAMETER_ERRORS = (WindowTooSmallError, BoundStateError, InvalidWavenumberError, StepTooCoarseError)


@dataclass(frozen=True)
class SweepRow:
    """
    One (k, parity) line of a sweep.

    ``norm_constant`` is always recomputable as 1 / (2 sqrt(pi) A_abs).
    """
    k: float
    parity: str
    A_re: float
    A_im: float
    A_abs: float
    A_arg: float
    phase_mod_pi: float
    norm_constant: float
    delta_strength: float

    @classmethod
    def from_state(cls, state: NormalizedState) -> "SweepRow":
        amplitude = state.amplitude
        return cls(k=state.k, parity=amplitude.parity.value, A_re=amplitude.re, A_im=amplitude.im,
                   A_abs=amplitude.modulus, A_arg=amplitude.phase,
                   phase_mod_pi=phase_shift(amplitude), norm_constant=state.norm_constant,
                   delta_strength=state.delta_strength)

    def as_record(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in SWEEP_COLUMNS}


@dataclass(frozen=True)
class SweepFailure:
    k: float
    parity: str
    message: str


@dataclass(frozen=True)
class VerificationOutcome:
    """A DeltaReport together with the tolerance it was judged against."""
    report: DeltaReport
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.report.passed(self.tolerance)

    def as_record(self) -> Dict[str, Any]:
        record = self.report.as_record()
        record["tolerance"] = self.tolerance
        record["passed"] = self.passed
        return {name: record[name] for name in REPORT_COLUMNS}


@dataclass
class SweepResult:
    rows: List[SweepRow] = field(default_factory=list)
    outcomes: List[VerificationOutcome] = field(default_factory=list)
    failures: List[SweepFailure] = field(default_factory=list)
    config_failure: bool = False

    @property
    def exit_code(self) -> int:
        """
        0 when nothing failed; otherwise the most severe failure wins:
        config error, then numerical failure, then a failed tolerance.
        """
        if self.config_failure:
            return EXIT_CONFIG_ERROR
        if self.failures:
            return EXIT_NUMERICAL_FAILURE
        if not all(outcome.passed for outcome in self.outcomes):
            return EXIT_VERIFICATION_FAILED
        return EXIT_OK


def _sweep_job(potential: Potential, solver: SolverConfig):
    def job(item: Tuple[float, Parity]):
        k, parity = item
        try:
            return SweepRow.from_state(normalized_state(potential, k, parity, solver))
        except ContNormError as exc:
            return SweepFailure(k=k, parity=parity.value, message=str(exc))
    return job


def run_verification(config: RunConfig, result: Optional[SweepResult] = None) -> SweepResult:
    """
    Run the verification blocks of a config.

    Args:
        config: Validated run config
        result: Result to add the outcomes to (a fresh one if omitted)

    Returns:
        The result with one outcome per requested block
    """
    result = result if result is not None else SweepResult()
    potential = config.build_potential()
    solver = config.solver_config()
    blocks = config.verify

    if blocks.delta is not None:
        block = blocks.delta
        try:
            report = verify_delta(potential, block.parity, block.k0, block.sigma, block.window,
                                  solver, workers=config.workers)
            result.outcomes.append(VerificationOutcome(report, block.tolerance))
        except ContNormError as exc:
            _record_verification_error(result, "delta", block.k0, block.parity, exc)

    if blocks.completeness is not None:
        block = blocks.completeness
        try:
            report = verify_completeness(potential, block.x, block.y, block.k_max, block.sigma_x,
                                         solver, workers=config.workers)
            result.outcomes.append(VerificationOutcome(report, block.tolerance))
        except ContNormError as exc:
            _record_verification_error(result, "completeness", block.k_max, "both", exc)

    for outcome in result.outcomes:
        if not outcome.passed:
            logger.warning("%s check failed: relative error %.3e exceeds tolerance %g",
                           outcome.report.check, outcome.report.relative_error, outcome.tolerance)
    return result


def _record_verification_error(result: SweepResult, check: str, k: float, parity: str,
                               exc: ContNormError) -> None:
    logger.error("%s check could not run: %s", check, exc)
    if isinstance(exc, _PARAMETER_ERRORS):
        result.config_failure = True
    else:
        result.failures.append(SweepFailure(k=k, parity=parity, message=f"{check}: {exc}"))


def run_sweep(config: RunConfig) -> SweepResult:
    """
    Propagate, match and normalize every (k, parity) of the grid, then run
    the verification blocks.

    A failure at one k is logged and recorded; the sweep carries on.

    Args:
        config: Validated run config

    Returns:
        SweepResult with rows ordered by k, then even before odd
    """
    potential = config.build_potential()
    solver = config.solver_config()
    jobs = [(k, parity) for k in config.k_grid.values() for parity in config.parities()]
    logger.info("sweeping %d job(s) over %s", len(jobs), potential.get_display_name())

    result = SweepResult()
    for outcome in ordered_map(_sweep_job(potential, solver), jobs, config.workers):
        if isinstance(outcome, SweepFailure):
            logger.error("k=%g (%s) failed: %s", outcome.k, outcome.parity, outcome.message)
            result.failures.append(outcome)
        else:
            result.rows.append(outcome)

    return run_verification(config, result)


def norm_constant_from_row(row: SweepRow) -> float:
    """1 / (2 sqrt(pi) |A|) recomputed from a row's A_abs."""
    return 1.0 / (2.0 * math.sqrt(math.pi) * row.A_abs)
