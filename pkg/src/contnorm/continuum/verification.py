# contnorm/continuum/verification.py
"""
Numerical checks of delta orthonormality and completeness.

A distribution has no pointwise value, so both identities are tested
against narrow unit-area Gaussians:

* delta check: Phi(x) = int g(k') psi_k'(x) dk' with g centred at k0;
  int_{-L}^{L} psi_k0 Phi dx must reproduce g(k0).
* completeness check: sum over parities of int_0^{k_max} psi_k(x) psi_k(y') dk,
  smeared over y' around y, must reproduce the Gaussian delta(x - y).
"""
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Union

import numpy as np
from scipy.integrate import simpson

# imports
from contnorm.continuum.matching import extend_samples, wave_at
from contnorm.continuum.normalization import NormalizedState, normalized_state
from contnorm.errors import BoundStateError, InvalidWavenumberError, WindowTooSmallError
from contnorm.integrators.solver_config import SolverConfig
from contnorm.integrators.wave_samples import Parity, WaveSamples
from contnorm.logging_config import get_logger
from contnorm.parallel import ordered_map
from contnorm.potentials.potential import Potential

logger = get_logger(__name__)

# k' window half-width in units of sigma; the Gaussian tail beyond it is < 1e-8
K_WINDOW_SIGMAS = 6.0
MIN_K_NODES = 121
# k' spacing times L; keeps Simpson well inside the e^{i k' L} oscillation
K_SPACING_TIMES_L = 0.25
# L * sigma below this cannot resolve the smeared delta
MIN_WINDOW_SIGMAS = 5.0
# k_max * sigma_x below this truncates the smeared delta(x - y)
MIN_COMPLETENESS_RESOLUTION = 3.0
Y_WINDOW_NODES = 241
MIN_GAUSS_NODES = 256


@dataclass(frozen=True)
class DeltaReport:
    """
    Outcome of a smeared delta check; carries every parameter of the run.

    For completeness checks ``k0`` holds the cutoff k_max and ``window`` the
    half-width of the y-smearing window.

    Attributes:
        check: "delta" or "completeness"
        parity: "even", "odd" or "both"
        k0: Central wavenumber (k_max for completeness)
        sigma: Smearing width
        window: Half-length L of the spatial window
        measured: Smeared integral
        expected: Value the smeared delta should take
        relative_error: |measured - expected| / |expected| for delta checks;
            completeness checks divide by the Gaussian peak g(0) instead
        x: Completeness evaluation point
        y: Completeness smearing centre
    """
    check: str
    parity: str
    k0: float
    sigma: float
    window: float
    measured: float
    expected: float
    relative_error: float
    x: Optional[float] = None
    y: Optional[float] = None

    def passed(self, tolerance: float) -> bool:
        return bool(self.relative_error <= tolerance)

    def as_record(self) -> Dict[str, Any]:
        return asdict(self)


def gaussian(t: Any, sigma: float) -> Any:
    """Unit-area Gaussian of width sigma centred at 0."""
    return np.exp(-0.5 * (np.asarray(t) / sigma) ** 2) / (sigma * math.sqrt(2.0 * math.pi))


def _relative_error(measured: float, expected: float, reference: Optional[float] = None) -> float:
    scale = abs(expected) if reference is None else abs(reference)
    if scale == 0.0:
        return math.inf
    return abs(measured - expected) / scale


def k_prime_nodes(k0: float, sigma: float, window: float) -> np.ndarray:
    """
    Simpson nodes on k0 +/- 6 sigma: at least 121, spacing at most 1 / (4 L).
    """
    span = 2.0 * K_WINDOW_SIGMAS * sigma
    cells = max(MIN_K_NODES - 1, math.ceil(span * window / K_SPACING_TIMES_L))
    cells += cells % 2
    return np.linspace(k0 - K_WINDOW_SIGMAS * sigma, k0 + K_WINDOW_SIGMAS * sigma, cells + 1)


def _extended_psi(state: NormalizedState, window: float) -> WaveSamples:
    return extend_samples(state.samples, state.normalized_amplitude, window)


def verify_delta(potential: Potential, parity: Union[Parity, str], k0: float, sigma: float,
                 window: float, config: SolverConfig, workers: int = 1) -> DeltaReport:
    """
    Smeared test of int psi_k0 psi_k' dx = delta(k0 - k') for normalized states.

    Args:
        potential: Symmetric finite-range potential
        parity: Parity of all states involved
        k0: Central wavenumber
        sigma: Width of the Gaussian in k'
        window: Half-length L of the integration window [-L, L]
        config: Solver settings
        workers: Threads used to build the k'-states

    Returns:
        DeltaReport comparing the smeared integral with g(k0) = 1 / (sigma sqrt(2 pi))

    Raises:
        WindowTooSmallError: If L * sigma < 5
        InvalidWavenumberError: If the k' window reaches k <= 0
    """
    parity = Parity.coerce(parity)
    if not (sigma > 0 and window > 0):
        raise ValueError(f"sigma and L must be positive, got sigma={sigma}, L={window}")
    if window * sigma < MIN_WINDOW_SIGMAS:
        raise WindowTooSmallError(
            f"L * sigma = {window * sigma:.3g} is below {MIN_WINDOW_SIGMAS}; "
            "the window cannot resolve the smeared delta")
    if k0 - K_WINDOW_SIGMAS * sigma <= 0:
        raise InvalidWavenumberError(
            f"k0 - {K_WINDOW_SIGMAS:g} sigma = {k0 - K_WINDOW_SIGMAS * sigma:.3g} must stay positive")

    nodes = k_prime_nodes(k0, sigma, window)
    weights = simpson(np.eye(nodes.size), x=nodes, axis=1) * gaussian(nodes - k0, sigma)
    states = ordered_map(lambda k: normalized_state(potential, float(k), parity, config),
                         nodes, workers)

    target = _extended_psi(normalized_state(potential, k0, parity, config), window)
    packet = np.zeros_like(target.psi)
    # fixed node order keeps the reduction reproducible
    for weight, state in zip(weights, states):
        packet += weight * _extended_psi(state, window).psi

    # same-parity integrand is even: int_{-L}^{L} = 2 int_0^L
    measured = 2.0 * float(simpson(target.psi * packet, x=target.xs))
    expected = float(gaussian(0.0, sigma))
    report = DeltaReport(check="delta", parity=parity.value, k0=k0, sigma=sigma, window=window,
                         measured=measured, expected=expected,
                         relative_error=_relative_error(measured, expected))
    logger.info("delta check %s k0=%g sigma=%g L=%g: measured=%.10g expected=%.10g rel=%.3e",
                parity.value, k0, sigma, window, measured, expected, report.relative_error)
    return report


def gauss_legendre_k(k_max: float, count: int):
    """Gauss-Legendre nodes and weights on [0, k_max] (k = 0 is never a node)."""
    t, w = np.polynomial.legendre.leggauss(count)
    return 0.5 * k_max * (t + 1.0), 0.5 * k_max * w


def verify_completeness(potential: Potential, x: float, y: float, k_max: float, sigma_x: float,
                        config: SolverConfig, workers: int = 1,
                        k_nodes: Optional[int] = None) -> DeltaReport:
    """
    Smeared test of sum_parity int_0^inf psi_k(x) psi_k(y) dk = delta(x - y).

    Only valid without bound states: the continuum alone is then complete.

    Args:
        potential: Symmetric finite-range potential without bound states
        x: Evaluation position
        y: Centre of the y-smearing Gaussian
        k_max: Upper cutoff of the k integral
        sigma_x: Width of the y-smearing Gaussian
        config: Solver settings
        workers: Threads used over k nodes
        k_nodes: Gauss-Legendre node count (default: enough for the oscillation in k)

    Returns:
        DeltaReport comparing against the Gaussian delta(x - y) at width sigma_x,
        with the error measured in units of the Gaussian peak

    Raises:
        BoundStateError: If the potential supports bound states
        WindowTooSmallError: If k_max * sigma_x < 3
    """
    if potential.admits_bound_states():
        raise BoundStateError(
            f"{potential.get_display_name()} supports bound states; the continuum alone "
            "is not complete, so the completeness check only accepts repulsive potentials")
    if not (k_max > 0 and sigma_x > 0):
        raise ValueError(f"k_max and sigma_x must be positive, got {k_max}, {sigma_x}")
    if k_max * sigma_x < MIN_COMPLETENESS_RESOLUTION:
        raise WindowTooSmallError(
            f"k_max * sigma_x = {k_max * sigma_x:.3g} is below {MIN_COMPLETENESS_RESOLUTION}")

    half_width = K_WINDOW_SIGMAS * sigma_x
    ys = np.linspace(y - half_width, y + half_width, Y_WINDOW_NODES)
    smear = gaussian(ys - y, sigma_x)
    if k_nodes is None:
        extent = abs(x) + abs(y) + half_width + 2.0 * potential.support_edge()
        k_nodes = max(MIN_GAUSS_NODES, math.ceil(2.0 * k_max * extent))
    ks, kw = gauss_legendre_k(k_max, k_nodes)

    def kernel(k: float) -> float:
        total = 0.0
        for parity in (Parity.EVEN, Parity.ODD):
            state = normalized_state(potential, float(k), parity, config)
            samples, amplitude = state.samples, state.normalized_amplitude
            psi_x, _ = wave_at(samples, amplitude, x)
            psi_y, _ = wave_at(samples, amplitude, ys)
            total += psi_x * float(simpson(smear * psi_y, x=ys))
        return total

    values = ordered_map(kernel, ks, workers)
    measured = float(np.dot(kw, values))
    expected = float(gaussian(x - y, sigma_x))
    peak = float(gaussian(0.0, sigma_x))
    report = DeltaReport(check="completeness", parity="both", k0=k_max, sigma=sigma_x,
                         window=half_width, measured=measured, expected=expected,
                         relative_error=_relative_error(measured, expected, peak), x=x, y=y)
    logger.info("completeness check x=%g y=%g k_max=%g sigma=%g: measured=%.10g expected=%.10g rel=%.3e",
                x, y, k_max, sigma_x, measured, expected, report.relative_error)
    return report
