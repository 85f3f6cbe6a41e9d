# contnorm/integrators/propagate.py
"""
Interior propagation of the stationary Schrödinger equation

    psi'' = 2m (V(x) - E) psi,   E = k^2 / (2m)

on [0, x_b] for a symmetric potential. Negative x follows from parity.
"""
import math
from typing import Union

import numpy as np

# imports
from contnorm.errors import IntegratorBlowUpError, InvalidWavenumberError, StepTooCoarseError
from contnorm.integrators.registry import get_propagator
from contnorm.integrators.solver_config import MIN_INTERIOR_CELLS, SolverConfig
from contnorm.integrators.wave_samples import Parity, WaveSamples
from contnorm.logging_config import get_logger
from contnorm.potentials.potential import Potential

logger = get_logger(__name__)


def interior_grid(x_b: float, step: float) -> np.ndarray:
    """
    Uniform grid on [0, x_b] whose spacing does not exceed ``step``.

    Args:
        x_b: Right edge of the support (> 0)
        step: Target spacing

    Returns:
        Grid including both endpoints

    Raises:
        StepTooCoarseError: If fewer than the minimum number of cells fit
    """
    cells = max(1, math.ceil(x_b / step - 1e-9))
    if cells < MIN_INTERIOR_CELLS:
        raise StepTooCoarseError(
            f"step {step} gives {cells} cells across [0, {x_b}]; "
            f"at least {MIN_INTERIOR_CELLS} are required")
    return np.linspace(0.0, x_b, cells + 1)


def initial_conditions(parity: Parity, k: float):
    """
    Conditions at the symmetry point: even (1, 0), odd (0, k).

    The odd slope k makes the free odd solution exactly sin(kx).
    """
    if parity is Parity.EVEN:
        return 1.0, 0.0
    return 0.0, k


def _coefficient(potential: Potential, k: float, config: SolverConfig, x_b: float):
    # the last node sits on the support edge; sample V there from inside
    inner_edge = np.nextafter(x_b, 0.0)
    two_m = 2.0 * config.mass
    energy = config.energy(k)

    def f(x):
        ax = np.minimum(np.abs(np.asarray(x, dtype=float)), inner_edge)
        return two_m * (np.asarray(potential.evaluate(ax)) - energy)

    return f


def propagate(potential: Potential, k: float, parity: Union[Parity, str],
              config: SolverConfig, initial_scale: float = 1.0) -> WaveSamples:
    """
    Propagate a stationary state of wavenumber k through [0, x_b].

    Args:
        potential: Symmetric finite-range potential
        k: Wavenumber (> 0)
        parity: "even" or "odd"
        config: Solver settings (mass, step, method)
        initial_scale: Multiplier applied to the initial conditions. The
            integration runs at unit scale and the result is multiplied
            afterwards, so the samples scale by c up to one rounding.

    Returns:
        WaveSamples on [0, x_b], endpoint values included

    Raises:
        InvalidWavenumberError: If k <= 0
        StepTooCoarseError: If the step leaves fewer than 16 cells
        IntegratorBlowUpError: If a non-finite value appears
    """
    parity = Parity.coerce(parity)
    if not (math.isfinite(k) and k > 0):
        raise InvalidWavenumberError(f"k must be finite and positive, got {k}")

    psi0, dpsi0 = initial_conditions(parity, k)
    x_b = potential.support_edge()

    if x_b == 0.0:
        # degenerate support: nothing to integrate
        return WaveSamples(k=k, parity=parity, xs=[0.0], psi=[psi0 * initial_scale],
                           dpsi=[dpsi0 * initial_scale], config=config, x_b=0.0)

    xs = interior_grid(x_b, config.step)
    propagator = get_propagator(config.method)
    psi, dpsi = propagator.integrate(xs, _coefficient(potential, k, config, x_b), psi0, dpsi0)
    if initial_scale != 1.0:
        # integrate at unit scale, then scale: one rounding per sample
        psi = psi * initial_scale
        dpsi = dpsi * initial_scale

    if not (np.all(np.isfinite(psi)) and np.all(np.isfinite(dpsi))):
        raise IntegratorBlowUpError(
            f"non-finite value while propagating k={k} ({parity.value}) "
            f"through {potential.get_display_name()}")

    logger.debug("propagated k=%.6g %s over [0, %.6g] with %d cells (%s)",
                 k, parity.value, x_b, xs.size - 1, propagator.get_display_name())
    return WaveSamples(k=k, parity=parity, xs=xs, psi=psi, dpsi=dpsi, config=config, x_b=x_b)


def derivative_at(samples: WaveSamples, x: float) -> float:
    """
    psi'(x) at a grid node.

    The tabulated derivative is fourth-order accurate: the initial condition
    at x = 0, the Numerov-consistent central formula inside, the one-sided
    5-point stencil at x_b, and the exact outer form beyond x_b.

    Args:
        samples: Propagated (or extended) samples
        x: Grid node; negative x uses parity

    Returns:
        psi'(x)

    Raises:
        OffGridError: If x is not a node
    """
    return samples.slope_at(x)
