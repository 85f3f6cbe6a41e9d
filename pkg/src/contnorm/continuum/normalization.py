# contnorm/continuum/normalization.py
"""
Delta normalization of continuum states.

Over the whole line, two states of the same parity overlap as

    int psi_k psi_k' dx = 4 pi |A|^2 delta(k - k'),

so psi / (2 sqrt(pi) |A|) has unit delta strength.
"""
import math
from dataclasses import dataclass
from typing import Union

# imports
from contnorm.continuum.matching import AsymptoticAmplitude, extract_amplitude
from contnorm.errors import ZeroAmplitudeError
from contnorm.integrators.propagate import propagate
from contnorm.integrators.solver_config import SolverConfig
from contnorm.integrators.wave_samples import Parity, WaveSamples
from contnorm.potentials.potential import Potential

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class NormalizedState:
    """
    A delta-normalized continuum state.

    Attributes:
        base: The unnormalized samples
        amplitude: Asymptotic amplitude of ``base``
        norm_constant: c = 1 / (2 sqrt(pi) |A|)
        delta_strength: 4 pi |A|^2, the delta coefficient of ``base``
    """
    base: WaveSamples
    amplitude: AsymptoticAmplitude
    norm_constant: float
    delta_strength: float

    @property
    def samples(self) -> WaveSamples:
        """The normalized samples c * psi, c * psi'."""
        return self.base.scaled(self.norm_constant)

    @property
    def normalized_amplitude(self) -> AsymptoticAmplitude:
        """Amplitude of the normalized state; its modulus is 1 / (2 sqrt(pi))."""
        return self.amplitude.scaled(self.norm_constant)

    @property
    def normalized_delta_strength(self) -> float:
        """c^2 * 4 pi |A|^2, equal to 1."""
        return self.norm_constant ** 2 * self.delta_strength

    @property
    def k(self) -> float:
        return self.base.k


def delta_strength(amplitude: AsymptoticAmplitude) -> float:
    """
    Coefficient of delta(k - k') in the whole-line overlap.

    Args:
        amplitude: Asymptotic amplitude of the state

    Returns:
        4 pi |A|^2
    """
    return 4.0 * math.pi * amplitude.modulus ** 2


def normalize(samples: WaveSamples, amplitude: AsymptoticAmplitude) -> NormalizedState:
    """
    Scale a state to unit delta strength.

    Args:
        samples: Propagated samples
        amplitude: Amplitude extracted from these samples

    Returns:
        NormalizedState with c = 1 / (2 sqrt(pi) |A|)

    Raises:
        ZeroAmplitudeError: If |A| is zero or not finite
    """
    modulus = amplitude.modulus
    if not (math.isfinite(modulus) and modulus > 0):
        raise ZeroAmplitudeError(
            f"cannot normalize k={samples.k} ({samples.parity.value}): |A| = {modulus}")
    return NormalizedState(base=samples, amplitude=amplitude,
                           norm_constant=1.0 / (2.0 * _SQRT_PI * modulus),
                           delta_strength=delta_strength(amplitude))


def normalized_state(potential: Potential, k: float, parity: Union[Parity, str],
                     config: SolverConfig) -> NormalizedState:
    """
    Propagate, match at the support edge and normalize in one go.

    Args:
        potential: Symmetric finite-range potential
        k: Wavenumber (> 0)
        parity: "even" or "odd"
        config: Solver settings

    Returns:
        The delta-normalized state
    """
    samples = propagate(potential, k, parity, config)
    amplitude = extract_amplitude(samples, samples.x_b)
    return normalize(samples, amplitude)
