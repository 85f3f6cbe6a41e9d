# contnorm/continuum/matching.py
"""
Asymptotic matching.

Beyond the support the state is a real standing wave

    psi_out(x) = A e^{ikx} + A* e^{-ikx} = 2|A| cos(kx + arg A),

and continuity of psi and psi' at a single point fixes the complex A.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Any, Tuple, Union

import numpy as np
from scipy.interpolate import CubicHermiteSpline

# imports
from contnorm.errors import InvalidWavenumberError, MatchingPointError
from contnorm.integrators.wave_samples import Parity, WaveSamples
from contnorm.logging_config import get_logger

logger = get_logger(__name__)

_EDGE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class AsymptoticAmplitude:
    """
    Complex amplitude A(k) of the outer plane-wave form.

    Attributes:
        k: Wavenumber
        parity: Parity of the state it was extracted from
        re: Re A
        im: Im A
        modulus: |A|
        phase: arg A in (-pi, pi]
        matched_at: Matching point used for the extraction
    """
    k: float
    parity: Parity
    re: float
    im: float
    modulus: float
    phase: float
    matched_at: float = 0.0

    @classmethod
    def from_complex(cls, k: float, parity: Parity, value: complex,
                     matched_at: float = 0.0) -> "AsymptoticAmplitude":
        phase = math.atan2(value.imag, value.real)
        if phase == -math.pi:
            phase = math.pi
        return cls(k=k, parity=parity, re=value.real, im=value.imag,
                   modulus=math.hypot(value.real, value.imag), phase=phase,
                   matched_at=matched_at)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def scaled(self, factor: float) -> "AsymptoticAmplitude":
        """Amplitude of the state multiplied by a real factor."""
        return AsymptoticAmplitude.from_complex(self.k, self.parity, self.value * factor,
                                                self.matched_at)


def extract_amplitude(samples: WaveSamples, at: float) -> AsymptoticAmplitude:
    """
    Solve psi = A e^{ikx} + c.c., psi' = ik (A e^{ikx} - c.c.) at x = at.

    A = e^{-ik at} (psi(at) - i psi'(at) / k) / 2

    Args:
        samples: Samples containing the node ``at``
        at: Matching point, at >= x_b

    Returns:
        The asymptotic amplitude

    Raises:
        MatchingPointError: If ``at`` lies inside the support
        InvalidWavenumberError: If k <= 0
        OffGridError: If ``at`` is not a node of the samples
    """
    k = samples.k
    if not k > 0:
        raise InvalidWavenumberError(f"k must be positive for matching, got {k}")
    if at < samples.x_b - _EDGE_TOLERANCE * max(1.0, samples.x_b):
        raise MatchingPointError(
            f"matching point {at} lies inside the support [-{samples.x_b}, {samples.x_b}]")
    i = samples.node_index(at)
    x = float(samples.xs[i])
    value = cmath.exp(-1j * k * x) * complex(samples.psi[i], -samples.dpsi[i] / k) / 2.0
    amplitude = AsymptoticAmplitude.from_complex(k, samples.parity, value, matched_at=x)
    logger.debug("k=%.6g %s matched at x=%.6g: |A|=%.12g arg A=%.12g",
                 k, samples.parity.value, x, amplitude.modulus, amplitude.phase)
    return amplitude


def phase_shift(amplitude: AsymptoticAmplitude) -> float:
    """
    arg A reduced modulo pi to (-pi/2, pi/2].

    Only the mod-pi representative is convention-free for the outer cosine
    2|A| cos(kx + arg A).
    """
    return math.pi / 2.0 - float(np.mod(math.pi / 2.0 - amplitude.phase, math.pi))


def outer_form(amplitude: AsymptoticAmplitude, x: Any) -> Tuple[Any, Any]:
    """
    psi_out and psi_out' at positions outside the support.

    For x < 0 the state is continued by parity: psi(-x) = +/- psi(x).

    Args:
        amplitude: Asymptotic amplitude of the state
        x: Position or array of positions

    Returns:
        Tuple (psi, dpsi) with the shape of x
    """
    x_arr = np.asarray(x, dtype=float)
    ax = np.abs(x_arr)
    k = amplitude.k
    kx = k * ax
    cos_kx = np.cos(kx)
    sin_kx = np.sin(kx)
    psi = 2.0 * (amplitude.re * cos_kx - amplitude.im * sin_kx)
    dpsi = -2.0 * k * (amplitude.re * sin_kx + amplitude.im * cos_kx)
    sign = amplitude.parity.sign
    negative = x_arr < 0
    psi = np.where(negative, sign * psi, psi)
    dpsi = np.where(negative, -sign * dpsi, dpsi)
    if psi.ndim == 0:
        return float(psi), float(dpsi)
    return psi, dpsi


def wave_at(samples: WaveSamples, amplitude: AsymptoticAmplitude, x: Any) -> Tuple[Any, Any]:
    """
    psi and psi' at arbitrary positions.

    Inside the support the interior samples are interpolated with cubic
    Hermite polynomials (fourth-order, uses psi and psi'); outside, the
    exact outer form is used.

    Args:
        samples: Propagated samples
        amplitude: Amplitude extracted from the same samples
        x: Position or array of positions

    Returns:
        Tuple (psi, dpsi) with the shape of x
    """
    x_arr = np.asarray(x, dtype=float)
    ax = np.abs(x_arr)
    psi, dpsi = outer_form(amplitude, ax)
    psi = np.array(psi, dtype=float, ndmin=1)
    dpsi = np.array(dpsi, dtype=float, ndmin=1)
    ax_flat = np.array(ax, ndmin=1)
    inside = ax_flat < samples.x_b
    if np.any(inside):
        m = samples.interior_count
        spline = CubicHermiteSpline(samples.xs[:m], samples.psi[:m], samples.dpsi[:m])
        psi[inside] = spline(ax_flat[inside])
        dpsi[inside] = spline.derivative()(ax_flat[inside])
    sign = samples.parity.sign
    negative = np.array(x_arr, ndmin=1) < 0
    psi = np.where(negative, sign * psi, psi)
    dpsi = np.where(negative, -sign * dpsi, dpsi)
    if x_arr.ndim == 0:
        return float(psi[0]), float(dpsi[0])
    return psi.reshape(x_arr.shape), dpsi.reshape(x_arr.shape)


def outer_grid(x_b: float, step: float, x_end: float) -> np.ndarray:
    """
    Nodes on (x_b, x_end] with spacing not exceeding ``step``; x_end is a node.
    """
    if x_end <= x_b:
        return np.empty(0)
    cells = max(1, math.ceil((x_end - x_b) / step - 1e-9))
    return x_b + (x_end - x_b) * np.arange(1, cells + 1) / cells


def extend_samples(samples: WaveSamples, amplitude: AsymptoticAmplitude,
                   x_end: float) -> WaveSamples:
    """
    Continue the samples past x_b by exact evaluation of the outer form.

    The extension uses the solver step, so every state of the same potential
    and config extended to the same x_end lands on the same grid.

    Args:
        samples: Samples on [0, x_b]
        amplitude: Amplitude extracted from them
        x_end: New right end of the grid

    Returns:
        Samples on [0, x_end] (unchanged if x_end <= current end)
    """
    m = samples.interior_count
    extra = outer_grid(samples.x_b, samples.config.step, x_end)
    if extra.size == 0:
        return samples
    psi_out, dpsi_out = outer_form(amplitude, extra)
    return WaveSamples(k=samples.k, parity=samples.parity,
                       xs=np.concatenate([samples.xs[:m], extra]),
                       psi=np.concatenate([samples.psi[:m], psi_out]),
                       dpsi=np.concatenate([samples.dpsi[:m], dpsi_out]),
                       config=samples.config, x_b=samples.x_b)


def resample(samples: WaveSamples, amplitude: AsymptoticAmplitude,
             xs: Union[np.ndarray, list]) -> WaveSamples:
    """
    The same state on a different non-negative grid (must start at 0).

    Args:
        samples: Propagated samples
        amplitude: Amplitude extracted from them
        xs: Increasing grid starting at 0

    Returns:
        WaveSamples on xs
    """
    grid = np.asarray(xs, dtype=float)
    if grid.size == 0 or grid[0] != 0.0 or np.any(np.diff(grid) <= 0):
        raise ValueError("resample grid must be strictly increasing and start at 0")
    psi, dpsi = wave_at(samples, amplitude, grid)
    return WaveSamples(k=samples.k, parity=samples.parity, xs=grid, psi=psi, dpsi=dpsi,
                       config=samples.config, x_b=samples.x_b)
