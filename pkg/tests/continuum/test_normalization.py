import math

import numpy as np
import pytest

from contnorm.continuum.matching import AsymptoticAmplitude, extend_samples, extract_amplitude
from contnorm.continuum.normalization import delta_strength, normalize, normalized_state
from contnorm.continuum.overlap import overlap_quadrature
from contnorm.errors import ZeroAmplitudeError
from contnorm.integrators.propagate import propagate
from contnorm.integrators.solver_config import SolverConfig
from contnorm.integrators.wave_samples import Parity
from contnorm.potentials.free import FreePotential
from contnorm.potentials.square_barrier import SquareBarrierPotential
from contnorm.potentials.square_well import SquareWellPotential

WELL = SquareWellPotential(v0=1.0, a=1.0)


def test_free_delta_strength_is_pi():
    """
    int cos(kx) cos(k'x) dx = pi delta(k - k'), and |A| = 1/2.
    """
    state = normalized_state(FreePotential(), 1.0, "even", SolverConfig())
    assert math.isclose(state.delta_strength, math.pi, rel_tol=1e-15)
    assert math.isclose(delta_strength(state.amplitude), math.pi, rel_tol=1e-15)


def test_square_well_delta_strength():
    state = normalized_state(WELL, 1.0, "even", SolverConfig())
    assert math.isclose(state.delta_strength, 9.2629, rel_tol=1e-4)
    assert math.isclose(state.norm_constant, 0.32856, rel_tol=1e-4)


def test_delta_strength_is_quadratic_in_scale():
    amplitude = AsymptoticAmplitude.from_complex(1.0, Parity.EVEN, complex(0.3, -0.4))
    assert math.isclose(delta_strength(amplitude.scaled(3.0)), 9.0 * delta_strength(amplitude),
                        rel_tol=1e-14)


@pytest.mark.parametrize("parity, shape", [("even", np.cos), ("odd", np.sin)])
def test_normalized_free_states(parity, shape):
    """
    The free states become cos(kx) / sqrt(pi) and sin(kx) / sqrt(pi).
    """
    k = 1.7
    state = normalized_state(FreePotential(), k, parity, SolverConfig())
    assert math.isclose(state.norm_constant, 1.0 / math.sqrt(math.pi), rel_tol=1e-15)
    extended = extend_samples(state.samples, state.normalized_amplitude, 2.0)
    assert np.allclose(extended.psi, shape(k * extended.xs) / math.sqrt(math.pi), rtol=0.0, atol=1e-14)


@pytest.mark.parametrize("potential", [WELL, SquareBarrierPotential(v0=2.0, a=0.5), FreePotential()])
@pytest.mark.parametrize("parity", ["even", "odd"])
def test_unit_delta_strength(potential, parity):
    """
    c^2 * 4 pi |A|^2 = 1 for every normalized state.
    """
    state = normalized_state(potential, 0.9, parity, SolverConfig())
    assert state.norm_constant > 0
    assert math.isclose(state.normalized_delta_strength, 1.0, rel_tol=1e-14)
    assert math.isclose(state.normalized_amplitude.modulus, 1.0 / (2.0 * math.sqrt(math.pi)), rel_tol=1e-14)


def test_normalization_ignores_initial_scale():
    """
    Rescaled initial conditions give the same normalized state pointwise.
    """
    config = SolverConfig()
    base = propagate(WELL, 1.4, "odd", config)
    scaled = propagate(WELL, 1.4, "odd", config, initial_scale=7.5)
    a = normalize(base, extract_amplitude(base, 1.0))
    b = normalize(scaled, extract_amplitude(scaled, 1.0))
    assert math.isclose(b.delta_strength, 7.5 ** 2 * a.delta_strength, rel_tol=1e-12)
    assert np.max(np.abs(a.samples.psi - b.samples.psi)) <= 1e-12
    assert np.max(np.abs(a.samples.dpsi - b.samples.dpsi)) <= 1e-12


def test_zero_amplitude_is_refused():
    samples = propagate(WELL, 1.0, "even", SolverConfig())
    zero = AsymptoticAmplitude.from_complex(1.0, Parity.EVEN, 0j)
    with pytest.raises(ZeroAmplitudeError):
        normalize(samples, zero)


def test_normalized_even_and_odd_stay_orthogonal():
    config = SolverConfig()
    even = normalized_state(WELL, 2.1, "even", config)
    odd = normalized_state(WELL, 2.1, "odd", config)
    assert abs(overlap_quadrature(even.samples, odd.samples, -1.0, 1.0).value) <= 1e-10


def test_state_keeps_its_wavenumber():
    state = normalized_state(WELL, 0.35, "odd", SolverConfig())
    assert state.k == 0.35
    assert state.samples.parity is Parity.ODD
