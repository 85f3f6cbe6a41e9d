import cmath
import math

import numpy as np
import pytest

from contnorm.continuum.matching import (AsymptoticAmplitude, extend_samples, extract_amplitude,
                                         outer_form, outer_grid, phase_shift, resample, wave_at)
from contnorm.errors import InvalidWavenumberError, MatchingPointError
from contnorm.integrators.propagate import propagate
from contnorm.integrators.solver_config import SolverConfig
from contnorm.integrators.wave_samples import Parity, WaveSamples
from contnorm.potentials.free import FreePotential
from contnorm.potentials.gaussian import GaussianPotential
from contnorm.potentials.square_well import SquareWellPotential

WELL = SquareWellPotential(v0=1.0, a=1.0)


def _matched(potential, k, parity, config=None, **kwargs):
    samples = propagate(potential, k, parity, config or SolverConfig(), **kwargs)
    return samples, extract_amplitude(samples, samples.x_b)


@pytest.mark.parametrize("k", [0.3, 1.0, 4.0])
def test_free_even_amplitude(k):
    """
    cos(kx) = (e^{ikx} + e^{-ikx}) / 2, so A = 1/2.
    """
    _, amplitude = _matched(FreePotential(), k, "even")
    assert amplitude.value == 0.5
    assert amplitude.phase == 0.0
    assert phase_shift(amplitude) == 0.0


@pytest.mark.parametrize("k", [0.3, 1.0, 4.0])
def test_free_odd_amplitude(k):
    """
    sin(kx) = (e^{ikx} - e^{-ikx}) / 2i, so A = -i/2.
    """
    _, amplitude = _matched(FreePotential(), k, "odd")
    assert cmath.isclose(amplitude.value, -0.5j, abs_tol=1e-15)
    assert math.isclose(amplitude.modulus, 0.5, rel_tol=1e-15)
    assert math.isclose(amplitude.phase, -math.pi / 2, rel_tol=1e-15)
    # -pi/2 is outside (-pi/2, pi/2], so the reduced shift lands on +pi/2
    assert math.isclose(phase_shift(amplitude), math.pi / 2, rel_tol=1e-15)


def test_square_well_amplitude():
    """
    |A|^2 = (psi(1)^2 + psi'(1)^2) / 4 with psi = cos(sqrt(3) x) inside.
    """
    _, amplitude = _matched(WELL, 1.0, "even")
    assert math.isclose(amplitude.modulus ** 2, 0.73711, rel_tol=1e-4)
    assert math.isclose(amplitude.modulus, 0.85855, rel_tol=1e-4)
    assert amplitude.matched_at == 1.0


@pytest.mark.parametrize("k", np.linspace(0.2, 5.0, 20).tolist())
def test_square_well_amplitude_closed_form(k):
    """
    Even states of the well: |A|^2 = (cos^2 q + (q^2 / k^2) sin^2 q) / 4, q = sqrt(k^2 + 2).
    """
    _, amplitude = _matched(WELL, k, "even")
    q = math.sqrt(k * k + 2.0)
    expected = (math.cos(q) ** 2 + (q / k) ** 2 * math.sin(q) ** 2) / 4.0
    assert math.isclose(amplitude.modulus ** 2, expected, rel_tol=1e-8)


def test_outer_form_reproduces_edge_values():
    """
    psi_out and psi_out' agree with the propagated values at the match point.
    """
    samples, amplitude = _matched(WELL, 1.7, "odd")
    psi, dpsi = outer_form(amplitude, samples.x_b)
    assert math.isclose(psi, samples.psi[-1], rel_tol=1e-12, abs_tol=1e-14)
    assert math.isclose(dpsi, samples.dpsi[-1], rel_tol=1e-12, abs_tol=1e-14)


def test_outer_form_is_a_standing_wave():
    """
    psi_out = 2|A| cos(kx + arg A).
    """
    _, amplitude = _matched(WELL, 2.2, "even")
    xs = np.linspace(1.0, 10.0, 37)
    psi, _ = outer_form(amplitude, xs)
    expected = 2.0 * amplitude.modulus * np.cos(2.2 * xs + amplitude.phase)
    assert np.allclose(psi, expected, rtol=0.0, atol=1e-12)


@pytest.mark.parametrize("parity", ["even", "odd"])
def test_extraction_point_independence(parity):
    """
    Matching anywhere outside the support gives the same A.
    """
    bump = GaussianPotential(v0=1.5, w=0.4)
    samples, amplitude = _matched(bump, 1.1, parity)
    extended = extend_samples(samples, amplitude, samples.x_b + 5.0)
    for x in (float(extended.xs[extended.interior_count + 100]), extended.x_end):
        other = extract_amplitude(extended, x)
        assert math.isclose(other.modulus, amplitude.modulus, rel_tol=1e-10)
        assert math.isclose(other.phase, amplitude.phase, rel_tol=1e-10, abs_tol=1e-12)


def test_matching_inside_support_is_refused():
    samples = propagate(WELL, 1.0, "even", SolverConfig())
    with pytest.raises(MatchingPointError):
        extract_amplitude(samples, 0.5)


def test_matching_needs_positive_k():
    samples = WaveSamples(k=0.0, parity=Parity.EVEN, xs=[0.0], psi=[1.0], dpsi=[0.0],
                          config=SolverConfig(), x_b=0.0)
    with pytest.raises(InvalidWavenumberError):
        extract_amplitude(samples, 0.0)


def test_amplitude_is_linear_in_the_state():
    """
    Scaling the initial conditions by c scales A by c.
    """
    _, base = _matched(WELL, 0.8, "odd")
    _, tripled = _matched(WELL, 0.8, "odd", initial_scale=3.0)
    assert cmath.isclose(tripled.value, 3.0 * base.value, rel_tol=1e-13)
    assert math.isclose(base.scaled(3.0).modulus, tripled.modulus, rel_tol=1e-13)


def test_phase_range():
    """
    arg A lies in (-pi, pi]; the negative real axis maps to +pi.
    """
    amplitude = AsymptoticAmplitude.from_complex(1.0, Parity.EVEN, complex(-1.0, -0.0))
    assert amplitude.phase == math.pi
    assert phase_shift(amplitude) == 0.0


@pytest.mark.parametrize("phase", [-3.0, -1.5, -0.2, 0.0, 0.9, 1.6, 3.1])
def test_phase_shift_reduction(phase):
    amplitude = AsymptoticAmplitude.from_complex(1.0, Parity.EVEN, cmath.rect(0.7, phase))
    reduced = phase_shift(amplitude)
    assert -math.pi / 2 < reduced <= math.pi / 2
    multiple = (amplitude.phase - reduced) / math.pi
    assert math.isclose(multiple, round(multiple), abs_tol=1e-12)


def test_wave_at_interpolates_the_interior():
    """
    Off-node values inside the well follow cos(sqrt(3) x).
    """
    samples, amplitude = _matched(WELL, 1.0, "even")
    q = math.sqrt(3.0)
    xs = np.array([0.0003, 0.5003, 0.9991])
    psi, dpsi = wave_at(samples, amplitude, xs)
    assert np.allclose(psi, np.cos(q * xs), rtol=0.0, atol=1e-9)
    assert np.allclose(dpsi, -q * np.sin(q * xs), rtol=0.0, atol=1e-8)


def test_wave_at_uses_parity_and_outer_form():
    samples, amplitude = _matched(WELL, 1.0, "odd")
    psi_pos, dpsi_pos = wave_at(samples, amplitude, 0.42)
    psi_neg, dpsi_neg = wave_at(samples, amplitude, -0.42)
    assert psi_neg == -psi_pos
    assert dpsi_neg == dpsi_pos

    outside, _ = wave_at(samples, amplitude, 3.3)
    assert outside == outer_form(amplitude, 3.3)[0]


def test_extend_samples_shares_the_grid():
    """
    States of the same potential and config extend onto identical grids.
    """
    config = SolverConfig()
    a, amp_a = _matched(WELL, 1.0, "even", config)
    b, amp_b = _matched(WELL, 2.5, "even", config)
    ext_a = extend_samples(a, amp_a, 4.0)
    ext_b = extend_samples(b, amp_b, 4.0)
    assert np.array_equal(ext_a.xs, ext_b.xs)
    assert ext_a.x_end == 4.0
    assert ext_a.x_b == 1.0
    assert np.array_equal(ext_a.psi[: a.xs.size], a.psi)
    assert extend_samples(a, amp_a, 0.5) is a


def test_outer_grid_spacing():
    nodes = outer_grid(1.0, 1e-3, 2.0)
    assert nodes[0] > 1.0
    assert nodes[-1] == 2.0
    assert np.max(np.diff(nodes)) <= 1e-3 * (1.0 + 1e-9)
    assert outer_grid(1.0, 1e-3, 1.0).size == 0


def test_resample_onto_a_new_grid():
    samples, amplitude = _matched(WELL, 1.0, "even")
    grid = np.array([0.0, 0.25, 1.0, 2.0])
    moved = resample(samples, amplitude, grid)
    assert moved.value_at(1.0) == pytest.approx(samples.psi[-1], abs=1e-12)
    assert moved.value_at(2.0) == pytest.approx(outer_form(amplitude, 2.0)[0], abs=1e-14)
    with pytest.raises(ValueError):
        resample(samples, amplitude, [0.1, 0.2])
    with pytest.raises(ValueError):
        resample(samples, amplitude, [0.0, 0.2, 0.2])
