# contnorm/continuum/overlap.py
"""
Overlap integrals I = int_{x1}^{x2} psi_k psi_k' dx of two stationary states.

For k != k' integration by parts against the Schrödinger equation turns
the integral into boundary terms:

    I = [psi_{k'}'(x) psi_k(x) - psi_k'(x) psi_{k'}(x)]_{x1}^{x2} / (k^2 - k'^2)

Composite Simpson quadrature is kept as an independent oracle and as the
k' -> k limit.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from scipy.integrate import simpson

# imports
from contnorm.continuum.matching import AsymptoticAmplitude, outer_form
from contnorm.errors import DegenerateWavenumberError, IncompatibleGridError
from contnorm.integrators.wave_samples import WaveSamples
from contnorm.logging_config import get_logger

logger = get_logger(__name__)

# |k - k'| below DEGENERACY_RATIO * max(k, k') is refused by the boundary formula
DEGENERACY_RATIO = 1e-6


class OverlapMethod(str, Enum):
    WRONSKIAN = "wronskian"
    QUADRATURE = "quadrature"
    EQUAL_K_LIMIT = "equal-k-limit"
    OUTER_WRONSKIAN = "outer-wronskian"


@dataclass(frozen=True)
class OverlapResult:
    """
    Value of an overlap integral, tagged by how it was computed.

    Attributes:
        value: The integral
        k: Wavenumber of the first state
        kprime: Wavenumber of the second state
        interval: (x1, x2)
        method: Evaluation method
    """
    value: float
    k: float
    kprime: float
    interval: Tuple[float, float]
    method: OverlapMethod


def is_degenerate(k: float, kprime: float) -> bool:
    """Whether the boundary formula would lose all precision for this pair."""
    return abs(k - kprime) < DEGENERACY_RATIO * max(k, kprime)


def _check_pair(k: float, kprime: float) -> None:
    if is_degenerate(k, kprime):
        raise DegenerateWavenumberError(
            f"|k - k'| = {abs(k - kprime):.3g} is below the degeneracy threshold "
            f"{DEGENERACY_RATIO * max(k, kprime):.3g}; use overlap_equal_k")


def _boundary_term(psi_a: float, dpsi_a: float, psi_b: float, dpsi_b: float) -> float:
    # psi_b' psi_a - psi_a' psi_b
    return dpsi_b * psi_a - dpsi_a * psi_b


def _wronskian_at(a: WaveSamples, b: WaveSamples, x: float) -> float:
    # at -x the term picks up -s_a s_b
    ax = abs(x)
    w = _boundary_term(a.value_at(ax), a.slope_at(ax), b.value_at(ax), b.slope_at(ax))
    if x < 0:
        w *= -a.parity.sign * b.parity.sign
    return w


def overlap_wronskian(a: WaveSamples, b: WaveSamples, x1: float, x2: float) -> OverlapResult:
    """
    Overlap from the Wronskian boundary terms at x1 and x2.

    Args:
        a: State psi_k
        b: State psi_k'
        x1: Lower limit (grid node, possibly mirrored)
        x2: Upper limit (grid node, possibly mirrored)

    Returns:
        OverlapResult tagged "wronskian"

    Raises:
        DegenerateWavenumberError: If k and k' are too close
        OffGridError: If a limit is not a node of both grids
    """
    _check_pair(a.k, b.k)
    upper = _wronskian_at(a, b, x2)
    lower = _wronskian_at(a, b, x1)
    value = (upper - lower) / (a.k * a.k - b.k * b.k)
    return OverlapResult(value=value, k=a.k, kprime=b.k, interval=(x1, x2),
                         method=OverlapMethod.WRONSKIAN)


def _check_grids(a: WaveSamples, b: WaveSamples) -> None:
    if a is b:
        return
    if a.xs.shape != b.xs.shape or not np.array_equal(a.xs, b.xs):
        raise IncompatibleGridError(
            f"states k={a.k} and k'={b.k} are sampled on different grids; "
            "propagate both with the same potential and config, or resample")


def _cumulative(a: WaveSamples, b: WaveSamples, x: float) -> float:
    """int_0^x psi_a psi_b dx, with negative x folded by parity."""
    i = a.node_index(x)
    if i == 0:
        return 0.0
    product = a.psi[: i + 1] * b.psi[: i + 1]
    positive = float(simpson(product, x=a.xs[: i + 1]))
    if x < 0:
        return -a.parity.sign * b.parity.sign * positive
    return positive


def overlap_quadrature(a: WaveSamples, b: WaveSamples, x1: float, x2: float) -> OverlapResult:
    """
    Overlap by composite Simpson quadrature on the shared grid.

    Args:
        a: State psi_k
        b: State psi_k'
        x1: Lower limit (grid node, possibly mirrored)
        x2: Upper limit (grid node, possibly mirrored)

    Returns:
        OverlapResult tagged "quadrature"

    Raises:
        IncompatibleGridError: If the states are on different grids
        OffGridError: If a limit is not a grid node
    """
    _check_grids(a, b)
    value = _cumulative(a, b, x2) - _cumulative(a, b, x1)
    return OverlapResult(value=value, k=a.k, kprime=b.k, interval=(x1, x2),
                         method=OverlapMethod.QUADRATURE)


def overlap_equal_k(a: WaveSamples, x1: float, x2: float) -> OverlapResult:
    """
    int psi_k^2 over [x1, x2], the k' -> k limit of the boundary formula.

    Computed by quadrature; the analytic limit would need d psi / dk.

    Args:
        a: State psi_k
        x1: Lower limit
        x2: Upper limit

    Returns:
        OverlapResult tagged "equal-k-limit"
    """
    value = _cumulative(a, a, x2) - _cumulative(a, a, x1)
    return OverlapResult(value=value, k=a.k, kprime=a.k, interval=(x1, x2),
                         method=OverlapMethod.EQUAL_K_LIMIT)


def overlap_outer(amp_a: AsymptoticAmplitude, amp_b: AsymptoticAmplitude,
                  x1: float, x2: float) -> OverlapResult:
    """
    The boundary expression evaluated from the outer forms only.

    By continuity of psi and psi' at the support edges, evaluating the
    Wronskian terms with psi_out instead of the interior solution gives the
    same interior overlap: only psi_out is needed.

    Args:
        amp_a: Amplitude of psi_k
        amp_b: Amplitude of psi_k'
        x1: Lower limit (outside or on the edge of the support)
        x2: Upper limit (outside or on the edge of the support)

    Returns:
        OverlapResult tagged "outer-wronskian"
    """
    _check_pair(amp_a.k, amp_b.k)

    def term(x):
        psi_a, dpsi_a = outer_form(amp_a, x)
        psi_b, dpsi_b = outer_form(amp_b, x)
        return _boundary_term(psi_a, dpsi_a, psi_b, dpsi_b)

    value = (term(x2) - term(x1)) / (amp_a.k ** 2 - amp_b.k ** 2)
    return OverlapResult(value=value, k=amp_a.k, kprime=amp_b.k, interval=(x1, x2),
                         method=OverlapMethod.OUTER_WRONSKIAN)


def overlap(a: WaveSamples, b: WaveSamples, x1: float, x2: float) -> OverlapResult:
    """
    Boundary-formula overlap, falling back to the equal-k limit when k ~ k'.

    Never lets a 0/0 through.
    """
    if is_degenerate(a.k, b.k):
        logger.debug("k=%.9g and k'=%.9g are degenerate; using the equal-k limit", a.k, b.k)
        return overlap_equal_k(a, x1, x2)
    return overlap_wronskian(a, b, x1, x2)


def wronskian_profile(a: WaveSamples, b: WaveSamples) -> np.ndarray:
    """
    W(x) = psi_a(x) psi_b'(x) - psi_a'(x) psi_b(x) on the shared grid.

    Constant for two solutions at the same k.
    """
    _check_grids(a, b)
    return a.psi * b.dpsi - a.dpsi * b.psi


def relative_gap(x: float, y: float) -> float:
    """|x - y| / max(1, |y|), the comparison used for the boundary formula."""
    return abs(x - y) / max(1.0, abs(y))
