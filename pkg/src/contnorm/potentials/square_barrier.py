# contnorm/potentials/square_barrier.py
from typing import Dict

import numpy as np

# imports
from contnorm.potentials.potential import DEFAULT_SUPPORT_TOLERANCE, Potential
from contnorm.potentials.registry import PotentialRegistry


class SquareBarrierPotential(Potential):
    """
    Repulsive square barrier: V(x) = +V0 for |x| < a, 0 otherwise.
    """

    kind = "square-barrier"

    def __init__(self, v0: float, a: float,
                 support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE):
        """
        Initialize the square barrier.

        Args:
            v0: Height V0 (energy units). Negative heights turn it into a well.
            a: Half-width (length units), must be positive
            support_tolerance: Unused for compact kinds, kept for serialization
        """
        super().__init__(support_tolerance)
        if not np.isfinite(v0):
            raise ValueError(f"V0 must be finite, got {v0}")
        if not (np.isfinite(a) and a > 0):
            raise ValueError(f"a must be finite and positive, got {a}")
        self._v0 = float(v0)
        self._a = float(a)

    @property
    def v0(self) -> float:
        return self._v0

    @property
    def a(self) -> float:
        return self._a

    def _profile(self, ax: np.ndarray) -> np.ndarray:
        return np.where(ax < self._a, self._v0, 0.0)

    def support_edge(self) -> float:
        return self._a

    def params(self) -> Dict[str, float]:
        return {"V0": self._v0, "a": self._a}

    def admits_bound_states(self) -> bool:
        return self._v0 < 0

    def get_display_name(self) -> str:
        return f"Square barrier (V0={self._v0:g}, a={self._a:g})"


# Register the square barrier
PotentialRegistry.register("square-barrier", SquareBarrierPotential)
