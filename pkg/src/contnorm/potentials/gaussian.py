# contnorm/potentials/gaussian.py
import math
from typing import Dict

import numpy as np

# imports
from contnorm.potentials.potential import DEFAULT_SUPPORT_TOLERANCE, Potential
from contnorm.potentials.registry import PotentialRegistry


class GaussianPotential(Potential):
    """
    Gaussian bump: V(x) = V0 * exp(-x^2 / (2 w^2)).

    Positive V0 is a barrier, negative V0 a well. The tails never vanish,
    so the support is truncated where |V| drops to epsilon_V:

        x_b = w * sqrt(2 * ln(|V0| / epsilon_V))
    """

    kind = "gaussian"

    def __init__(self, v0: float, w: float,
                 support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE):
        """
        Initialize the gaussian potential.

        Args:
            v0: Peak value V0 (energy units)
            w: Width scale (length units), must be positive
            support_tolerance: Truncation threshold epsilon_V, must be positive
        """
        super().__init__(support_tolerance)
        if not support_tolerance > 0:
            raise ValueError("gaussian potentials need a positive support tolerance")
        if not np.isfinite(v0):
            raise ValueError(f"V0 must be finite, got {v0}")
        if not (np.isfinite(w) and w > 0):
            raise ValueError(f"w must be finite and positive, got {w}")
        self._v0 = float(v0)
        self._w = float(w)

    @property
    def v0(self) -> float:
        return self._v0

    @property
    def w(self) -> float:
        return self._w

    def _profile(self, ax: np.ndarray) -> np.ndarray:
        return self._v0 * np.exp(-0.5 * (ax / self._w) ** 2)

    def support_edge(self) -> float:
        peak = abs(self._v0)
        if peak <= self._support_tolerance:
            return 0.0
        return self._w * math.sqrt(2.0 * math.log(peak / self._support_tolerance))

    def params(self) -> Dict[str, float]:
        return {"V0": self._v0, "w": self._w}

    def admits_bound_states(self) -> bool:
        return self._v0 < 0

    def get_display_name(self) -> str:
        return f"Gaussian (V0={self._v0:g}, w={self._w:g}, eps={self._support_tolerance:g})"


# Register the gaussian potential
PotentialRegistry.register("gaussian", GaussianPotential)
