# contnorm/potentials/free.py
from typing import Dict

import numpy as np

# imports
from contnorm.potentials.potential import Potential
from contnorm.potentials.registry import PotentialRegistry


class FreePotential(Potential):
    """
    V(x) = 0 everywhere. The support is the degenerate interval [0, 0].
    """

    kind = "free"

    def _profile(self, ax: np.ndarray) -> np.ndarray:
        return np.zeros_like(ax)

    def support_edge(self) -> float:
        return 0.0

    def params(self) -> Dict[str, float]:
        return {}

    def get_display_name(self) -> str:
        return "Free particle"


# Register the free potential
PotentialRegistry.register("free", FreePotential)
