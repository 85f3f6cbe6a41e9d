# contnorm/integrators/propagator.py
from abc import ABC, abstractmethod
from typing import Callable, Tuple

import numpy as np

# f(x) in psi'' = f(x) psi, vectorized over positions
Coefficient = Callable[[np.ndarray], np.ndarray]


class Propagator(ABC):
    """
    Abstract base class for schemes that integrate psi'' = f(x) psi on a grid.

    This provides a common interface so Numerov and the Runge-Kutta
    reference path can be used interchangeably by ``propagate``.
    """

    @abstractmethod
    def integrate(self, xs: np.ndarray, f: Coefficient,
                  psi0: float, dpsi0: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Integrate from xs[0] = 0 to xs[-1].

        Args:
            xs: Uniform grid starting at the symmetry point x = 0
            f: Coefficient function, symmetric in x
            psi0: psi(0)
            dpsi0: psi'(0)

        Returns:
            Tuple (psi, dpsi) sampled on xs
        """
        pass

    @abstractmethod
    def get_display_name(self) -> str:
        """
        Get the display name of the propagation scheme.

        Returns:
            Display name
        """
        pass
