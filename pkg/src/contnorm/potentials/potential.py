# contnorm/potentials/potential.py
from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

import numpy as np

DEFAULT_SUPPORT_TOLERANCE = 1e-12


class Potential(ABC):
    """
    Abstract base class for real, symmetric, finite-range potentials V(x).

    Concrete kinds (square well, square barrier, gaussian, free) share this
    interface so the integrator, the matching code and the CLI can use them
    interchangeably. Units follow hbar = 1; energies are in the same units
    as k^2 / (2m).

    Instances are immutable after construction and safe to evaluate from
    any number of threads.
    """

    kind: str = ""

    def __init__(self, support_tolerance: float = DEFAULT_SUPPORT_TOLERANCE):
        """
        Args:
            support_tolerance: Energy threshold epsilon_V below which a tail
                               of the potential is treated as zero
        """
        if not np.isfinite(support_tolerance) or support_tolerance < 0:
            raise ValueError(f"support_tolerance must be finite and >= 0, got {support_tolerance}")
        self._support_tolerance = float(support_tolerance)

    @property
    def support_tolerance(self) -> float:
        return self._support_tolerance

    @abstractmethod
    def _profile(self, ax: np.ndarray) -> np.ndarray:
        """
        Potential values at non-negative positions |x|.

        Args:
            ax: Array of absolute positions

        Returns:
            V(|x|) as a float array of the same shape
        """
        pass

    @abstractmethod
    def support_edge(self) -> float:
        """
        Right edge x_b of the effective support.

        Returns:
            x_b >= 0 such that |V(x)| <= epsilon_V for |x| >= x_b
        """
        pass

    @abstractmethod
    def params(self) -> Dict[str, float]:
        """
        Model parameters keyed by their config names.

        Returns:
            Dictionary of parameter name to value
        """
        pass

    @abstractmethod
    def get_display_name(self) -> str:
        """
        Get the display name of the potential.

        Returns:
            Display name including the model parameters
        """
        pass

    def evaluate(self, x: Any) -> Any:
        """
        Evaluate V(x).

        Symmetry is exact because only |x| is ever looked at.

        Args:
            x: Position or array of positions (finite)

        Returns:
            V(x) as a float for scalar input, otherwise an array
        """
        ax = np.abs(np.asarray(x, dtype=float))
        values = self._profile(ax)
        if np.ndim(values) == 0:
            return float(values)
        return values

    def support(self) -> Tuple[float, float]:
        """
        Effective support [x_a, x_b] with x_a = -x_b.

        Returns:
            Tuple (x_a, x_b)
        """
        x_b = self.support_edge()
        return -x_b, x_b

    def admits_bound_states(self) -> bool:
        """
        Whether the potential can bind a particle.

        In one dimension any potential that dips below zero somewhere (and is
        never positive, as for every kind here) has at least one bound state.
        """
        return False

    def to_record(self) -> Dict[str, Any]:
        """
        Serialize the potential by value.

        Returns:
            Flat record with kind, parameters and epsilon_v
        """
        record: Dict[str, Any] = {"kind": self.kind}
        record.update(self.params())
        record["epsilon_v"] = self._support_tolerance
        return record

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_record()})"
