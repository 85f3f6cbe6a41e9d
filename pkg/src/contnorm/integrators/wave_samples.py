# contnorm/integrators/wave_samples.py
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

# imports
from contnorm.errors import OffGridError
from contnorm.integrators.solver_config import SolverConfig


class Parity(str, Enum):
    """Spatial symmetry of a stationary state under x -> -x."""
    EVEN = "even"
    ODD = "odd"

    @property
    def sign(self) -> int:
        """+1 for even states (psi(-x) = psi(x)), -1 for odd ones."""
        return 1 if self is Parity.EVEN else -1

    @classmethod
    def coerce(cls, value: Union["Parity", str]) -> "Parity":
        if isinstance(value, Parity):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Unknown parity: {value}. Expected 'even' or 'odd'") from None


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class WaveSamples:
    """
    Real stationary solution psi and its derivative tabulated on [0, x_end].

    Negative positions are implied by parity. Nodes up to ``x_b`` come from
    propagation through the potential; nodes beyond it (if any) come from
    the exact free outer form.

    Attributes:
        k: Wavenumber (> 0)
        parity: Even or odd
        xs: Increasing grid starting at 0
        psi: psi(x_i)
        dpsi: psi'(x_i)
        config: Solver settings the samples were produced with
        x_b: Right edge of the potential's support (last interior node)
    """
    k: float
    parity: Parity
    xs: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    config: SolverConfig
    x_b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", _frozen(self.xs))
        object.__setattr__(self, "psi", _frozen(self.psi))
        object.__setattr__(self, "dpsi", _frozen(self.dpsi))
        if not (self.xs.shape == self.psi.shape == self.dpsi.shape):
            raise ValueError("xs, psi and dpsi must have the same shape")

    @property
    def x_end(self) -> float:
        return float(self.xs[-1])

    @property
    def interior_count(self) -> int:
        """Number of nodes on [0, x_b]."""
        return int(np.searchsorted(self.xs, self.x_b, side="right"))

    def scaled(self, factor: float) -> "WaveSamples":
        """
        Samples multiplied by a constant.

        Args:
            factor: Multiplier applied to psi and dpsi

        Returns:
            New WaveSamples on the same grid
        """
        return WaveSamples(k=self.k, parity=self.parity, xs=self.xs,
                           psi=self.psi * factor, dpsi=self.dpsi * factor,
                           config=self.config, x_b=self.x_b)

    def node_index(self, x: float) -> int:
        """
        Index of the grid node at |x|.

        Args:
            x: Position; negative values refer to the mirrored node

        Returns:
            Index into xs

        Raises:
            OffGridError: If |x| is not a grid node
        """
        ax = abs(float(x))
        tolerance = 1e-9 * max(1.0, ax)
        i = int(np.searchsorted(self.xs, ax))
        for j in (i - 1, i):
            if 0 <= j < self.xs.size and abs(self.xs[j] - ax) <= tolerance:
                return j
        raise OffGridError(f"x={x} is not a node of the sample grid "
                           f"[0, {self.x_end}] (k={self.k}, {self.parity.value})")

    def value_at(self, x: float) -> float:
        """psi at a grid node, extended to x < 0 by parity."""
        i = self.node_index(x)
        sign = self.parity.sign if x < 0 else 1
        return sign * float(self.psi[i])

    def slope_at(self, x: float) -> float:
        """psi' at a grid node, extended to x < 0 by parity (psi' has opposite parity)."""
        i = self.node_index(x)
        sign = -self.parity.sign if x < 0 else 1
        return sign * float(self.dpsi[i])
