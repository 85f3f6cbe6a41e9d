# contnorm/integrators/solver_config.py
import math
from dataclasses import dataclass

# Minimum number of cells across the interior region [0, x_b]
MIN_INTERIOR_CELLS = 16

DEFAULT_STEP = 1e-3
DEFAULT_METHOD = "numerov"
KNOWN_METHODS = ("numerov", "rk4-reference")


@dataclass(frozen=True)
class SolverConfig:
    """
    Numerical settings for interior propagation.

    Attributes:
        mass: Particle mass m > 0 (hbar = 1, so E = k^2 / (2m))
        step: Target grid step h > 0 (length units)
        method: Propagation scheme, "numerov" or "rk4-reference"
    """
    mass: float = 1.0
    step: float = DEFAULT_STEP
    method: str = DEFAULT_METHOD

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise ValueError(f"mass must be finite and positive, got {self.mass}")
        if not (math.isfinite(self.step) and self.step > 0):
            raise ValueError(f"step must be finite and positive, got {self.step}")
        if self.method not in KNOWN_METHODS:
            raise ValueError(f"Unsupported propagation method: {self.method}. "
                             f"Available methods: {', '.join(KNOWN_METHODS)}")

    def energy(self, k: float) -> float:
        """E = k^2 / (2m)."""
        return k * k / (2.0 * self.mass)
