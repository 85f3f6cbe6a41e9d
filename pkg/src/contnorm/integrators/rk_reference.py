# contnorm/integrators/rk_reference.py
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp

# imports
from contnorm.errors import IntegratorBlowUpError
from contnorm.integrators.propagator import Coefficient, Propagator
from contnorm.integrators.registry import PropagatorRegistry


class RungeKuttaReferencePropagator(Propagator):
    """
    Independent cross-check path: the first-order system (psi, psi') solved
    with scipy's adaptive Runge-Kutta 4(5) pair at tight tolerances.

    Slower than Numerov and only meant as an oracle.
    """

    def __init__(self, rtol: float = 1e-12, atol: float = 1e-14):
        """
        Args:
            rtol: Relative tolerance handed to solve_ivp
            atol: Absolute tolerance handed to solve_ivp
        """
        self.rtol = rtol
        self.atol = atol

    def integrate(self, xs: np.ndarray, f: Coefficient,
                  psi0: float, dpsi0: float) -> Tuple[np.ndarray, np.ndarray]:
        def rhs(x, y):
            return [y[1], float(f(np.asarray(x))) * y[0]]

        sol = solve_ivp(rhs, (float(xs[0]), float(xs[-1])), [float(psi0), float(dpsi0)],
                        method="RK45", t_eval=xs, rtol=self.rtol, atol=self.atol)
        if not sol.success:
            raise IntegratorBlowUpError(f"Runge-Kutta reference failed: {sol.message}")
        return sol.y[0].copy(), sol.y[1].copy()

    def get_display_name(self) -> str:
        return "Runge-Kutta 4(5) reference"


# Register the reference scheme
PropagatorRegistry.register("rk4-reference", RungeKuttaReferencePropagator)
