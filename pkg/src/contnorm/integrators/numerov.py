# contnorm/integrators/numerov.py
from typing import Tuple

import numpy as np

# imports
from contnorm.integrators.propagator import Coefficient, Propagator
from contnorm.integrators.registry import PropagatorRegistry

# One-sided fourth-order first-derivative stencil on the last five nodes
_ENDPOINT_STENCIL = np.array([3.0, -16.0, 36.0, -48.0, 25.0]) / 12.0


class NumerovPropagator(Propagator):
    """
    Numerov integration of psi'' = f(x) psi.

    The recurrence

        g_{i+1} psi_{i+1} = (12 - 10 g_i) psi_i - g_{i-1} psi_{i-1},
        g_i = 1 - h^2 f_i / 12

    is sixth order locally and fourth order globally. Derivatives are
    reconstructed afterwards at matching order: the Numerov-consistent
    central formula inside the grid, a one-sided 5-point stencil at the
    last node.
    """

    def integrate(self, xs: np.ndarray, f: Coefficient,
                  psi0: float, dpsi0: float) -> Tuple[np.ndarray, np.ndarray]:
        n = xs.size - 1
        h = float(xs[1] - xs[0])
        fx = np.asarray(f(xs), dtype=float)
        g = 1.0 - (h * h / 12.0) * fx

        # first step: even part from the symmetric Numerov step across x = 0
        # (f(-h) = f(h)), odd part from the Taylor series of psi'' = f psi
        f0 = float(fx[0])
        even_start = (6.0 - 5.0 * g[0]) / g[1]
        odd_start = h + f0 * h ** 3 / 6.0 + f0 * f0 * h ** 5 / 120.0
        psi1 = psi0 * even_start + dpsi0 * odd_start

        # plain floats: this loop is the hot path
        gl = g.tolist()
        psi = [0.0] * (n + 1)
        psi[0] = float(psi0)
        psi[1] = float(psi1)
        for i in range(1, n):
            psi[i + 1] = ((12.0 - 10.0 * gl[i]) * psi[i] - gl[i - 1] * psi[i - 1]) / gl[i + 1]
        psi_arr = np.array(psi)

        dpsi = np.empty_like(psi_arr)
        dpsi[0] = dpsi0
        w = 1.0 - (h * h / 6.0) * fx
        dpsi[1:-1] = (w[2:] * psi_arr[2:] - w[:-2] * psi_arr[:-2]) / (2.0 * h)
        dpsi[-1] = float(_ENDPOINT_STENCIL @ psi_arr[-5:]) / h
        return psi_arr, dpsi

    def get_display_name(self) -> str:
        return "Numerov"


# Register the Numerov scheme
PropagatorRegistry.register("numerov", NumerovPropagator)
