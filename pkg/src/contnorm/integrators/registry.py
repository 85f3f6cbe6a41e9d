# contnorm/integrators/registry.py
import importlib
from typing import Dict, List, Optional, Type

# imports
from contnorm.integrators.propagator import Propagator

_BUILTIN_MODULES = (
    "contnorm.integrators.numerov",
    "contnorm.integrators.rk_reference",
)


class PropagatorRegistry:
    """
    Registry for available propagation schemes.
    """
    _registry: Dict[str, Type[Propagator]] = {}

    @classmethod
    def register(cls, name: str, propagator_cls: Type[Propagator]):
        """
        Register a propagation scheme.

        Args:
            name: Method name as used in SolverConfig
            propagator_cls: Propagator class
        """
        cls._registry[name.lower()] = propagator_cls

    @classmethod
    def get(cls, name: str, **kwargs) -> Optional[Propagator]:
        """
        Get a propagator by name.

        Args:
            name: Method name
            **kwargs: Additional parameters to pass to the propagator constructor

        Returns:
            Initialized propagator or None if not found
        """
        propagator_cls = cls._registry.get(name.lower())
        if propagator_cls:
            return propagator_cls(**kwargs)
        return None

    @classmethod
    def list_available(cls) -> List[str]:
        """
        List all registered schemes.

        Returns:
            Sorted list of method names
        """
        return sorted(cls._registry.keys())


def get_propagator(method: str, **kwargs) -> Propagator:
    """
    Factory function to get a propagator by method name.

    Args:
        method: Method name ("numerov" or "rk4-reference")
        **kwargs: Additional parameters to pass to the propagator constructor

    Returns:
        Initialized propagator

    Raises:
        ValueError: If the requested method is not supported
    """
    for module_name in _BUILTIN_MODULES:
        importlib.import_module(module_name)
    propagator = PropagatorRegistry.get(method, **kwargs)
    if propagator is None:
        available = PropagatorRegistry.list_available()
        raise ValueError(f"Unsupported propagation method: {method}. "
                         f"Available methods: {', '.join(available)}")
    return propagator
