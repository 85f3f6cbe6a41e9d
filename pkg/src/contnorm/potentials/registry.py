# contnorm/potentials/registry.py
import importlib
from typing import Dict, List, Optional, Type

# imports
from contnorm.potentials.potential import Potential

_BUILTIN_MODULES = (
    "contnorm.potentials.square_well",
    "contnorm.potentials.square_barrier",
    "contnorm.potentials.gaussian",
    "contnorm.potentials.free",
)


class PotentialRegistry:
    """
    Registry for available potential kinds.
    """
    _registry: Dict[str, Type[Potential]] = {}

    @classmethod
    def register(cls, name: str, potential_cls: Type[Potential]):
        """
        Register a potential kind.

        Args:
            name: Kind name as used in config files (e.g. "square-well")
            potential_cls: Potential class
        """
        cls._registry[name.lower()] = potential_cls

    @classmethod
    def get(cls, name: str, **kwargs) -> Optional[Potential]:
        """
        Get a potential by kind.

        Args:
            name: Kind name
            **kwargs: Parameters passed to the potential constructor

        Returns:
            Initialized potential or None if the kind is unknown
        """
        potential_cls = cls._registry.get(name.lower())
        if potential_cls:
            return potential_cls(**kwargs)
        return None

    @classmethod
    def list_available(cls) -> List[str]:
        """
        List all registered kinds.

        Returns:
            Sorted list of registered kind names
        """
        return sorted(cls._registry.keys())


def load_builtin_kinds() -> None:
    """Import the built-in kind modules so they register themselves."""
    for module_name in _BUILTIN_MODULES:
        importlib.import_module(module_name)


def get_potential(kind: str, **kwargs) -> Potential:
    """
    Factory function to get a potential by kind.

    Args:
        kind: Kind name ("square-well", "square-barrier", "gaussian", "free")
        **kwargs: Parameters passed to the potential constructor

    Returns:
        Initialized potential

    Raises:
        ValueError: If the requested kind is not supported
    """
    load_builtin_kinds()
    potential = PotentialRegistry.get(kind, **kwargs)
    if potential is None:
        available = PotentialRegistry.list_available()
        raise ValueError(f"Unsupported potential kind: {kind}. "
                         f"Available kinds: {', '.join(available)}")
    return potential
