"""
Identity factory - registers the named identity systems and resolves
names or JSON files to IdentitySystem instances
"""
import logging
import os
from typing import Dict, List, Optional

from data.identity_io import load_identity_system

from .identity_system import IdentitySystem
from .presets import PRESETS

logger = logging.getLogger(__name__)


class IdentityFactory:
    """
    Registry of identity systems.

    Names resolve to presets; anything else that points at an existing file
    is loaded as a JSON identity system.
    """

    def __init__(self):
        self._systems: Dict[str, IdentitySystem] = dict(PRESETS)
        # Loaded files are cached by path
        self._loaded: Dict[str, IdentitySystem] = {}

    def register(self, system: IdentitySystem):
        self._systems[system.name] = system

    def get_available_systems(self) -> List[str]:
        return list(self._systems.keys())

    def get_system(self, name: str, idempotent: Optional[bool] = None) -> IdentitySystem:
        if name in self._systems:
            system = self._systems[name]
        elif os.path.isfile(name):
            if name not in self._loaded:
                self._loaded[name] = load_identity_system(name)
            system = self._loaded[name]
        else:
            raise ValueError(f"Unknown identity system: {name}")

        if idempotent is not None and idempotent != system.idempotent:
            system = system.with_idempotent(idempotent)
        logger.debug(f"identity system {system.name}: {system.describe()}")
        return system


# Global factory instance
identity_factory = IdentityFactory()


def get_available_systems() -> List[str]:
    return identity_factory.get_available_systems()


def get_system(name: str, idempotent: Optional[bool] = None) -> IdentitySystem:
    return identity_factory.get_system(name, idempotent)
