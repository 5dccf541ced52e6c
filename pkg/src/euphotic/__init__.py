"""Exact combinatorics of euphotic automorphic data: facets, gradings, Hessenberg weights and case lists."""

__version__ = "0.1.0"

from .errors import CapabilityError, ConsistencyError, InputError
from .roots import RootSystem, build

__all__ = ["build", "RootSystem", "InputError", "CapabilityError", "ConsistencyError", "__version__"]
