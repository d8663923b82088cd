"""Superfluid/Abrikosov vortex lattice physics, a triangular-lattice Ising
engine with quenched site fields, and cavitation-rate enhancement reports."""

from .errors import ConfigError, DomainError, SizeError, VortcavError

__version__ = "0.1.0"

__all__ = ["ConfigError", "DomainError", "SizeError", "VortcavError", "__version__"]
