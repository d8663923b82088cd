"""Exception types shared across the package.

The CLI maps these onto its exit codes: ConfigError and DomainError exit
with 2, SizeError with 3.
"""


class VortcavError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(VortcavError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigError(VortcavError, ValueError):
    """A configuration value or combination of values is invalid."""


class SizeError(VortcavError, ValueError):
    """A problem size exceeds a hard cap (e.g. the exact-enumeration limit)."""
