"""CODATA 2018 constants registry.

Every formula in :mod:`vortcav.physics` pulls its constants from a
:class:`PhysicalConstants` instance instead of hard-coding numbers, so a
caller can rerun the whole derivation with, say, a hypothetical particle
mass by passing a modified registry.
"""

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in SI units (CODATA 2018).

    hbar      reduced Planck constant, J s
    e_charge  elementary charge, C
    k_B       Boltzmann constant, J/K
    m_he3     mass of a helium-3 atom, kg
    m_he4     mass of a helium-4 atom, kg
    """

    hbar: float = 1.054571817e-34
    e_charge: float = 1.602176634e-19
    k_B: float = 1.380649e-23
    m_he3: float = 5.0082e-27
    m_he4: float = 6.6464731e-27

    def __post_init__(self) -> None:
        for name in ("hbar", "e_charge", "k_B", "m_he3", "m_he4"):
            if getattr(self, name) <= 0:
                raise DomainError(f"constant {name} must be strictly positive")


CODATA = PhysicalConstants()
