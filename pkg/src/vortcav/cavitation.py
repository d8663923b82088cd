"""Cavitation rate and its vortex-coupling enhancement.

The base nucleation rate is J0*exp(-delta_omega_max/T_star) at the
thermal-to-quantum crossover; coupling the superfluid vortex lattice to
the Abrikosov flux lattice multiplies it by exp(sum_i b_i s_i). The
enhancement is evaluated either on a single spin configuration (instant)
or as a thermal ensemble average (the default for reports). All rate
arithmetic is carried in the log domain; linear values are convenience
outputs with explicit overflow flagging.
"""

import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .exact import ExactResult
from .lattice import TriangularLattice
from .stats import jackknife_logmeanexp

_MAX_EXPONENT = math.log(sys.float_info.max)


@dataclass(frozen=True)
class CavitationParams:
    """Base-rate inputs: prefactor J0 in bubbles/(m^3 s), nucleation barrier
    delta_omega_max and crossover temperature T_star in the same energy
    units (k_B absorbed)."""

    J0: float
    delta_omega_max: float
    T_star: float

    def __post_init__(self) -> None:
        if self.J0 < 0:
            raise DomainError("rate prefactor J0 must be non-negative")
        if self.T_star <= 0:
            raise DomainError("crossover temperature T_star must be positive")
        if self.delta_omega_max < 0:
            raise DomainError("nucleation barrier delta_omega_max must be non-negative")


@dataclass(frozen=True)
class EnhancementReport:
    """Log-domain enhancement factors from one configuration and from a
    thermal ensemble, with the ensemble's jackknife error (0 for the exact
    source, None for a single MC sample)."""

    ln_factor_instant: float
    ln_factor_thermal: float
    stderr_ln_factor: float | None
    source: str
    n_samples: int


@dataclass(frozen=True)
class RateResult:
    """A rate in log domain plus its linear value; `rate` is inf and
    `overflow` is set when the exponent is not representable."""

    ln_rate: float
    rate: float
    overflow: bool


def base_rate(p: CavitationParams) -> float:
    """Nucleation rate J0*exp(-delta_omega_max/T_star), bubbles/(m^3 s)."""
    return p.J0 * math.exp(-p.delta_omega_max / p.T_star)


def ln_base_rate(p: CavitationParams) -> float:
    """ln of the base rate; -inf when J0 = 0."""
    ln_j0 = math.log(p.J0) if p.J0 > 0 else -math.inf
    return ln_j0 - p.delta_omega_max / p.T_star


def enhancement_instant(lattice: TriangularLattice) -> float:
    """ln of the enhancement factor on one configuration: sum_i b_i*s_i.

    Returned in log domain so large lattices cannot overflow; depends only
    on the quenched fields and the spins, never on temperature.
    """
    return float(np.dot(lattice.fields.ravel(), lattice.spins.ravel()))


def enhancement_thermal(
    source: ExactResult | Sequence[float] | np.ndarray,
    lattice: TriangularLattice,
) -> EnhancementReport:
    """Thermally averaged enhancement ln<exp(sum_i b_i s_i)>.

    `source` is either an ExactResult (the oracle's log-domain average,
    zero error) or the sampled per-configuration ln-factors of an MC run
    (log-sum-exp average with a jackknife error). The instant factor is
    evaluated on the lattice as given.
    """
    instant = enhancement_instant(lattice)
    if isinstance(source, ExactResult):
        return EnhancementReport(
            ln_factor_instant=instant,
            ln_factor_thermal=source.ln_mean_exp_field,
            stderr_ln_factor=0.0,
            source="exact",
            n_samples=source.n_states,
        )
    values = np.asarray(source, dtype=float)
    if values.size == 0:
        raise DomainError("thermal enhancement needs at least one sampled ln-factor")
    estimate, stderr = jackknife_logmeanexp(values)
    return EnhancementReport(
        ln_factor_instant=instant,
        ln_factor_thermal=estimate,
        stderr_ln_factor=stderr,
        source="mc",
        n_samples=int(values.size),
    )


def enhanced_rate(
    p: CavitationParams, report: EnhancementReport, mode: str = "thermal"
) -> RateResult:
    """Base rate multiplied by the enhancement factor of the chosen mode.

    ln_rate is always exact; the linear rate is computed as
    J0*exp(ln_factor - delta_omega_max/T_star), which keeps neutral
    enhancements (ln_factor = 0) and exact barrier cancellations free of
    round-off, and is flagged as overflow when not representable.
    """
    if mode == "instant":
        ln_factor = report.ln_factor_instant
    elif mode == "thermal":
        ln_factor = report.ln_factor_thermal
    else:
        raise DomainError(f"unknown enhancement mode {mode!r}")
    exponent = ln_factor - p.delta_omega_max / p.T_star
    ln_rate = ln_base_rate(p) + ln_factor
    if exponent > _MAX_EXPONENT:
        return RateResult(ln_rate=ln_rate, rate=math.inf, overflow=True)
    rate = p.J0 * math.exp(exponent)
    return RateResult(ln_rate=ln_rate, rate=rate, overflow=math.isinf(rate))
