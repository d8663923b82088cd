"""Reduced-unit Ising engine on the triangular lattice.

Energy functional E = -K * sum_bonds s_a s_b - sum_i b_i s_i with quenched
site fields b_i, single-flip Metropolis dynamics in a fixed row-major site
order, and observable collection with blocked/jackknife errors. The
dimensionless couplings absorb all physical prefactors; the only bridge to
SI units is :func:`reduce_couplings`.

Reproducibility contract: the PRNG is PCG64; stream s of master seed m is
``np.random.Generator(np.random.PCG64(np.random.SeedSequence(m, spawn_key=s)))``.
One uniform is consumed per proposed flip, drawn as one block per sweep.
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants
from .errors import ConfigError, DomainError
from .lattice import TriangularLattice
from .physics import SuperfluidSpec, eta_coupling, vorticity
from .stats import blocked_stderr, jackknife_logmeanexp

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


@dataclass(frozen=True)
class CouplingSet:
    """Dimensionless couplings: spin-spin K (ferromagnetic for K > 0) and
    reduced temperature T_red entering the Boltzmann factor exp(-E/T_red)."""

    K: float
    T_red: float = 1.0

    def __post_init__(self) -> None:
        if self.T_red <= 0:
            raise DomainError("reduced temperature T_red must be positive")


@dataclass(frozen=True)
class RunConfig:
    """Sampling schedule: thermalize n_therm sweeps, then record one
    measurement every measure_every sweeps, n_measure times."""

    seed: int = 0
    n_therm: int = 1000
    n_measure: int = 1000
    measure_every: int = 1

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ConfigError("seed must be a non-negative integer")
        if self.n_therm < 0:
            raise ConfigError("n_therm must be >= 0")
        if self.n_measure < 1:
            raise ConfigError("n_measure must be >= 1")
        if self.measure_every < 1:
            raise ConfigError("measure_every must be >= 1")


@dataclass(frozen=True)
class ObservableRecord:
    """One measurement: reduced energy, total magnetization, field term."""

    sweep: int
    E_red: float
    M: int
    field_term: float


@dataclass(frozen=True)
class SampleSummary:
    """Means with standard errors over the measurement records.

    Stderr fields are None when only one measurement exists. binder_U is
    None when mean_M2 vanishes. ln_enhancement_mean is the log-domain
    estimate of ln<exp(sum_i b_i s_i)> over the sampled configurations.
    """

    mean_E: float
    stderr_E: float | None
    mean_absM: float
    stderr_absM: float | None
    mean_M2: float
    stderr_M2: float | None
    mean_M4: float
    stderr_M4: float | None
    mean_field_term: float
    stderr_field_term: float | None
    binder_U: float | None
    ln_enhancement_mean: float
    stderr_ln_enhancement: float | None
    acceptance_rate: float
    seed: int


def chain_rng(master_seed: int, *stream_key: int) -> np.random.Generator:
    """Independent PCG64 stream for (master seed, stream key).

    Streams with distinct keys are statistically independent; identical
    arguments reproduce the identical stream on any platform.
    """
    seq = np.random.SeedSequence(master_seed, spawn_key=stream_key)
    return np.random.Generator(np.random.PCG64(seq))


def derived_seed(master_seed: int, *stream_key: int) -> int:
    """A recordable 64-bit seed derived from (master seed, stream key)."""
    seq = np.random.SeedSequence(master_seed, spawn_key=stream_key)
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def energy(lattice: TriangularLattice, K: float) -> float:
    """Reduced energy -K*sum_bonds(s_a*s_b) - sum_i(b_i*s_i)."""
    a, b = lattice.bond_arrays()
    s = lattice.spins.ravel()
    bond_sum = int(np.sum(s[a].astype(np.int64) * s[b]))
    field_sum = float(np.dot(lattice.fields.ravel(), s))
    return -K * bond_sum - field_sum


def delta_energy(lattice: TriangularLattice, K: float, site: tuple[int, int]) -> float:
    """Energy change of flipping the spin at `site`: 2*s*(K*sum_nbr(s_n) + b)."""
    i, j = site
    s = int(lattice.spins[i, j])  # raises DomainError via neighbors() if out of range
    nbr_sum = sum(int(lattice.spins[ni, nj]) for (ni, nj) in lattice.neighbors(i, j))
    return 2.0 * s * (K * nbr_sum + float(lattice.fields[i, j]))


@njit(cache=True)
def _sweep_kernel(spins, fields, nbr, counts, K, T, uniforms):  # pragma: no cover - jitted
    accepted = 0
    for s in range(spins.shape[0]):
        nbr_sum = 0.0
        for j in range(counts[s]):
            nbr_sum += spins[nbr[s, j]]
        dE = 2.0 * spins[s] * (K * nbr_sum + fields[s])
        if dE <= 0.0 or uniforms[s] < math.exp(-dE / T):
            spins[s] = -spins[s]
            accepted += 1
    return accepted


def metropolis_sweep(
    lattice: TriangularLattice,
    K: float,
    T_red: float,
    rng: np.random.Generator,
    tables: tuple[np.ndarray, np.ndarray] | None = None,
) -> int:
    """One Metropolis sweep: propose a flip at every site in row-major order.

    Each proposal is accepted with probability min(1, exp(-dE/T_red)).
    Mutates the lattice in place and returns the number of accepted flips.
    Passing the precomputed ``tables = lattice.neighbor_table()`` avoids
    rebuilding the adjacency on every call.
    """
    if T_red <= 0:
        raise DomainError("reduced temperature T_red must be positive")
    if tables is None:
        tables = lattice.neighbor_table()
    nbr, counts = tables
    n = lattice.n_sites
    return int(
        _sweep_kernel(
            lattice.spins.ravel(),
            lattice.fields.ravel(),
            nbr,
            counts,
            float(K),
            float(T_red),
            rng.random(n),
        )
    )


def sample(
    lattice: TriangularLattice,
    couplings: CouplingSet,
    config: RunConfig,
    rng: np.random.Generator | None = None,
) -> tuple[list[ObservableRecord], SampleSummary]:
    """Thermalize, then measure; returns the records and their summary.

    The lattice is evolved in place. When no generator is supplied, stream 0
    of config.seed is used, so identical (lattice, couplings, config) always
    reproduce the identical record stream.
    """
    if rng is None:
        rng = chain_rng(config.seed, 0)
    tables = lattice.neighbor_table()
    a_idx, b_idx = lattice.bond_arrays()
    spins = lattice.spins.ravel()
    fields = lattice.fields.ravel()
    n = lattice.n_sites

    accepted = 0
    proposed = 0
    for _ in range(config.n_therm):
        accepted += metropolis_sweep(lattice, couplings.K, couplings.T_red, rng, tables)
        proposed += n

    records: list[ObservableRecord] = []
    for m in range(config.n_measure):
        for _ in range(config.measure_every):
            accepted += metropolis_sweep(lattice, couplings.K, couplings.T_red, rng, tables)
            proposed += n
        bond_sum = int(np.sum(spins[a_idx].astype(np.int64) * spins[b_idx]))
        field_term = float(np.dot(fields, spins))
        records.append(
            ObservableRecord(
                sweep=config.n_therm + (m + 1) * config.measure_every,
                E_red=-couplings.K * bond_sum - field_term,
                M=int(spins.sum(dtype=np.int64)),
                field_term=field_term,
            )
        )
    summary = summarize(records, acceptance_rate=accepted / proposed, seed=config.seed)
    return records, summary


def summarize(
    records: list[ObservableRecord], acceptance_rate: float, seed: int
) -> SampleSummary:
    """Means and standard errors over a record stream (possibly pooled chains)."""
    if not records:
        raise DomainError("cannot summarize an empty record stream")
    e = np.array([r.E_red for r in records])
    m = np.array([float(r.M) for r in records])
    f = np.array([r.field_term for r in records])
    m2 = m * m
    m4 = m2 * m2
    mean_m2 = float(m2.mean())
    mean_m4 = float(m4.mean())
    binder = binder_cumulant(mean_m2, mean_m4) if mean_m2 > 0 else None
    ln_enh, ln_enh_err = jackknife_logmeanexp(f)
    return SampleSummary(
        mean_E=float(e.mean()),
        stderr_E=blocked_stderr(e),
        mean_absM=float(np.abs(m).mean()),
        stderr_absM=blocked_stderr(np.abs(m)),
        mean_M2=mean_m2,
        stderr_M2=blocked_stderr(m2),
        mean_M4=mean_m4,
        stderr_M4=blocked_stderr(m4),
        mean_field_term=float(f.mean()),
        stderr_field_term=blocked_stderr(f),
        binder_U=binder,
        ln_enhancement_mean=ln_enh,
        stderr_ln_enhancement=ln_enh_err,
        acceptance_rate=acceptance_rate,
        seed=seed,
    )


def binder_cumulant(mean_M2: float, mean_M4: float) -> float:
    """Fourth-order cumulant U = 1 - <M^4>/(3<M^2>^2).

    U -> 2/3 for a delta-distributed |M| (ordered phase) and U -> 0 for
    Gaussian M (disordered phase); curves for different lattice sizes cross
    near the ordering transition.
    """
    if mean_M2 <= 0:
        raise DomainError("binder cumulant undefined for mean_M2 <= 0")
    return 1.0 - mean_M4 / (3.0 * mean_M2 * mean_M2)


def binder_crossing(x, u_small, u_large) -> float:
    """Crossing point of two Binder-cumulant curves sampled on a common grid.

    Locates sign changes of u_small - u_large and linearly interpolates; if
    statistical noise produces several sign changes, the steepest one (the
    genuine crossing) is used.
    """
    x = np.asarray(x, dtype=float)
    d = np.asarray(u_small, dtype=float) - np.asarray(u_large, dtype=float)
    if x.size != d.size or x.size < 2:
        raise DomainError("crossing needs two curves on a common grid of >= 2 points")
    crossings = []
    for k in range(d.size - 1):
        if d[k] == 0.0:
            crossings.append((abs(d[k + 1] - d[k]), float(x[k])))
        elif d[k] * d[k + 1] < 0.0:
            t = d[k] / (d[k] - d[k + 1])
            crossings.append((abs(d[k + 1] - d[k]), float(x[k] + t * (x[k + 1] - x[k]))))
    if not crossings:
        raise DomainError("binder curves do not cross on the sampled grid")
    return max(crossings)[1]


def reduce_couplings(
    J_phys: float,
    sf: SuperfluidSpec,
    h,
    T_star: float,
    convention: str = "cyclotron-energy",
    u: float | None = None,
    constants: PhysicalConstants = CODATA,
):
    """Map physical couplings and fields to the engine's reduced units.

    The spin magnitude mapping uses eta * w(r0) = hbar, so s_i = S_i/hbar
    and K = J_phys * eta^2 * w(r0)^2 / (k_B * T_star) with T_star in kelvin.

    The per-site reduced field follows the chosen convention:

    - "cyclotron-energy" (default): b_i = hbar*q_s*h_i/(m_s*k_B*T_star),
      one cyclotron quantum hbar*w_c per k_B*T_star. This assigns the field
      term a genuine energy scale.
    - "literal-prefactor": b_i = rho*eta*w(r0)*h_i/(k_B*T_star) * u with a
      caller-supplied normalization constant u, because the literal
      prefactor rho*eta*w is not dimensionally an energy per tesla.

    Returns (CouplingSet with T_red = 1, b) where b matches the shape of h.
    """
    if T_star <= 0:
        raise DomainError("crossover temperature T_star must be positive")
    eta = eta_coupling(sf)
    w0 = vorticity(sf.r0, sf.m_s, constants)
    kbt = constants.k_B * T_star
    K = J_phys * eta**2 * w0**2 / kbt
    h_arr = np.asarray(h, dtype=float)
    if convention == "cyclotron-energy":
        b = constants.hbar * sf.q_s * h_arr / (sf.m_s * kbt)
    elif convention == "literal-prefactor":
        if u is None:
            raise ConfigError(
                "the literal-prefactor convention requires the normalization constant u"
            )
        rho = sf.q_s * sf.r0**2
        b = rho * eta * w0 * h_arr / kbt * u
    else:
        raise ConfigError(f"unknown reduction convention {convention!r}")
    b_out = float(b) if np.isscalar(h) or b.ndim == 0 else b
    return CouplingSet(K=K, T_red=1.0), b_out
