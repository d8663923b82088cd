"""Triangular-lattice topology, spin/field storage, and snapshot I/O.

Sites live on an Lx x Ly grid indexed (i, j); the triangular adjacency is
generated by the three forward bond directions (i, j+1), (i+1, j) and
(i+1, j+1) together with their reverses, giving six neighbors per bulk
site. Storage is row-major with j fastest, which fixes the order of the
flat ``spins`` and ``fields`` arrays in snapshot files.
"""

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConfigError, DomainError

# forward bond directions; reverses complete the six-neighbor star
FORWARD_OFFSETS = ((0, 1), (1, 0), (1, 1))
ALL_OFFSETS = FORWARD_OFFSETS + ((0, -1), (-1, 0), (-1, -1))


@dataclass(frozen=True)
class FieldPattern:
    """Assignment policy for the quenched site-local reduced fields b_i.

    kind      one of "uniform", "diluted", "explicit"
    b         field magnitude for uniform/diluted patterns
    p         occupation fraction for the diluted pattern; a site carries
              field b with probability p and 0 otherwise. Models imperfect
              superposition of the two vortex lattices (uniform = perfect).
    seed      PRNG seed for the diluted draw
    values    per-site array for the explicit pattern, row-major
    """

    kind: str = "uniform"
    b: float = 0.0
    p: float = 1.0
    seed: int = 0
    values: Sequence[float] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "diluted", "explicit"):
            raise ConfigError(f"unknown field pattern kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError(f"occupation fraction p must lie in [0, 1], got {self.p}")
        if self.kind == "explicit" and self.values is None:
            raise ConfigError("explicit field pattern requires a values array")

    def materialize(self, lx: int, ly: int) -> np.ndarray:
        """Per-site field array of shape (lx, ly) for this pattern."""
        n = lx * ly
        if self.kind == "uniform":
            return np.full((lx, ly), float(self.b))
        if self.kind == "diluted":
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed)))
            mask = rng.random(n) < self.p
            return np.where(mask, float(self.b), 0.0).reshape(lx, ly)
        values = np.asarray(self.values, dtype=float)
        if values.size != n:
            raise ConfigError(
                f"explicit field pattern has {values.size} values, lattice has {n} sites"
            )
        return values.reshape(lx, ly)


@dataclass
class TriangularLattice:
    """Spin configuration and quenched fields on a triangular lattice.

    spins[i, j] is +1 or -1; fields[i, j] is the dimensionless site-local
    reduced field. Periodic boundaries require lx, ly >= 3 so the bond sum
    never produces a doubled edge.
    """

    lx: int
    ly: int
    bc: str
    spins: np.ndarray
    fields: np.ndarray = dc_field(repr=False, default=None)

    def __post_init__(self) -> None:
        if self.bc not in ("periodic", "open"):
            raise ConfigError(f"unknown boundary condition {self.bc!r}")
        minimum = 3 if self.bc == "periodic" else 1
        if self.lx < minimum or self.ly < minimum:
            raise ConfigError(
                f"{self.bc} lattice requires Lx, Ly >= {minimum}, got {self.lx}x{self.ly}"
            )
        self.spins = np.asarray(self.spins, dtype=np.int8).reshape(self.lx, self.ly)
        if self.fields is None:
            self.fields = np.zeros((self.lx, self.ly))
        self.fields = np.asarray(self.fields, dtype=float).reshape(self.lx, self.ly)
        if not np.all(np.abs(self.spins) == 1):
            raise ConfigError("every spin must be exactly -1 or +1")

    @property
    def n_sites(self) -> int:
        return self.lx * self.ly

    def copy(self) -> "TriangularLattice":
        return TriangularLattice(
            self.lx, self.ly, self.bc, self.spins.copy(), self.fields.copy()
        )

    def site_index(self, i: int, j: int) -> int:
        """Flat row-major index (j fastest)."""
        self._check_site(i, j)
        return i * self.ly + j

    def _check_site(self, i: int, j: int) -> None:
        if not (0 <= i < self.lx and 0 <= j < self.ly):
            raise DomainError(f"site ({i}, {j}) out of range for {self.lx}x{self.ly} lattice")

    def neighbors(self, i: int, j: int) -> list[tuple[int, int]]:
        """The (up to) six triangular neighbors of site (i, j).

        Periodic boundaries wrap indices mod (lx, ly); open boundaries
        omit out-of-range sites.
        """
        self._check_site(i, j)
        out = []
        for di, dj in ALL_OFFSETS:
            ni, nj = i + di, j + dj
            if self.bc == "periodic":
                out.append((ni % self.lx, nj % self.ly))
            elif 0 <= ni < self.lx and 0 <= nj < self.ly:
                out.append((ni, nj))
        return out

    def bond_list(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Every undirected bond exactly once, in row-major forward-offset order."""
        bonds = []
        for i in range(self.lx):
            for j in range(self.ly):
                for di, dj in FORWARD_OFFSETS:
                    ni, nj = i + di, j + dj
                    if self.bc == "periodic":
                        bonds.append(((i, j), (ni % self.lx, nj % self.ly)))
                    elif 0 <= ni < self.lx and 0 <= nj < self.ly:
                        bonds.append(((i, j), (ni, nj)))
        return bonds

    def bond_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Bond endpoints as two flat-index arrays (for vectorized energy sums)."""
        bonds = self.bond_list()
        a = np.array([i * self.ly + j for (i, j), _ in bonds], dtype=np.int64)
        b = np.array([i * self.ly + j for _, (i, j) in bonds], dtype=np.int64)
        return a, b

    def neighbor_table(self) -> tuple[np.ndarray, np.ndarray]:
        """Neighbor flat indices as an (N, 6) table plus per-site counts.

        Rows are padded with -1 past the count; the Metropolis kernel and
        delta_energy iterate counts[s] entries.
        """
        n = self.n_sites
        table = np.full((n, 6), -1, dtype=np.int64)
        counts = np.zeros(n, dtype=np.int64)
        for i in range(self.lx):
            for j in range(self.ly):
                s = i * self.ly + j
                for ni, nj in self.neighbors(i, j):
                    table[s, counts[s]] = ni * self.ly + nj
                    counts[s] += 1
        return table, counts


def build_lattice(
    lx: int,
    ly: int,
    bc: str = "periodic",
    initial: str = "all-up",
    init_seed: int = 0,
    pattern: FieldPattern | None = None,
) -> TriangularLattice:
    """Construct a lattice with spins per `initial` and fields per `pattern`.

    initial is one of "all-up", "all-down", "random"; the random draw is
    deterministic given init_seed. Rebuilding with identical arguments
    yields byte-identical arrays.
    """
    if pattern is None:
        pattern = FieldPattern()
    n = lx * ly
    if initial == "all-up":
        spins = np.ones(n, dtype=np.int8)
    elif initial == "all-down":
        spins = -np.ones(n, dtype=np.int8)
    elif initial == "random":
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(init_seed)))
        spins = (2 * rng.integers(0, 2, size=n) - 1).astype(np.int8)
    else:
        raise ConfigError(f"unknown initial spin state {initial!r}")
    lattice = TriangularLattice(lx, ly, bc, spins.reshape(lx, ly))
    lattice.fields = pattern.materialize(lx, ly)
    return lattice


def snapshot_text(lattice: TriangularLattice) -> str:
    """Serialize a lattice to the snapshot document (fixed key order)."""
    doc = {
        "lx": lattice.lx,
        "ly": lattice.ly,
        "bc": lattice.bc,
        "spins": [int(s) for s in lattice.spins.ravel()],
        "fields": [float(b) for b in lattice.fields.ravel()],
    }
    return json.dumps(doc, indent=2) + "\n"


def save_snapshot(lattice: TriangularLattice, path: str | Path) -> None:
    Path(path).write_text(snapshot_text(lattice))


def load_snapshot(path: str | Path) -> TriangularLattice:
    """Read a snapshot document back into a lattice."""
    doc = json.loads(Path(path).read_text())
    expected = {"lx", "ly", "bc", "spins", "fields"}
    if set(doc) != expected:
        raise ConfigError(f"snapshot keys {sorted(doc)} do not match {sorted(expected)}")
    lx, ly = int(doc["lx"]), int(doc["ly"])
    n = lx * ly
    if len(doc["spins"]) != n or len(doc["fields"]) != n:
        raise ConfigError("snapshot spins/fields arrays do not match lx*ly")
    return TriangularLattice(
        lx,
        ly,
        doc["bc"],
        np.array(doc["spins"], dtype=np.int8).reshape(lx, ly),
        np.array(doc["fields"], dtype=float).reshape(lx, ly),
    )
