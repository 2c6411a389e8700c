"""Sparse symmetric connection strengths of orders 1 to 3.

Keys are stored strictly ascending, which encodes both the zero diagonal
and full permutation symmetry: reads canonicalize their indices, writes to
any permutation of a key land on the same entry, and a key with repeated
indices reads as zero.  Energy and local field follow

    E(x)   = - sum_{i<j<k} 2 T_ijk x_i x_j x_k - sum_{i<j} T_ij x_i x_j - sum_i T_i x_i
    h_i(x) =   sum_{j<k, both != i} 2 T_ijk x_j x_k + sum_{j != i} T_ij x_j + T_i

where the factors 2 and 1 absorb the permutation copies of the ordered
sums in the cubic network model, so that flipping ``x_i`` from ``a`` to
``b`` changes the energy by exactly ``-(b - a) * h_i``.

The constant term of a compiled program has no synapse to live in, so a
separate ``offset`` carries it; ``energy_total`` adds it back, making
compiled energies reproduce the violated-clause count exactly.
"""

from __future__ import annotations

import enum
from typing import Iterator, Sequence

from .logic import Interpretation

#: Entries this close to zero are dropped on write, so deflation during
#: reverse analysis cannot leave dust behind.
PRUNE_EPS = 1e-15


class Representation(enum.Enum):
    """Numeric reading of a truth value: V in {0,1} or S = 2V-1 in {-1,+1}."""

    BINARY = "binary"
    BIPOLAR = "bipolar"

    def numeric(self, x: Interpretation) -> tuple[int, ...]:
        return x.binary if self is Representation.BINARY else x.bipolar


class SynapseSet:
    """Connection strengths T_i, T_ij, T_ijk plus a constant energy offset."""

    __slots__ = ("n_atoms", "t1", "t2", "t3", "offset")

    def __init__(self, n_atoms: int, offset: float = 0.0):
        if n_atoms < 0:
            raise ValueError("n_atoms must be nonnegative")
        self.n_atoms = n_atoms
        self.t1: dict[tuple[int], float] = {}
        self.t2: dict[tuple[int, int], float] = {}
        self.t3: dict[tuple[int, int, int], float] = {}
        self.offset = float(offset)

    def _store(self, order: int) -> dict:
        return (self.t1, self.t2, self.t3)[order - 1]

    def _canonical(self, key) -> tuple[int, ...]:
        if isinstance(key, int):
            key = (key,)
        key = tuple(sorted(key))
        if not 1 <= len(key) <= 3:
            raise ValueError(f"key must have 1-3 indices, got {key}")
        for i in key:
            if not 0 <= i < self.n_atoms:
                raise IndexError(f"atom index {i} out of range for {self.n_atoms} atoms")
        return key

    def __getitem__(self, key) -> float:
        """Permutation-invariant read; repeated indices read as 0."""
        key = self._canonical(key)
        if len(set(key)) != len(key):
            return 0.0
        return self._store(len(key)).get(key, 0.0)

    def add(self, key, delta: float) -> None:
        """Accumulate onto the canonical entry, pruning near-zero results."""
        key = self._canonical(key)
        if len(set(key)) != len(key):
            raise ValueError(f"repeated indices in key {key}: diagonal is fixed at zero")
        store = self._store(len(key))
        value = store.get(key, 0.0) + delta
        if abs(value) <= PRUNE_EPS:
            store.pop(key, None)
        else:
            store[key] = value

    def add_scaled(self, other: "SynapseSet", factor: float) -> None:
        """Accumulate ``factor * other`` entrywise (offset included)."""
        for key, value in other.entries():
            self.add(key, factor * value)
        self.offset += factor * other.offset

    def scaled(self, factor: float) -> "SynapseSet":
        result = SynapseSet(self.n_atoms)
        result.add_scaled(self, factor)
        return result

    def copy(self) -> "SynapseSet":
        result = SynapseSet(self.n_atoms, self.offset)
        result.t1 = dict(self.t1)
        result.t2 = dict(self.t2)
        result.t3 = dict(self.t3)
        return result

    def entries(self) -> Iterator[tuple[tuple[int, ...], float]]:
        """All nonzero entries, order 1 to 3, keys ascending within an order."""
        for store in (self.t1, self.t2, self.t3):
            for key in sorted(store):
                yield key, store[key]

    def __len__(self) -> int:
        return len(self.t1) + len(self.t2) + len(self.t3)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SynapseSet):
            return NotImplemented
        return (
            self.n_atoms == other.n_atoms
            and self.offset == other.offset
            and self.t1 == other.t1
            and self.t2 == other.t2
            and self.t3 == other.t3
        )

    def __repr__(self) -> str:
        return (
            f"SynapseSet(n_atoms={self.n_atoms}, nnz={len(self)}, "
            f"offset={self.offset!r})"
        )

    def _check_values(self, values: Sequence[float]) -> None:
        if len(values) != self.n_atoms:
            raise ValueError(
                f"expected {self.n_atoms} neuron values, got {len(values)}"
            )

    def energy(self, values: Sequence[float]) -> float:
        """Network energy of a numeric state, excluding the offset."""
        self._check_values(values)
        acc = 0.0
        for (i, j, k), t in self.t3.items():
            acc -= 2.0 * t * values[i] * values[j] * values[k]
        for (i, j), t in self.t2.items():
            acc -= t * values[i] * values[j]
        for (i,), t in self.t1.items():
            acc -= t * values[i]
        return acc

    def energy_total(self, values: Sequence[float]) -> float:
        return self.energy(values) + self.offset

    def local_field(self, values: Sequence[float], i: int) -> float:
        """Field h_i seen by neuron i in the given numeric state."""
        self._check_values(values)
        if not 0 <= i < self.n_atoms:
            raise IndexError(f"atom index {i} out of range")
        acc = self.t1.get((i,), 0.0)
        for (a, b), t in self.t2.items():
            if a == i:
                acc += t * values[b]
            elif b == i:
                acc += t * values[a]
        for key, t in self.t3.items():
            if i in key:
                a, b = (v for v in key if v != i)
                acc += 2.0 * t * values[a] * values[b]
        return acc
