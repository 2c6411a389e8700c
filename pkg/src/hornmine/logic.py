"""Propositional Horn clauses over an indexed atom table.

Atoms double as neuron labels: atom ``i`` is the state of neuron ``i``.
A clause ``head <- body`` is violated by exactly one pattern on its own
atoms (head false, every body atom true), which is the quantity the
network energy ends up counting.  This module stays purely combinatorial
and puts no limit on body size; the order-3 restriction is enforced where
clauses are compiled into connection strengths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import CapacityError

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

ENUMERATION_GUARD = 20


@dataclass(frozen=True)
class AtomTable:
    """Ordered, unique atom names; a name's position is its neuron index."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not IDENTIFIER_RE.match(name):
                raise ValueError(f"invalid atom name: {name!r}")
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise ValueError("duplicate atom names")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "AtomTable":
        return cls(tuple(names))

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)


@dataclass(frozen=True)
class Clause:
    """``head <- body`` over atom indices; ``head=None`` is a denial.

    The body is kept strictly ascending.  At least one literal must be
    present: a clause with a head and empty body is a fact.
    """

    head: Optional[int]
    body: tuple[int, ...] = ()

    def __post_init__(self):
        body = tuple(sorted(self.body))
        if any(a < 0 for a in body) or (self.head is not None and self.head < 0):
            raise ValueError("negative atom index")
        if len(set(body)) != len(body):
            raise ValueError("duplicate atom in clause body")
        if self.head is not None and self.head in body:
            raise ValueError("head atom repeated in body")
        if self.head is None and not body:
            raise ValueError("clause needs at least one literal")
        object.__setattr__(self, "body", body)

    @property
    def literal_count(self) -> int:
        return len(self.body) + (1 if self.head is not None else 0)

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.body

    @property
    def is_denial(self) -> bool:
        return self.head is None

    @property
    def atoms(self) -> tuple[int, ...]:
        """All atom indices of the clause, ascending."""
        if self.head is None:
            return self.body
        return tuple(sorted((self.head,) + self.body))


@dataclass(frozen=True)
class Program:
    """A set of Horn clauses over a shared atom table.

    Duplicate clauses are allowed and kept: they count double in the
    violation cost and therefore add weight when compiled.
    """

    atoms: AtomTable
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        clauses = tuple(self.clauses)
        object.__setattr__(self, "clauses", clauses)
        n = len(self.atoms)
        for clause in clauses:
            if any(a >= n for a in clause.atoms):
                raise ValueError("clause references atom outside the table")


@dataclass(frozen=True)
class Interpretation:
    """A truth value per atom, with binary {0,1} and bipolar {-1,+1} views."""

    values: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    @classmethod
    def from_code(cls, code: int, n_atoms: int) -> "Interpretation":
        """Decode an integer, atom 0 as the least significant bit."""
        return cls(tuple(bool((code >> i) & 1) for i in range(n_atoms)))

    @property
    def code(self) -> int:
        return sum(1 << i for i, v in enumerate(self.values) if v)

    @property
    def binary(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.values)

    @property
    def bipolar(self) -> tuple[int, ...]:
        return tuple(2 * int(v) - 1 for v in self.values)

    def __len__(self) -> int:
        return len(self.values)


def evaluate_clause(clause: Clause, x: Interpretation) -> bool:
    """True iff the clause holds: head true, or some body atom false."""
    n = len(x)
    if any(a >= n for a in clause.atoms):
        raise IndexError("clause references atom outside the interpretation")
    if any(not x.values[b] for b in clause.body):
        return True
    return clause.head is not None and x.values[clause.head]


def cost(program: Program, x: Interpretation) -> int:
    """Number of violated clauses; 0 exactly on models of the program."""
    return sum(1 for c in program.clauses if not evaluate_clause(c, x))


def enumerate_models(
    program: Program, max_atoms: int = ENUMERATION_GUARD
) -> list[Interpretation]:
    """All interpretations with cost 0, in ascending binary order.

    Exhausts all ``2**N`` assignments (atom 0 least significant), so it is
    the ground-truth oracle for the relaxation solver and the generator of
    complete event sets.  Guarded by ``max_atoms``.
    """
    n = len(program.atoms)
    if n > max_atoms:
        raise CapacityError(
            f"{n} atoms exceeds the enumeration guard of {max_atoms}"
        )
    models = []
    for code in range(1 << n):
        x = Interpretation.from_code(code, n)
        if cost(program, x) == 0:
            models.append(x)
    return models
