"""Compile Horn programs into connection strengths by coefficient matching.

A clause's inconsistency indicator is a multilinear polynomial that
evaluates to 1 on the single violating assignment and to 0 elsewhere:

    binary:  (1 - V_head) * prod_b V_b
    bipolar: 2**-L * (1 - S_head) * prod_b (1 + S_b)

(the head factor drops for denials, the body product for facts).  The
binary form carries no per-clause normalization while the bipolar one is
scaled by 2**-L; both conventions are kept as-is because the comparison
with Hebbian learning depends on the difference.

Matching an expanded coefficient ``c`` against the energy conventions of
:mod:`hornmine.synapses` gives

    3 atoms: T_ijk += -c/2      2 atoms: T_ij += -c      1 atom: T_i += -c

with constants accumulating into the energy offset.  The ``-c/2`` rule is
where the cubic sum's 1/3 prefactor meets its 3! permutation copies; keep
it here and nowhere else, or a silent factor-of-2 creeps in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import UnsupportedOrderError
from .logic import Clause, Program
from .synapses import Representation, SynapseSet

#: Largest literal count a clause may have and still fit order-3 synapses.
MAX_CLAUSE_LITERALS = 3


@dataclass
class Polynomial:
    """Multilinear polynomial: ascending atom-index subsets to coefficients."""

    terms: dict[tuple[int, ...], float] = field(default_factory=dict)

    def evaluate(self, values: Sequence[float]) -> float:
        acc = 0.0
        for key, coeff in self.terms.items():
            prod = coeff
            for i in key:
                prod *= values[i]
            acc += prod
        return acc

    def items(self):
        return self.terms.items()

    def _multiply_linear(self, atom: int, const: float, coeff: float) -> None:
        """Multiply in place by ``const + coeff * x_atom`` (atom not yet present)."""
        new_terms: dict[tuple[int, ...], float] = {}
        for key, c in self.terms.items():
            if const:
                new_terms[key] = new_terms.get(key, 0.0) + c * const
            grown = tuple(sorted(key + (atom,)))
            new_terms[grown] = new_terms.get(grown, 0.0) + c * coeff
        self.terms = {k: v for k, v in new_terms.items() if v != 0.0}


def clause_cost(clause: Clause, representation: Representation) -> Polynomial:
    """Expanded violation indicator of one clause (1 if violated, else 0)."""
    length = clause.literal_count
    if length > MAX_CLAUSE_LITERALS:
        raise UnsupportedOrderError(
            f"clause has {length} literals; more than {MAX_CLAUSE_LITERALS} "
            "would require fourth-order synapses"
        )
    if representation is Representation.BINARY:
        poly = Polynomial({(): 1.0})
        if clause.head is not None:
            poly._multiply_linear(clause.head, 1.0, -1.0)
        for b in clause.body:
            poly._multiply_linear(b, 0.0, 1.0)
    else:
        poly = Polynomial({(): 2.0 ** -length})
        if clause.head is not None:
            poly._multiply_linear(clause.head, 1.0, -1.0)
        for b in clause.body:
            poly._multiply_linear(b, 1.0, 1.0)
    return poly


def compile_program(program: Program, representation: Representation) -> SynapseSet:
    """Connection strengths whose total energy equals the violation count.

    The identity ``energy_total(compile(p), x) == cost(p, x)`` holds exactly
    for every interpretation, in both representations.
    """
    synapses = SynapseSet(len(program.atoms))
    for clause in program.clauses:
        for key, coeff in clause_cost(clause, representation).items():
            if len(key) == 0:
                synapses.offset += coeff
            elif len(key) == 3:
                synapses.add(key, -coeff / 2.0)
            else:
                synapses.add(key, -coeff)
    return synapses
