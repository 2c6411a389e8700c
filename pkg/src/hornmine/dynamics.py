"""Asynchronous relaxation of the network and multi-restart model search.

One sweep visits every neuron once in a seeded random permutation that is
re-drawn each sweep; updates take effect immediately.  A neuron moves with
the sign of its local field (step rule in the binary representation) and a
zero field keeps the current state, which rules out 2-cycles on ties.
Each flip changes the energy by ``-(delta x) * h_i <= 0``, so the energy
trace never increases; the trace is maintained incrementally from that
identity so the recorded floats are monotone too.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logic import Interpretation, Program, cost
from .synapses import Representation, SynapseSet
from .translate import compile_program

DEFAULT_MAX_SWEEPS = 100


@dataclass(frozen=True)
class RelaxConfig:
    representation: Representation = Representation.BIPOLAR
    max_sweeps: int = DEFAULT_MAX_SWEEPS
    seed: int = 0

    def __post_init__(self):
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")


@dataclass(frozen=True)
class RelaxResult:
    final: Interpretation
    stable: bool
    sweeps_used: int
    energy_trace: tuple[float, ...]


@dataclass(frozen=True)
class SolveStats:
    restarts: int
    successes: int
    distinct_models: int


def relax(synapses: SynapseSet, start: Interpretation, config: RelaxConfig) -> RelaxResult:
    """Run sweeps until one produces no flip, or ``max_sweeps`` is reached.

    Deterministic given (synapses, start, seed).  Non-convergence is not an
    error; it is reported as ``stable=False``.
    """
    representation = config.representation
    low = 0 if representation is Representation.BINARY else -1
    values = list(representation.numeric(start))
    rng = np.random.default_rng(config.seed)
    energy = synapses.energy_total(values)
    trace: list[float] = []

    for sweep in range(1, config.max_sweeps + 1):
        flipped = False
        for i in rng.permutation(synapses.n_atoms):
            h = synapses.local_field(values, i)
            if h > 0:
                new = 1
            elif h < 0:
                new = low
            else:
                continue
            if new != values[i]:
                energy -= (new - values[i]) * h
                values[i] = new
                trace.append(energy)
                flipped = True
        if not flipped:
            return RelaxResult(
                final=Interpretation(tuple(v == 1 for v in values)),
                stable=True,
                sweeps_used=sweep,
                energy_trace=tuple(trace),
            )
    return RelaxResult(
        final=Interpretation(tuple(v == 1 for v in values)),
        stable=False,
        sweeps_used=config.max_sweeps,
        energy_trace=tuple(trace),
    )


def solve(
    program: Program,
    representation: Representation = Representation.BIPOLAR,
    restarts: int = 64,
    seed: int = 0,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> tuple[list[Interpretation], SolveStats]:
    """Search for models by relaxation from random starts.

    Every returned interpretation is certified by clause evaluation, never
    inferred from the energy value, so convention bugs cannot leak models.
    Results are deduplicated and sorted in ascending binary order.
    """
    synapses = compile_program(program, representation)
    n = len(program.atoms)
    rng = np.random.default_rng(seed)
    found: set[Interpretation] = set()
    successes = 0
    for _ in range(restarts):
        bits = rng.integers(0, 2, size=n)
        start = Interpretation(tuple(bool(b) for b in bits))
        sweep_seed = int(rng.integers(0, 2**32))
        result = relax(
            synapses,
            start,
            RelaxConfig(representation=representation, max_sweeps=max_sweeps, seed=sweep_seed),
        )
        if cost(program, result.final) == 0:
            successes += 1
            found.add(result.final)
    models = sorted(found, key=lambda x: x.code)
    return models, SolveStats(
        restarts=restarts, successes=successes, distinct_models=len(models)
    )
