"""Simulated experiments on single automata and on ensembles.

Random draws use numpy's PCG64.  The root ``SeedSequence(seed)`` is
spawned into one child stream per input, so row ``v`` always comes from
child ``v - 1`` whatever order (or thread) the rows are produced in.
Each sample consumes exactly one uniform double, which makes a protocol
with ``k`` samples a prefix of the one with ``k + 1``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .core import Graph, StateSet, delta, format_set, from_mask, output, to_mask
from .macro_logic import closure, perp_mask
from .micro_logic import partition_for_input


@dataclass(frozen=True)
class Ensemble:
    graph: Graph
    support: StateSet
    weights: tuple[float, ...] = field(default=())

    def __post_init__(self):
        support = self.graph.check_subset(self.support)
        if not support:
            raise ValueError("ensemble support must be nonempty")
        object.__setattr__(self, "support", support)
        if not self.weights:
            object.__setattr__(self, "weights", tuple(1.0 / len(support) for _ in support))
        if len(self.weights) != len(support):
            raise ValueError("one weight per support state is required")
        if any(w <= 0 for w in self.weights) or not np.isclose(sum(self.weights), 1.0):
            raise ValueError("weights must be positive and sum to 1")

    @classmethod
    def weighted(cls, graph: Graph, distribution: Mapping[int, float]) -> "Ensemble":
        support = frozenset(distribution)
        return cls(graph, support, tuple(distribution[s] for s in sorted(support)))

    @property
    def states(self) -> list[int]:
        return sorted(self.support)


@dataclass(frozen=True)
class Protocol:
    rows: dict[int, tuple[int, ...]]
    samples_per_row: int
    seed: int | None = None

    def __post_init__(self):
        for v, row in self.rows.items():
            if len(row) != self.samples_per_row:
                raise ValueError(f"row {v} has {len(row)} bits, expected {self.samples_per_row}")

    def zero_rows(self) -> frozenset[int]:
        return frozenset(v for v, row in self.rows.items() if not any(row))

    def to_text(self) -> str:
        return "".join(
            f"input {v}: {''.join(str(b) for b in self.rows[v])}\n" for v in sorted(self.rows)
        )


@dataclass(frozen=True)
class MicroObservation:
    input: int
    bit: int
    inferred: StateSet


def identify_single(g: Graph, hidden_initial: int, probe: int) -> MicroObservation:
    """Probe one fresh copy once.

    The copy ends in ``probe`` or in the final state, so it carries no
    further information about ``hidden_initial``; a second question needs
    a second copy.
    """
    g.check_vertex(hidden_initial, "initial state")
    bit = output(delta(g, hidden_initial, probe))
    v0, v1 = partition_for_input(g, probe)
    return MicroObservation(probe, bit, v1 if bit else v0)


def _sample_row(e: Ensemble, v: int, samples: int, stream: np.random.SeedSequence) -> tuple[int, ...]:
    rng = np.random.Generator(np.random.PCG64(stream))
    cumulative = np.cumsum(e.weights)
    cumulative[-1] = 1.0
    draws = np.searchsorted(cumulative, rng.random(samples), side="right")
    states = e.states
    return tuple(output(delta(e.graph, states[i], v)) for i in draws)


def run_protocol(e: Ensemble, samples_per_row: int, seed: int, max_workers: int | None = None) -> Protocol:
    if samples_per_row < 1:
        raise ValueError("samples_per_row must be at least 1")
    streams = np.random.SeedSequence(seed).spawn(e.graph.n)
    inputs = list(e.graph.vertices)
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            rows = list(pool.map(lambda v: _sample_row(e, v, samples_per_row, streams[v - 1]), inputs))
    else:
        rows = [_sample_row(e, v, samples_per_row, streams[v - 1]) for v in inputs]
    return Protocol(dict(zip(inputs, rows)), samples_per_row, seed)


def run_protocol_exhaustive(e: Ensemble) -> Protocol:
    """One sample per support state, in increasing state order."""
    states = e.states
    rows = {v: tuple(output(delta(e.graph, s, v)) for s in states) for v in e.graph.vertices}
    return Protocol(rows, len(states))


def infer_macrostate(g: Graph, p: Protocol) -> StateSet:
    """The smallest testable macrostate consistent with the all-zero rows."""
    if set(p.rows) != set(g.vertices):
        raise ValueError("protocol must contain one row per input")
    return from_mask(perp_mask(g, to_mask(p.zero_rows())))


def distinguishable(g: Graph, a, b) -> bool:
    a, b = frozenset(a), frozenset(b)
    if not a or not b:
        raise ValueError("ensemble supports must be nonempty")
    return closure(g, a) != closure(g, b)


def describe_macrostate(g: Graph, a: StateSet) -> str:
    text = format_set(a)
    return f"V = {text}" if len(a) == g.n else text
