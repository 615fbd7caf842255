"""Normalized automata defined by undirected graphs.

Vertices are the integers ``1..n``; they double as the automaton's
non-final states and as its input symbols.  State ``0`` is the absorbing
final state.  Applying input ``v`` in state ``u`` moves to ``v`` when ``u``
and ``v`` coincide or are joined by an edge, and to ``0`` otherwise; the
output bit is 1 exactly when the resulting state is not final.

State sets are plain ``frozenset`` objects.  For the enumeration-heavy
code in the logic modules they are also encoded as bitmasks, with vertex
``v`` stored at bit ``v - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

StateSet = frozenset[int]

FINAL = 0


class GraphFormatError(ValueError):
    """Raised for malformed graph documents; carries the offending line."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def to_mask(states: Iterable[int]) -> int:
    mask = 0
    for s in states:
        mask |= 1 << (s - 1)
    return mask


def from_mask(mask: int) -> StateSet:
    members = []
    v = 1
    while mask:
        if mask & 1:
            members.append(v)
        mask >>= 1
        v += 1
    return frozenset(members)


def format_set(states: Iterable[int]) -> str:
    """Render a state set as ``{1,2,3}`` with sorted members."""
    return "{" + ",".join(str(s) for s in sorted(states)) + "}"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on the vertices ``1..n``.

    ``edges`` holds each unordered pair once, as a two-element frozenset.
    """

    n: int
    edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"self-loop or malformed edge {sorted(e)}")
            for v in e:
                if not 1 <= v <= self.n:
                    raise ValueError(f"edge endpoint {v} outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]] = ()) -> "Graph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edges.add(frozenset((u, v)))
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((v, v + 1) for v in range(1, n)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def neighborhood_masks(self) -> tuple[int, ...]:
        # index 0 unused so that masks[v] is the closed neighbourhood of v
        masks = [0] + [1 << (v - 1) for v in self.vertices]
        for e in self.edges:
            u, v = sorted(e)
            masks[u] |= 1 << (v - 1)
            masks[v] |= 1 << (u - 1)
        return tuple(masks)

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def check_vertex(self, v: int, what: str = "vertex") -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise ValueError(f"{what} {v!r} outside 1..{self.n}")

    def check_state(self, u: int) -> None:
        if not isinstance(u, int) or not 0 <= u <= self.n:
            raise ValueError(f"state {u!r} outside 0..{self.n}")

    def check_subset(self, a: Iterable[int]) -> StateSet:
        a = frozenset(a)
        for v in a:
            self.check_vertex(v, "state")
        return a

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format.

    ``#`` starts a comment line, the first significant line is the vertex
    count and every following line is an edge ``u v``.  Repeated edges are
    accepted and stored once.
    """
    n = None
    edges: set[frozenset[int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise GraphFormatError("expected the vertex count on its own line", lineno)
            n = values[0]
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(values) != 2:
            raise GraphFormatError(f"expected an edge 'u v', got {line!r}", lineno)
        u, v = values
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphFormatError(f"vertex {w} outside 1..{n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.add(frozenset((u, v)))
    if n is None:
        raise GraphFormatError("missing vertex count")
    return Graph(n, frozenset(edges))


def closed_neighborhood(g: Graph, v: int) -> StateSet:
    g.check_vertex(v)
    return from_mask(g.neighborhood_masks[v])


def delta(g: Graph, u: int, v: int) -> int:
    """Transition function: the state reached from ``u`` on input ``v``."""
    g.check_vertex(v, "input")
    g.check_state(u)
    if u == FINAL:
        return FINAL
    if g.neighborhood_masks[v] >> (u - 1) & 1:
        return v
    return FINAL


def output(resulting: int) -> int:
    """Output bit for a resulting state."""
    return 0 if resulting == FINAL else 1


def run(g: Graph, initial: int, inputs: Sequence[int]) -> list[int]:
    """Feed ``inputs`` to one automaton started in ``initial``; return the output bits."""
    g.check_state(initial)
    for v in inputs:
        g.check_vertex(v, "input")
    state = initial
    bits = []
    for v in inputs:
        state = delta(g, state, v)
        bits.append(output(state))
    return bits
