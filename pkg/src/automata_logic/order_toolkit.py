"""Finite posets stored as a full relation matrix.

Both logics hand over the complete order relation; covers, bounds and
lattice checks are derived from it here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Sequence


@dataclass(frozen=True)
class Poset:
    """Elements plus the full ``leq`` matrix; ``leq[i][j]`` means element i <= element j."""

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        size = len(self.elements)
        if len(self.leq) != size or any(len(row) != size for row in self.leq):
            raise ValueError("relation matrix does not match the element count")
        problem = _order_violation(self.up, self.down)
        if problem:
            raise ValueError(f"relation is not a partial order: {problem}")

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], leq: Callable[[object, object], bool]) -> "Poset":
        elements = tuple(elements)
        matrix = tuple(tuple(bool(leq(a, b)) for b in elements) for a in elements)
        return cls(elements, matrix)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """Bitmask of the indices above each element (itself included)."""
        return tuple(sum(1 << j for j, x in enumerate(row) if x) for row in self.leq)

    @cached_property
    def down(self) -> tuple[int, ...]:
        size = len(self.elements)
        return tuple(sum(1 << i for i in range(size) if self.leq[i][j]) for j in range(size))

    @cached_property
    def _positions(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        try:
            return self._positions[element]
        except (KeyError, TypeError):
            raise KeyError(element) from None

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def upper_bounds(self, i: int, j: int) -> list[int]:
        return _indices(self.up[i] & self.up[j])

    def lower_bounds(self, i: int, j: int) -> list[int]:
        return _indices(self.down[i] & self.down[j])

    def join(self, i: int, j: int) -> int | None:
        """Least upper bound of two element indices, or None if there is none."""
        ubs = self.up[i] & self.up[j]
        for k in _indices(ubs):
            if self.up[k] & ubs == ubs:
                return k
        return None

    def meet(self, i: int, j: int) -> int | None:
        lbs = self.down[i] & self.down[j]
        for k in _indices(lbs):
            if self.down[k] & lbs == lbs:
                return k
        return None

    def heights(self) -> list[int]:
        """Length of the longest chain from a minimal element to each element."""
        covers = hasse_edges(self)
        below = {j: [] for j in range(len(self))}
        for i, j in covers:
            below[j].append(i)
        height: dict[int, int] = {}

        def visit(j):
            if j not in height:
                height[j] = max((visit(i) + 1 for i in below[j]), default=0)
            return height[j]

        return [visit(j) for j in range(len(self))]


def _indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _order_violation(up, down) -> str | None:
    size = len(up)
    for i in range(size):
        if not up[i] >> i & 1:
            return f"not reflexive at {i}"
    for i in range(size):
        both = up[i] & down[i] & ~(1 << i)
        if both:
            return f"not antisymmetric at ({i}, {_indices(both)[0]})"
    for i in range(size):
        for j in _indices(up[i]):
            missing = up[j] & ~up[i]
            if missing:
                return f"not transitive at ({i}, {j}, {_indices(missing)[0]})"
    return None


def hasse_edges(p: Poset) -> list[tuple[int, int]]:
    """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
    covers = []
    for a in range(len(p)):
        above = p.up[a] & ~(1 << a)
        for b in _indices(above):
            between = above & p.down[b] & ~(1 << b)
            if not between:
                covers.append((a, b))
    return covers


def is_lattice(p: Poset) -> tuple[bool, tuple[int, int] | None]:
    """Check that every pair has a join and a meet; report the first pair that does not."""
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p.join(i, j) is None or p.meet(i, j) is None:
                return False, (i, j)
    return True, None


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Poset, labels: Callable[[object], str] = str, name: str = "poset") -> str:
    """Hasse diagram as a DOT digraph, drawn bottom to top."""
    covers = hasse_edges(p)
    heights = p.heights()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, element in enumerate(p.elements):
        lines.append(f"  n{i} [label={_dot_quote(labels(element))}];")
    for level in sorted(set(heights)):
        members = [f"n{i}" for i, h in enumerate(heights) if h == level]
        if len(members) > 1:
            lines.append("  { rank=same; " + " ".join(f"{m};" for m in members) + " }")
    for a, b in covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
