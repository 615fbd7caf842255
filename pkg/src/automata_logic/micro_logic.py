"""Partition logic of single automata (microstatements).

Each input splits the state set into the states that answer 0 and those
that answer 1.  Every such split is a four-element Boolean algebra
``{empty, v0, v1, V}``; gluing all of them along their bounds gives the
propositional structure, which for normalized automata is MOn.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, StateSet, from_mask
from .order_toolkit import Poset


@dataclass(frozen=True)
class Partition:
    input_class: frozenset[int]
    v0: StateSet
    v1: StateSet

    @property
    def blocks(self) -> tuple[StateSet, StateSet]:
        return self.v1, self.v0


@dataclass(frozen=True)
class MicroLogic:
    n: int
    partitions: tuple[Partition, ...]
    poset: Poset

    @property
    def elements(self) -> tuple[StateSet, ...]:
        return self.poset.elements

    @property
    def bottom(self) -> StateSet:
        return frozenset()

    @property
    def top(self) -> StateSet:
        return frozenset(range(1, self.n + 1))

    def __contains__(self, a) -> bool:
        return frozenset(a) in self.poset.elements

    def order_pairs(self) -> list[tuple[StateSet, StateSet]]:
        """All pairs ``(a, b)`` with ``a`` implying ``b``, reflexive pairs included."""
        els = self.elements
        return [(els[i], els[j]) for i in range(len(els)) for j in range(len(els)) if self.poset.le(i, j)]


def partition_for_input(g: Graph, v: int) -> tuple[StateSet, StateSet]:
    """The ``(v0, v1)`` split produced by input ``v``; ``v0`` may be empty."""
    g.check_vertex(v, "input")
    v1 = g.neighborhood_masks[v]
    return from_mask(g.full_mask & ~v1), from_mask(v1)


def distinct_partitions(g: Graph) -> list[Partition]:
    """Nontrivial splits of the state set, one per group of inputs inducing it.

    A split is an unordered pair of blocks, so inputs with mirror-image
    neighbourhoods (one's v1 is the other's v0) share a partition.  The
    v1 block is the closed neighbourhood of the smallest input in the
    group; groups are listed by that input.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in g.vertices:
        mask = g.neighborhood_masks[v]
        if mask == g.full_mask:
            continue
        groups.setdefault(frozenset((mask, g.full_mask & ~mask)), []).append(v)
    result = []
    for inputs in groups.values():
        mask = g.neighborhood_masks[inputs[0]]
        result.append(Partition(frozenset(inputs), from_mask(g.full_mask & ~mask), from_mask(mask)))
    result.sort(key=lambda p: min(p.input_class))
    return result


def is_testable_micro(g: Graph, a) -> bool:
    a = g.check_subset(a)
    if not a or len(a) == g.n:
        return True
    for v in g.vertices:
        if a in partition_for_input(g, v):
            return True
    return False


def build_micro_logic(g: Graph) -> MicroLogic:
    partitions = distinct_partitions(g)
    bottom, top = frozenset(), frozenset(g.vertices)
    elements: list[StateSet] = [bottom, top]
    same_algebra: set[frozenset[StateSet]] = set()
    for p in partitions:
        elements.extend(p.blocks)
        same_algebra.add(frozenset(p.blocks))

    def leq(x, y):
        if x == y or x == bottom or y == top:
            return True
        # blocks of one split are disjoint, so within an algebra only equality survives
        return frozenset((x, y)) in same_algebra and x <= y

    return MicroLogic(g.n, tuple(partitions), Poset.from_relation(elements, leq))


def _index(m: MicroLogic, a) -> int:
    try:
        return m.poset.index(frozenset(a))
    except KeyError:
        raise ValueError(f"{sorted(a)} is not an element of the partition logic") from None


def micro_implies(m: MicroLogic, a, b) -> bool:
    return m.poset.le(_index(m, a), _index(m, b))


def micro_negation(m: MicroLogic, a) -> StateSet:
    _index(m, a)
    complement = m.top - frozenset(a)
    assert complement in m, f"complement of {sorted(a)} missing from the logic"
    return complement


def recognize_mo_n(m: MicroLogic) -> int:
    """Confirm the structure is MOn and return n, the number of splits."""
    middle = [a for a in m.elements if a != m.bottom and a != m.top]
    idx = {a: m.poset.index(a) for a in middle}
    for a in middle:
        for b in middle:
            if a != b:
                assert not m.poset.le(idx[a], idx[b]), f"{sorted(a)} <= {sorted(b)} in MOn middle layer"
    for i, a in enumerate(m.elements):
        assert m.poset.le(m.poset.index(m.bottom), i)
        assert m.poset.le(i, m.poset.index(m.top))
    pairs = set()
    for a in middle:
        neg = micro_negation(m, a)
        assert neg in idx and neg != a
        assert micro_negation(m, neg) == a
        pairs.add(frozenset((a, neg)))
    assert len(middle) == 2 * len(pairs) == 2 * len(m.partitions)
    return len(pairs)
