"""Logic of ensembles (macrostatements).

``perp(A)`` is the set of states that answer 0 to every input in ``A``:
the states outside the closed neighbourhood of each member.  Testable
macrostates are the images of ``perp``, i.e. the sets fixed by the
double-perp closure.  Ordered by inclusion and complemented by ``perp``
they form an ortholattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Graph, StateSet, format_set, from_mask, to_mask
from .micro_logic import partition_for_input
from .order_toolkit import Poset, is_lattice


def perp_mask(g: Graph, mask: int) -> int:
    result = g.full_mask
    v = 1
    while mask:
        if mask & 1:
            result &= ~g.neighborhood_masks[v]
        mask >>= 1
        v += 1
    return result & g.full_mask


def closure_mask(g: Graph, mask: int) -> int:
    return perp_mask(g, perp_mask(g, mask))


def perp(g: Graph, a) -> StateSet:
    return from_mask(perp_mask(g, to_mask(g.check_subset(a))))


def closure(g: Graph, a) -> StateSet:
    return from_mask(closure_mask(g, to_mask(g.check_subset(a))))


def is_testable_macro(g: Graph, b) -> bool:
    mask = to_mask(g.check_subset(b))
    return closure_mask(g, mask) == mask


def closed_masks(g: Graph) -> set[int]:
    """Closed sets as bitmasks: all intersections of the single-input perps."""
    family = {g.full_mask}
    generators = {perp_mask(g, 1 << (v - 1)) for v in g.vertices}
    worklist = list(family)
    while worklist:
        current = worklist.pop()
        for gen in generators:
            met = current & gen
            if met not in family:
                family.add(met)
                worklist.append(met)
    return family


def closed_masks_bruteforce(g: Graph) -> set[int]:
    """Reference enumeration: double-perp every one of the 2**n subsets."""
    return {closure_mask(g, mask) for mask in range(1 << g.n)}


def _report_key(a: StateSet):
    return len(a), sorted(a)


@dataclass(frozen=True)
class MacroLogic:
    graph: Graph
    poset: Poset
    ortho: dict = field(compare=False)

    @property
    def closed_sets(self) -> tuple[StateSet, ...]:
        return self.poset.elements

    @property
    def bottom(self) -> StateSet:
        return frozenset()

    @property
    def top(self) -> StateSet:
        return frozenset(self.graph.vertices)

    def __contains__(self, a) -> bool:
        return frozenset(a) in self.ortho

    def proper_sets(self) -> list[StateSet]:
        return [a for a in self.closed_sets if a and a != self.top]


def build_macro_logic(g: Graph) -> MacroLogic:
    family = sorted((from_mask(m) for m in closed_masks(g)), key=_report_key)
    ortho = {a: from_mask(perp_mask(g, to_mask(a))) for a in family}
    poset = Poset.from_relation(family, lambda a, b: a <= b)
    return MacroLogic(g, poset, ortho)


def _require_closed(m: MacroLogic, *sets) -> None:
    for a in sets:
        if frozenset(a) not in m:
            raise ValueError(f"{format_set(a)} is not a closed set")


def macro_meet(m: MacroLogic, a, b) -> StateSet:
    _require_closed(m, a, b)
    result = frozenset(a) & frozenset(b)
    assert result in m, "intersection of closed sets must be closed"
    return result


def macro_join(m: MacroLogic, a, b) -> StateSet:
    _require_closed(m, a, b)
    return closure(m.graph, frozenset(a) | frozenset(b))


@dataclass
class AxiomReport:
    """Outcome of a set of lattice axioms; each maps to its counterexamples."""

    failures: dict[str, list] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for name, bad in self.failures.items():
            if bad:
                shown = ", ".join(str(tuple(format_set(x) for x in case)) for case in bad[:3])
                out.append(f"{name}: FAIL ({len(bad)} counterexamples, e.g. {shown})")
            else:
                out.append(f"{name}: pass")
        return out


def check_ortholattice(m: MacroLogic) -> AxiomReport:
    els = m.closed_sets
    report = AxiomReport({
        "involution": [],
        "order_reversing": [],
        "noncontradiction": [],
        "excluded_middle": [],
        "lattice": [],
    })
    f = report.failures
    for a in els:
        a_perp = m.ortho[a]
        if a_perp not in m or m.ortho[a_perp] != a:
            f["involution"].append((a,))
        if macro_meet(m, a, a_perp) != m.bottom:
            f["noncontradiction"].append((a,))
        if macro_join(m, a, a_perp) != m.top:
            f["excluded_middle"].append((a,))
        for b in els:
            if a <= b and not m.ortho[b] <= a_perp:
                f["order_reversing"].append((a, b))
    ok, witness = is_lattice(m.poset)
    if not ok:
        i, j = witness
        f["lattice"].append((els[i], els[j]))
    else:
        # poset bounds must agree with intersection and closed union
        for i, a in enumerate(els):
            for j in range(i + 1, len(els)):
                b = els[j]
                if els[m.poset.meet(i, j)] != macro_meet(m, a, b) or els[m.poset.join(i, j)] != macro_join(m, a, b):
                    f["lattice"].append((a, b))
    return report


def check_orthomodular(m: MacroLogic) -> tuple[bool, tuple[StateSet, StateSet] | None]:
    """Look for ``a <= b`` with ``b != a v (a' ^ b)``; report the first in element order."""
    for a in m.closed_sets:
        for b in m.closed_sets:
            if a <= b and macro_join(m, a, macro_meet(m, m.ortho[a], b)) != b:
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class OverlapReport:
    micro: tuple[StateSet, ...]
    macro: tuple[StateSet, ...]

    @property
    def both(self) -> tuple[StateSet, ...]:
        macro = set(self.macro)
        return tuple(a for a in self.micro if a in macro)

    @property
    def micro_only(self) -> tuple[StateSet, ...]:
        macro = set(self.macro)
        return tuple(a for a in self.micro if a not in macro)

    @property
    def macro_only(self) -> tuple[StateSet, ...]:
        micro = set(self.micro)
        return tuple(a for a in self.macro if a not in micro)


def overlap_report(g: Graph) -> OverlapReport:
    """Compare the micro- and macro-testable families of ``g``."""
    micro = {frozenset(), frozenset(g.vertices)}
    for v in g.vertices:
        micro.update(partition_for_input(g, v))
    macro = {from_mask(mask) for mask in closed_masks(g)}
    for v in g.vertices:
        zero_block = perp(g, {v})
        assert zero_block in micro and zero_block in macro, f"v0 block of input {v} not shared"
    return OverlapReport(tuple(sorted(micro, key=_report_key)), tuple(sorted(macro, key=_report_key)))
