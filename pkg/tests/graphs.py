"""Graph corpus and generators shared by the test modules."""

import random
from itertools import combinations
from pathlib import Path

from automata_logic import Graph, parse_graph

DATA = Path(__file__).parent / "data"


def load(name: str) -> Graph:
    return parse_graph((DATA / f"{name}.txt").read_text(encoding="utf-8"))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    pairs = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, pairs)


def all_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def corpus() -> dict[str, Graph]:
    """Named graphs from tests/data plus seeded random graphs up to 12 vertices."""
    graphs = {path.stem: load(path.stem) for path in sorted(DATA.glob("*.txt"))}
    rng = random.Random(1994)
    for n in range(6, 13):
        for k in range(2):
            graphs[f"random_n{n}_{k}"] = random_graph(rng, n, rng.choice((0.2, 0.4, 0.6)))
    return graphs
