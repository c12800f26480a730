from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import strategies as st

from pcgraph.generators import MultipartiteTournament
from pcgraph.graph import EdgeColoredGraph, complete_graph


def rainbow_triangle() -> EdgeColoredGraph:
    return EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])


def mono_triangle() -> EdgeColoredGraph:
    return EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def mono_star(leaves: int = 3, color: int = 1) -> EdgeColoredGraph:
    return EdgeColoredGraph(leaves + 1, [(0, i, color) for i in range(1, leaves + 1)])


def random_graph(rng: random.Random, n_max: int = 8, multi: bool = False) -> EdgeColoredGraph:
    n = rng.randint(1, n_max)
    p = rng.random()
    k = rng.randint(1, 4)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randrange(k)))
                if multi and rng.random() < 0.2:
                    edges.append((u, v, rng.randrange(k)))
    return EdgeColoredGraph(n, edges, multi=multi)


@st.composite
def graphs(draw, n_max: int = 7, colors: int = 4, multi: bool = False) -> EdgeColoredGraph:
    n = draw(st.integers(1, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    for u, v in pairs:
        for c in draw(st.lists(st.integers(0, colors - 1), max_size=2 if multi else 1, unique=True)):
            edges.append((u, v, c))
    return EdgeColoredGraph(n, edges, multi=multi)


@st.composite
def complete_graphs(draw, n_min: int = 2, n_max: int = 7, colors: int = 3) -> EdgeColoredGraph:
    n = draw(st.integers(n_min, n_max))
    table = {(u, v): draw(st.integers(0, colors - 1)) for u in range(n) for v in range(u + 1, n)}
    return complete_graph(n, lambda u, v: table[(u, v)])


def directed_cycles(T: MultipartiteTournament) -> set[frozenset[tuple[int, int]]]:
    out = set()
    for k in range(3, T.n + 1):
        for seq in permutations(range(T.n), k):
            if seq[0] != min(seq):
                continue
            arcs = list(zip(seq, seq[1:] + seq[:1]))
            if all(a in T.arcs for a in arcs):
                out.add(frozenset(arcs))
    return out


def oriented(T: MultipartiteTournament, C) -> frozenset[tuple[int, int]]:
    """Orient each cycle edge away from the endpoint whose part matches its color."""
    where = T.part_of()
    arcs = set()
    for u, v, c in C.edges():
        assert where[u] != where[v], "an intra-part edge appeared on a PC cycle"
        arcs.add((u, v) if where[u] == c - 1 else (v, u))
    return frozenset(arcs)


def is_directed_cycle(arcs: frozenset[tuple[int, int]]) -> bool:
    tails = [a for a, _ in arcs]
    heads = [b for _, b in arcs]
    return sorted(tails) == sorted(heads) and len(set(tails)) == len(tails)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)
