"""The reference searches, checked against naive itertools enumeration."""
from __future__ import annotations

from itertools import permutations, product

import pytest
from conftest import graphs, mono_triangle, rainbow_triangle
from hypothesis import given, settings

from pcgraph.errors import SizeGuardError
from pcgraph.generators import construction1
from pcgraph.graph import EdgeColoredGraph
from pcgraph.oracle import (
    brute_pc_hamilton_path,
    constrained_pc_path,
    enumerate_pc_cycles,
    find_spanning_pc_cycle,
    pc_reachable,
)
from pcgraph.walks import Character, verify_pc_cycle, verify_pc_path


def naive_paths(G: EdgeColoredGraph):
    """Every PC path (vertex sequence plus one color choice per edge) by brute force."""
    for k in range(2, G.n + 1):
        for seq in permutations(G.vertices, k):
            choices = [G.colors_between(a, b) for a, b in zip(seq, seq[1:])]
            if not all(choices):
                continue
            for cs in product(*choices):
                if all(cs[i] != cs[i + 1] for i in range(len(cs) - 1)):
                    yield seq, cs


def naive_cycles(G: EdgeColoredGraph) -> set[tuple[frozenset, frozenset]]:
    """PC cycles as (vertex set, edge multiset) keys."""
    out = set()
    for k in range(2, G.n + 1):
        for seq in permutations(G.vertices, k):
            if seq[0] != min(seq):
                continue
            ring = list(zip(seq, seq[1:] + seq[:1]))
            choices = [G.colors_between(a, b) for a, b in ring]
            if not all(choices):
                continue
            for cs in product(*choices):
                if k == 2 and cs[0] == cs[1]:
                    continue
                if all(cs[i] != cs[(i + 1) % k] for i in range(k)):
                    out.add(frozenset((frozenset(e), c) for e, c in zip(ring, cs)))
    return out


def cycle_key(C):
    return frozenset((frozenset((a, b)), c) for a, b, c in C.edges())


def test_small_examples():
    assert enumerate_pc_cycles(mono_triangle()) == []
    cycles = enumerate_pc_cycles(rainbow_triangle())
    assert [C.vertices for C in cycles] == [(0, 1, 2)]
    G = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 1)])
    assert not pc_reachable(G, 0, 2) and pc_reachable(rainbow_triangle(), 0, 2)


def test_constrained_path_respects_end_colors():
    G = rainbow_triangle()
    P = constrained_pc_path(G, 0, 1, forbid_start=1)
    assert P.vertices == (0, 2, 1)
    assert constrained_pc_path(G, 0, 1, forbid_start=1, forbid_end=2) is None


def test_size_guards():
    big = EdgeColoredGraph(17, [])
    with pytest.raises(SizeGuardError, match="desk-scale"):
        constrained_pc_path(big, 0, 1)
    with pytest.raises(SizeGuardError):
        enumerate_pc_cycles(EdgeColoredGraph(13, []))


@settings(max_examples=60, deadline=None)
@given(graphs(n_max=5, colors=3, multi=True))
def test_constrained_path_matches_naive(G):
    paths = list(naive_paths(G))
    for u in G.vertices:
        for v in G.vertices:
            if u == v:
                continue
            for fs in (None, 0, 1):
                for fe in (None, 0, 2):
                    want = any(
                        seq[0] == u and seq[-1] == v and cs[0] != fs and cs[-1] != fe for seq, cs in paths
                    )
                    got = constrained_pc_path(G, u, v, forbid_start=fs, forbid_end=fe)
                    assert (got is not None) == want
                    if got is not None:
                        assert verify_pc_path(G, got) and got.colors[0] != fs and got.colors[-1] != fe


@settings(max_examples=60, deadline=None)
@given(graphs(n_max=5, colors=3, multi=True))
def test_cycle_enumeration_matches_naive(G):
    found = enumerate_pc_cycles(G)
    assert all(verify_pc_cycle(G, C) for C in found)
    assert {cycle_key(C) for C in found} == naive_cycles(G)
    assert len(found) == len({cycle_key(C) for C in found})


@settings(max_examples=60, deadline=None)
@given(graphs(n_max=6, colors=3))
def test_hamilton_and_spanning_cycle_match_naive(G):
    paths = [(seq, cs) for seq, cs in naive_paths(G) if len(seq) == G.n]
    P = brute_pc_hamilton_path(G)
    assert (P is not None) == (bool(paths) or G.n == 1)
    if paths:
        seq, cs = paths[0]
        ch = Character.of(seq[0], cs[0], cs[-1], seq[-1])
        Q = brute_pc_hamilton_path(G, required=ch)
        assert Q is not None and Q.character == ch and len(Q) == G.n
    spanning = any(len(key) == G.n for key in naive_cycles(G))
    assert (find_spanning_pc_cycle(G, G.vertices) is not None) == (spanning and G.n >= 3)


def test_construction1_has_triangles_but_no_spanning_cycle():
    G = construction1()
    assert enumerate_pc_cycles(G, span_only=True) == []
    assert find_spanning_pc_cycle(G, G.vertices) is None
    triangles = {C.vertex_set for C in enumerate_pc_cycles(G) if len(C) == 3}
    assert frozenset({0, 1, 2}) in triangles and frozenset({3, 4, 5}) in triangles
