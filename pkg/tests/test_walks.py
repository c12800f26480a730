from __future__ import annotations

import pytest
from conftest import complete_graphs, mono_triangle, rainbow_triangle
from hypothesis import assume, given
from hypothesis import strategies as st

from pcgraph.errors import PreconditionError
from pcgraph.graph import EdgeColoredGraph, induced_subgraph
from pcgraph.oracle import brute_pc_hamilton_path
from pcgraph.walks import (
    Character,
    PCCycle,
    PCPath,
    absorb_at,
    character_of,
    cycle_arc,
    make_path,
    replace_vertex,
    scan_anchor_indices,
    verify_pc_cycle,
    verify_pc_path,
)


def test_verify_pc_path_examples():
    assert verify_pc_path(rainbow_triangle(), [0, 1, 2])
    same = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 1)])
    assert not verify_pc_path(same, [0, 1, 2])
    assert not verify_pc_path(rainbow_triangle(), [0, 1, 0])
    assert not verify_pc_path(rainbow_triangle(), [0, 7])


def test_verify_pc_cycle_examples():
    assert verify_pc_cycle(rainbow_triangle(), [0, 1, 2])
    assert not verify_pc_cycle(mono_triangle(), [0, 1, 2])
    multi = EdgeColoredGraph(2, [(0, 1, 1), (0, 1, 2)], multi=True)
    assert verify_pc_cycle(multi, [0, 1])
    assert verify_pc_cycle(multi, PCCycle((0, 1), (1, 2)))
    assert not verify_pc_cycle(multi, PCCycle((0, 1), (1, 1)))


def test_parallel_edges_choose_a_proper_color():
    G = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 1), (1, 2, 2)], multi=True)
    P = make_path(G, [0, 1, 2])
    assert P is not None and P.colors == (1, 2)


def test_character_examples():
    G = EdgeColoredGraph(3, [(0, 1, 1), (1, 2, 2)])
    assert character_of(G, [0, 1, 2]).as_list() == [0, 1, 2, 2]
    assert character_of(G, [2, 1, 0]) == character_of(G, [0, 1, 2])
    edge = EdgeColoredGraph(2, [(0, 1, 5)])
    assert character_of(edge, [1, 0]).as_list() == [0, 5, 5, 1]
    with pytest.raises(PreconditionError):
        character_of(edge, [0])


def _scan_instance(col_v):
    # path 0-1-2-3 colors 1,2,3; outside vertex 4
    edges = [(0, 1, 1), (1, 2, 2), (2, 3, 3)] + [(4, u, c) for u, c in enumerate(col_v)]
    G = EdgeColoredGraph(5, edges)
    return G, make_path(G, [0, 1, 2, 3])


def test_scan_anchor_indices_worked_example():
    G, P = _scan_instance([1, 7, 3, 3])
    # 0-based: position 1 is the first break forward, position 2 the last break backward
    assert scan_anchor_indices(G, P, 4) == (1, 2)


def test_scan_anchor_indices_absent_forward_break():
    G, P = _scan_instance([1, 2, 3, 9])
    t, _ = scan_anchor_indices(G, P, 4)
    assert t is None


def test_scan_anchor_indices_single_edge():
    G = EdgeColoredGraph(3, [(0, 1, 1), (2, 0, 2), (2, 1, 1)])
    assert scan_anchor_indices(G, make_path(G, [0, 1]), 2) == (0, None)


def test_scan_anchor_indices_rejects_path_vertex():
    G, P = _scan_instance([1, 7, 3, 3])
    with pytest.raises(PreconditionError):
        scan_anchor_indices(G, P, 2)


@given(complete_graphs(n_min=4, n_max=8, colors=3), st.data())
def test_scan_anchor_indices_agree_with_full_scan(G, data):
    P = brute_pc_hamilton_path(induced_subgraph(G, range(G.n - 1))[0])
    assume(P is not None)
    v = G.n - 1
    t, s = scan_anchor_indices(G, P, v)
    breaks_fwd = [i for i in range(len(P) - 1) if G.color(v, P.vertices[i]) != P.colors[i]]
    breaks_bwd = [i for i in range(1, len(P)) if G.color(v, P.vertices[i]) != P.colors[i - 1]]
    assert t == (min(breaks_fwd) if breaks_fwd else None)
    assert s == (max(breaks_bwd) if breaks_bwd else None)


def test_replace_vertex_examples():
    G = EdgeColoredGraph(4, [(0, 1, 1), (1, 2, 2), (3, 0, 1), (3, 2, 2)])
    P = make_path(G, [0, 1, 2])
    Q = replace_vertex(G, P, 3, 1)
    assert Q.vertices == (0, 3, 2) and Q.character.as_list() == [0, 1, 2, 2]
    H = EdgeColoredGraph(4, [(0, 1, 1), (1, 2, 2), (3, 0, 9), (3, 2, 2)])
    assert replace_vertex(H, make_path(H, [0, 1, 2]), 3, 1) is None
    with pytest.raises(PreconditionError):
        replace_vertex(G, P, 3, 0)


def test_absorb_at_examples():
    G = EdgeColoredGraph(3, [(0, 1, 1), (0, 2, 2), (2, 1, 3)])
    P = make_path(G, [0, 1])
    Q = absorb_at(G, P, PCPath((2,), ()), 0)
    assert Q.vertices == (0, 2, 1) and Q.colors == (2, 3)
    assert absorb_at(G, P, PCPath((2,), ()), 0, keep_character=True) is None
    # bridging color equal to the previous path color breaks the PC property
    H = EdgeColoredGraph(4, [(0, 1, 1), (1, 2, 2), (1, 3, 1), (3, 2, 3)])
    assert absorb_at(H, make_path(H, [0, 1, 2]), PCPath((3,), ()), 1) is None
    with pytest.raises(PreconditionError):
        absorb_at(G, P, PCPath((1,), ()), 0)


@given(complete_graphs(n_min=3, n_max=7))
def test_reversal_keeps_character(G):
    P = brute_pc_hamilton_path(G)
    assume(P is not None)
    assert P.reversed().character == P.character
    assert Character.of(P.last, P.colors[-1], P.colors[0], P.first) == P.character


@given(complete_graphs(n_min=5, n_max=7, colors=3), st.integers(0, 4), st.integers(1, 5))
def test_surgery_outputs_verify_and_keep_character(G, r, i):
    P = brute_pc_hamilton_path(induced_subgraph(G, range(G.n - 1))[0])
    assume(P is not None)
    v, m = G.n - 1, len(P)
    if 1 <= r <= m - 2:
        Q = replace_vertex(G, P, v, r)
        if Q is not None:
            assert verify_pc_path(G, Q) and Q.character == P.character
    slot = i % (m - 1)
    Q = absorb_at(G, P, PCPath((v,), ()), slot)
    if Q is not None:
        assert verify_pc_path(G, Q)
        if 0 < slot < m - 2:
            assert Q.character == P.character
    Q = absorb_at(G, P, PCPath((v,), ()), slot, keep_character=True)
    if Q is not None:
        assert verify_pc_path(G, Q) and Q.character == P.character


def test_cycle_arc_avoids_the_edge():
    C = PCCycle((0, 1, 2, 3), (1, 0, 2, 0))
    assert cycle_arc(C, 0, 1).vertices == (0, 3, 2, 1)
    assert cycle_arc(C, 1, 0).vertices == (1, 2, 3, 0)
