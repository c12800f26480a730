from __future__ import annotations

import random
from pathlib import Path

import pytest
from conftest import rainbow_triangle
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgraph import merge
from pcgraph.errors import PreconditionError
from pcgraph.formats import parse_document
from pcgraph.generators import gen_planted_factor, gen_thm12_instance
from pcgraph.graph import complete_graph
from pcgraph.merge import MergeTrace, OnePathCycleFactor, hamilton_from_factor, merge_path_cycle
from pcgraph.oracle import brute_pc_hamilton_path
from pcgraph.walks import PCPath, make_cycle, make_path, verify_pc_path

HARD = sorted((Path(__file__).parent / "data" / "merge").glob("*.ecg"))


def _smallest():
    col = {(2, 3): 2, (3, 4): 3, (2, 4): 4}
    return complete_graph(5, lambda u, v: col.get((u, v), 1))


def test_smallest_instance():
    Q, trace = merge_path_cycle(_smallest(), [0, 1], [2, 3, 4])
    assert Q.vertices == (0, 2, 3, 4, 1) and Q.colors == (1, 2, 3, 1)
    assert trace.is_decreasing() and not trace.fallback_fired


def test_precondition_on_end_colors():
    G = _smallest().recolored(0, 3, 5)
    with pytest.raises(PreconditionError):
        merge_path_cycle(G, [0, 1], [2, 3, 4])
    with pytest.raises(PreconditionError):
        merge_path_cycle(_smallest(), [0], [2, 3, 4])


def _triangle_endgame():
    """A triangle instance where u1 u2 v1 is monochromatic in the first path color."""
    for seed in range(500):
        G, P, C = gen_thm12_instance(4, 3, 4, seed)
        x = P.colors[0]
        if any(G.color(P.vertices[1], v) == x for v in C.vertices):
            return G, P, C
    raise AssertionError("no such instance in the seed range")


def test_triangle_endgame_against_oracle():
    G, P, C = _triangle_endgame()
    Q, trace = merge_path_cycle(G, P, C, allow_fallback=False)
    assert verify_pc_path(G, Q) and Q.character == P.character
    assert Q.vertex_set == P.vertex_set | C.vertex_set
    assert brute_pc_hamilton_path(G, required=P.character) is not None


@pytest.mark.parametrize("path", HARD, ids=[p.stem for p in HARD])
def test_adversarial_fixtures(path):
    doc = parse_document(path.read_text())
    G = doc.graph
    P, C = make_path(G, doc.path), make_cycle(G, doc.cycles[0])
    Q, trace = merge_path_cycle(G, P, C, allow_fallback=False)
    assert verify_pc_path(G, Q) and Q.character == P.character and len(Q) == G.n
    assert trace.is_decreasing()
    assert "-".join(trace.stages()) == path.stem


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 8), st.integers(3, 8), st.integers(2, 6), st.integers(0, 2**32))
def test_merge_contract(m, nc, colors, seed):
    if colors == 2 and nc % 2:
        nc += 1
    G, P, C = gen_thm12_instance(m, nc, colors, seed)
    Q, trace = merge_path_cycle(G, P, C, allow_fallback=False)
    assert verify_pc_path(G, Q) and Q.character == P.character
    assert Q.vertex_set == P.vertex_set | C.vertex_set
    assert trace.is_decreasing() and not trace.fallback_fired


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(3, 6), st.integers(3, 4), st.integers(0, 2**32))
def test_oracle_agrees_on_existence(m, nc, colors, seed):
    G, P, _ = gen_thm12_instance(m, nc, colors, seed)
    assert brute_pc_hamilton_path(G, required=P.character) is not None


def test_trace_monotonicity_check():
    assert MergeTrace([("enter", 10, 0), ("enter", 8, 1), ("enter", 6, 2), ("enter", 7, 1)]).is_decreasing()
    assert not MergeTrace([("enter", 10, 0), ("enter", 10, 1)]).is_decreasing()
    assert not MergeTrace([("enter", 10, 0), ("enter", 8, 2)]).is_decreasing()


def test_factor_without_cycles_is_returned_unchanged():
    G, f = gen_planted_factor(6, 0, 3, 1)
    assert hamilton_from_factor(G, f) == f.path


def test_single_vertex_plus_triangle():
    col = {(1, 2): 1, (2, 3): 2, (1, 3): 3}
    G = complete_graph(4, lambda u, v: col.get((u, v), 1))
    f = OnePathCycleFactor(PCPath((0,), ()), (make_cycle(G, [1, 2, 3]),))
    P = hamilton_from_factor(G, f)
    assert verify_pc_path(G, P) and len(P) == 4


def test_planted_nine_two():
    G, f = gen_planted_factor(9, 2, 4, 3)
    traces: list[MergeTrace] = []
    P = hamilton_from_factor(G, f, traces)
    assert verify_pc_path(G, P) and P.vertex_set == set(G.vertices)
    assert all(t.is_decreasing() and not t.fallback_fired for t in traces)


def test_invalid_factor_is_rejected():
    G = rainbow_triangle()
    f = OnePathCycleFactor(PCPath((0,), ()), ())
    with pytest.raises(PreconditionError):
        hamilton_from_factor(G, f)


@settings(max_examples=80, deadline=None)
@given(st.integers(4, 12), st.integers(0, 3), st.integers(2, 6), st.integers(0, 2**32))
def test_hamilton_from_planted_factors(n, k, colors, seed):
    try:
        G, f = gen_planted_factor(n, k, colors, seed)
    except PreconditionError:
        return
    P = hamilton_from_factor(G, f)
    assert verify_pc_path(G, P) and P.vertex_set == set(G.vertices)


def test_proof_stages_alone_solve_the_acceptance_corpus(monkeypatch):
    """With the insertion shortcut switched off the proof's own stages must carry every instance."""
    monkeypatch.setattr(merge._Merger, "_direct", lambda self, *a: None)
    rng = random.Random(2)
    used = set()
    for seed in range(300):
        m, nc, colors = rng.randint(2, 8), rng.randint(3, 8), rng.randint(2, 6)
        if colors == 2 and nc % 2:
            colors = 3
        G, P, C = gen_thm12_instance(m, nc, colors, seed)
        Q, trace = merge_path_cycle(G, P, C, allow_fallback=False)
        assert Q.character == P.character and trace.is_decreasing()
        used.update(trace.stages())
    assert {"edge-absorb", "triangle", "endpoint-colors", "v2-replace", "empty-front"} <= used
