"""Absorbing a cycle edge (or a whole cycle) into a PC path.

Both constructions keep the path's character. ``lemma1_absorb`` works on a
three-vertex path whose middle vertex can be swapped for a cycle vertex;
``lemma2_absorb`` works on any path in a complete host whose end vertices see
the chosen cycle edge in the path's end colors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, TheoremViolation
from .graph import EdgeColoredGraph
from .walks import (
    PCCycle,
    PCPath,
    cycle_arc,
    cycle_edge_color,
    make_path,
    scan_anchor_indices,
    verify_pc_cycle,
    verify_pc_path,
)

BRANCHES = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class Lemma1Result:
    path: PCPath
    branch: str  # one of BRANCHES, the case-table row that fired
    mirrored: bool  # True when the 3-path was reversed to normalise colors


def _require_disjoint(P: PCPath, C: PCCycle) -> None:
    if P.vertex_set & C.vertex_set:
        raise PreconditionError("path and cycle share a vertex")


def _checked(G: EdgeColoredGraph, seq: list[int], want, what: str) -> PCPath:
    Q = make_path(G, seq)
    if Q is None:
        raise TheoremViolation(f"{what}: constructed sequence {seq} is not a PC path")
    if Q.character != want:
        raise TheoremViolation(f"{what}: character changed from {want} to {Q.character}")
    return Q


def lemma1_absorb(G: EdgeColoredGraph, P3: PCPath, C: PCCycle, v: int, vp: int) -> Lemma1Result:
    """Absorb the arc ``v C vp`` or the edge ``v vp`` into the 3-path ``u1 u2 u3``.

    Requires that *v* can replace ``u2`` and that ``u2 vp`` is an edge.
    """
    if len(P3) != 3:
        raise PreconditionError("lemma1_absorb needs a path on exactly three vertices")
    _require_disjoint(P3, C)
    if not verify_pc_path(G, P3) or not verify_pc_cycle(G, C):
        raise PreconditionError("inputs are not a PC path and a PC cycle")
    u1, u2, u3 = P3.vertices
    red, blue = P3.colors
    for a, b in ((v, u1), (v, u3), (u2, vp)):
        if not G.has_edge(a, b):
            raise PreconditionError(f"missing edge ({a}, {b})")
    if G.color(v, u1) != red or G.color(v, u3) != blue:
        raise PreconditionError(f"vertex {v} cannot replace {u2}")
    c = cycle_edge_color(C, v, vp)
    arc = cycle_arc(C, v, vp)
    a, b = arc.colors[0], arc.colors[-1]
    k = G.color(u2, vp)

    mirrored = False
    if k not in (red, blue):
        if a == red:
            mirrored = True
            u1, u3, red, blue = u3, u1, blue, red
        assert a != red, "RED and BLUE are distinct, so one of them differs from a"
        if k != b:
            branch, seq = "a", [u1, *arc.vertices, u2, u3]
        elif c != red:
            branch, seq = "b", [u1, v, vp, u2, u3]
        else:
            branch, seq = "c", [u1, u2, vp, v, u3]
    else:
        if k == blue:
            mirrored = True
            u1, u3, red, blue = u3, u1, blue, red
        if c == red:
            branch, seq = "d", [u1, *arc.vertices, u2, u3]
        else:
            branch, seq = "e", [u1, v, vp, u2, u3]
    Q = _checked(G, seq, P3.character, f"lemma 1 branch {branch}")
    if Q.first != P3.first:
        Q = Q.reversed()
    return Lemma1Result(Q, branch, mirrored)


def _lemma1_in_place(G: EdgeColoredGraph, P: PCPath, C: PCCycle, w: int, wp: int, r: int) -> PCPath:
    """Run lemma 1 on ``P[r-1] P[r] P[r+1]`` (``w`` replaces ``P[r]``) and splice back."""
    P3 = PCPath(P.vertices[r - 1:r + 2], P.colors[r - 1:r + 1])
    Q3 = lemma1_absorb(G, P3, C, w, wp).path
    return _checked(G, [*P.vertices[:r - 1], *Q3.vertices, *P.vertices[r + 2:]], P.character, "lemma 1 splice")


def lemma2_absorb(G: EdgeColoredGraph, P: PCPath, C: PCCycle, v: int, vp: int) -> PCPath:
    """Absorb ``{v, vp}`` (or all of *C*) into *P* keeping its character.

    The host must be complete on ``V(P) | V(C)``, and the two end vertices of
    *P* must see ``v`` and ``vp`` only in the path's first / last color.
    """
    m = len(P)
    if m < 2:
        raise PreconditionError("path needs at least two vertices")
    _require_disjoint(P, C)
    if not verify_pc_path(G, P) or not verify_pc_cycle(G, C):
        raise PreconditionError("inputs are not a PC path and a PC cycle")
    if not G.is_complete_on(P.vertices + C.vertices):
        raise PreconditionError("host is not complete on V(P) | V(C)")
    c = cycle_edge_color(C, v, vp)
    x, y = P.colors[0], P.colors[-1]
    if G.color_summary(P.first, (v, vp)) != {x}:
        raise PreconditionError(f"col(u1, {{v, v'}}) != {{{x}}}")
    if G.color_summary(P.last, (v, vp)) != {y}:
        raise PreconditionError(f"col(um, {{v, v'}}) != {{{y}}}")
    want = P.character

    if m == 2:
        if c != x:
            return _checked(G, [P.first, v, vp, P.last], want, "lemma 2, m = 2")
        return _checked(G, [P.first, *cycle_arc(C, v, vp).vertices, P.last], want, "lemma 2, m = 2")

    # shortcut: some w in {v, v'} sees u2 in color x (or u_{m-1} in color y)
    for side in (P, P.reversed()):
        for w, wp in ((v, vp), (vp, v)):
            if G.color(w, side.vertices[1]) == side.colors[0]:
                full = make_path(G, [side.first, *cycle_arc(C, wp, w).vertices, *side.vertices[1:]])
                if full is not None:
                    return full
                return _checked(G, [side.first, wp, w, *side.vertices[1:]], want, "lemma 2 shortcut")

    ts = {}
    for w in (v, vp):
        t, s = scan_anchor_indices(G, P, w)
        if t is None or s is None or not (1 <= t <= m - 2 and 1 <= s <= m - 2):
            raise TheoremViolation(f"anchor indices of {w} out of range: t={t}, s={s}")
        ts[w] = (t, s)

    # a monochromatic triangle at t(w) lets w replace the previous path vertex
    for side, flip in ((P, False), (P.reversed(), True)):
        for w, wp in ((v, vp), (vp, v)):
            t, s = ts[w]
            t = m - 1 - s if flip else t
            if G.color(w, side.vertices[t]) == G.color(w, side.vertices[t - 1]):
                if t < 2:
                    raise TheoremViolation(f"triangle at t={t} contradicts col(w u2) != x")
                Q = _lemma1_in_place(G, side, C, w, wp, t - 1)
                return Q.reversed() if flip else Q

    for w in (v, vp):
        t, s = ts[w]
        if s < t:
            raise TheoremViolation(f"s({w}) = {s} < t({w}) = {t}")

    # w fits between P[t-1], P[t] and between P[s], P[s+1]
    for sv in (ts[v][0] - 1, ts[v][1]):
        for svp in (ts[vp][0] - 1, ts[vp][1]):
            if sv == svp:
                continue
            seq = list(P.vertices)
            for slot, w in sorted(((sv, v), (svp, vp)), reverse=True):
                seq.insert(slot + 1, w)
            Q = make_path(G, seq)
            if Q is not None:
                return Q

    (tv, sv_), (tvp, svp_) = ts[v], ts[vp]
    if tv == sv_ == tvp == svp_:
        return _lemma1_in_place(G, P, C, v, vp, tv)
    raise TheoremViolation(f"lemma 2 exhausted its cases (t, s) = {ts}")
