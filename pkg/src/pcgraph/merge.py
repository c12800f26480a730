"""Merging a PC path with a PC cycle in an edge-colored complete graph.

``merge_path_cycle`` returns a PC Hamilton path of ``V(P) | V(C)`` with the
same character as ``P`` whenever the two ends of ``P`` see the cycle only in
the path's end colors. It works by recursion on ``2|C| + |P|``: every step
either builds the answer directly or hands a strictly smaller instance to a
recursive call. ``hamilton_from_factor`` absorbs the cycles of a PC
1-path-cycle factor one at a time, calling the merge whenever the cheap
extensions fail.

Every candidate path is verified before it is used, so a wrong case
analysis surfaces as :class:`TheoremViolation` rather than as bad output.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import permutations

from .absorb import lemma1_absorb, lemma2_absorb
from .errors import PreconditionError, TheoremViolation
from .graph import EdgeColoredGraph, induced_subgraph
from .oracle import brute_pc_hamilton_path, find_spanning_pc_cycle
from .walks import (
    Character,
    PCCycle,
    PCPath,
    make_cycle,
    make_path,
    scan_anchor_indices,
    verify_pc_cycle,
    verify_pc_path,
)

log = logging.getLogger(__name__)

FALLBACK_LIMIT = 14


@dataclass
class MergeTrace:
    """One ``(label, size, depth)`` record per recursive call and per resolved stage.

    ``size`` is ``2|C| + |P|`` of the instance; calls are labelled ``"enter"``.
    """

    records: list[tuple[str, int, int]] = field(default_factory=list)
    fallback_fired: bool = False

    def calls(self) -> list[tuple[int, int]]:
        return [(size, depth) for label, size, depth in self.records if label == "enter"]

    def stages(self) -> list[str]:
        return [label for label, _, _ in self.records if label != "enter"]

    def is_decreasing(self) -> bool:
        """Every recursive call is strictly smaller than the call that made it."""
        stack: list[int] = []
        for size, depth in self.calls():
            del stack[depth:]
            if len(stack) != depth or (stack and size >= stack[-1]):
                return False
            stack.append(size)
        return True


@dataclass(frozen=True)
class OnePathCycleFactor:
    path: PCPath
    cycles: tuple[PCCycle, ...] = ()

    def problems(self, G: EdgeColoredGraph) -> list[str]:
        out = []
        parts = [self.path.vertices] + [C.vertices for C in self.cycles]
        seen: list[int] = [v for p in parts for v in p]
        if len(seen) != len(set(seen)):
            out.append("parts are not vertex-disjoint")
        if set(seen) != set(G.vertices):
            out.append("parts do not cover every vertex")
        if not verify_pc_path(G, self.path):
            out.append("path is not properly colored")
        for C in self.cycles:
            if len(C) < 3 or not verify_pc_cycle(G, C):
                out.append(f"cycle {list(C.vertices)} is not a PC cycle")
        return out


# -- candidate helpers -------------------------------------------------------


def _orientations(C: PCCycle) -> Iterator[tuple[int, ...]]:
    """All 2n labellings ``v1 .. vn`` of the cycle."""
    vs = C.vertices
    n = len(vs)
    for seq in (vs, (vs[0],) + vs[:0:-1]):
        for j in range(n):
            yield tuple(seq[(j + t) % n] for t in range(n))


def _first_valid(
    G: EdgeColoredGraph, span: frozenset[int], want: Character, seqs: Iterable[Sequence[int]]
) -> PCPath | None:
    for seq in seqs:
        if len(seq) != len(span) or set(seq) != span:
            continue
        Q = make_path(G, seq)
        if Q is not None and Q.character == want:
            return Q
    return None


def _sides(P: PCPath) -> tuple[PCPath, PCPath]:
    return P, P.reversed()


def _hypothesis_problem(G: EdgeColoredGraph, P: PCPath, C: PCCycle) -> str | None:
    if len(P) < 2:
        return "path needs at least two vertices"
    if len(C) < 3:
        return "cycle needs at least three vertices"
    if P.vertex_set & C.vertex_set:
        return "path and cycle share a vertex"
    if not verify_pc_path(G, P):
        return "path is not properly colored"
    if not verify_pc_cycle(G, C):
        return "cycle is not properly colored"
    if not G.is_complete_on(P.vertices + C.vertices):
        return "host is not complete on V(P) | V(C)"
    x, y = P.colors[0], P.colors[-1]
    if G.color_summary(P.first, C.vertices) != {x}:
        return f"col(u1, V(C)) != {{{x}}}"
    if G.color_summary(P.last, C.vertices) != {y}:
        return f"col(um, V(C)) != {{{y}}}"
    return None


# -- the recursion -----------------------------------------------------------


class _Merger:
    def __init__(self, allow_fallback: bool):
        self.allow_fallback = allow_fallback
        self.trace = MergeTrace()
        self.stages = (
            ("direct", self._direct),
            ("edge-absorb", self._edge_absorb),
            ("recolor", self._recolor),
            ("empty-front", self._empty_front),
            ("endpoint-colors", self._endpoint_colors),
            ("v2-replace", self._v2_replace),
            ("shrink-cycle", self._shrink_cycle),
            ("four-cycle", self._four_cycle),
            ("triangle", self._triangle),
        )

    def solve(self, G: EdgeColoredGraph, P: PCPath, C: PCCycle, depth: int = 0) -> PCPath:
        size = 2 * len(C) + len(P)
        self.trace.records.append(("enter", size, depth))
        problem = _hypothesis_problem(G, P, C)
        if problem is not None:
            if depth == 0:
                raise PreconditionError(problem)
            raise TheoremViolation(f"recursive instance at depth {depth} is invalid: {problem}")
        span = P.vertex_set | C.vertex_set
        for label, stage in self.stages:
            Q = stage(G, P, C, depth)
            if Q is None:
                continue
            if Q.vertex_set != span or Q.character != P.character or not verify_pc_path(G, Q):
                raise TheoremViolation(f"stage {label} returned a path that does not solve the instance")
            self.trace.records.append((label, size, depth))
            return Q if Q.first == P.first else Q.reversed()
        return self._fallback(G, P, C, depth)

    # The stages below return None when they do not apply.

    def _direct(self, G, P, C, depth):
        # C opened anywhere and dropped between two consecutive path vertices
        span = P.vertex_set | C.vertex_set
        u = P.vertices
        arcs = list(_orientations(C))
        return _first_valid(
            G, span, P.character, ([*u[:i + 1], *a, *u[i + 1:]] for i in range(len(u) - 1) for a in arcs)
        )

    def _edge_absorb(self, G, P, C, depth):
        n, m = len(C), len(P)
        shorts = []
        for j in range(n):
            v, vp = C.vertices[j], C.vertices[(j + 1) % n]
            Q = lemma2_absorb(G, P, C, v, vp)
            if len(Q) == m + n:
                return Q
            shorts.append((v, vp, Q))
        if n - 2 < 3:
            return None
        for v, vp, Q in shorts:
            H = find_spanning_pc_cycle(G, C.vertex_set - {v, vp})
            if H is not None:
                return self.solve(G, Q, H, depth + 1)
        return None

    def _recolor(self, G, P, C, depth):
        n = len(C)
        L = C.vertices
        for i in range(n):
            a = C.colors[i]
            for j in range(n):
                if j == i or C.colors[j] != a or G.color(L[j], L[(i + 1) % n]) != a:
                    continue
                inner = (j - i) % n
                if inner < 3 or n - inner < 3:
                    continue
                vi, vj1 = L[i], L[(j + 1) % n]
                Cp = make_cycle(G, [L[(i + 1 + t) % n] for t in range(inner)])
                G2 = G.recolored(vi, vj1, a)
                H = make_cycle(G2, [L[(j + 1 + t) % n] for t in range(n - inner)])
                if Cp is None or H is None:
                    raise TheoremViolation("recoloring step produced a non-PC cycle")
                Q = self.solve(G2, P, H, depth + 1)
                qs = list(Q.vertices)
                seg = [L[(i + t) % n] for t in range(inner + 2)]
                for k in range(len(qs) - 1):
                    if {qs[k], qs[k + 1]} == {vi, vj1}:
                        ins = seg if qs[k] == vi else seg[::-1]
                        R = make_path(G, qs[:k] + ins + qs[k + 2:])
                        if R is None:
                            raise TheoremViolation("splicing the recolored edge back failed")
                        return R
                Qg = make_path(G, qs)
                if Qg is None:
                    raise TheoremViolation("merge over the recolored graph is not PC in the host")
                return self.solve(G, Qg, Cp, depth + 1)
        return None

    def _empty_front(self, G, P, C, depth):
        u, m = P.vertices, len(P)
        for i in range(1, m - 1):
            if all(G.color(u[i], v) == P.colors[i] for v in C.vertices):
                Q = self.solve(G, PCPath(u[i:], P.colors[i:]), C, depth + 1)
                if Q.first != u[i]:
                    Q = Q.reversed()
                return make_path(G, u[:i] + Q.vertices)
            if all(G.color(u[i], v) == P.colors[i - 1] for v in C.vertices):
                Q = self.solve(G, PCPath(u[:i + 1], P.colors[:i]), C, depth + 1)
                if Q.first != u[0]:
                    Q = Q.reversed()
                return make_path(G, Q.vertices + u[i + 1:])
        return None

    def _endpoint_colors(self, G, P, C, depth):
        # v1 in F+(u2) whose color to u2 is not a cycle color at v1
        if len(C) < 4 or len(P) < 3:
            return None
        span = P.vertex_set | C.vertex_set

        def candidates():
            for side in _sides(P):
                u = side.vertices
                for L in _orientations(C):
                    v1, v2, vn = L[0], L[1], L[-1]
                    k = G.color(v1, u[1])
                    if k == side.colors[1] or k in (G.color(v1, v2), G.color(vn, v1)):
                        continue
                    yield [u[0], *L[-2:0:-1], vn, v1, *u[1:]]

        return _first_valid(G, span, P.character, candidates())

    def _claim5_setup(self, G, side: PCPath, L) -> bool:
        u = side.vertices
        k = G.color(u[1], L[0])
        return k != side.colors[1] and k == G.color(L[0], L[1])

    def _v2_replace(self, G, P, C, depth):
        if len(C) < 4 or len(P) < 3:
            return None
        for side in _sides(P):
            for L in _orientations(C):
                if self._claim5_setup(G, side, L):
                    Q = self._claim5(G, side, C, L)
                    if Q is not None:
                        return Q
        return None

    def _claim5(self, G, side: PCPath, C: PCCycle, L) -> PCPath | None:
        u, m, n = side.vertices, len(side), len(C)
        x = side.colors[0]
        span = side.vertex_set | C.vertex_set
        want = side.character
        v1, v2, v3 = L[0], L[1], L[2]
        _, s = scan_anchor_indices(G, side, v2)
        if s is None:
            return None
        if s + 1 <= m - 1 and G.color(v2, u[s]) != G.color(v2, u[s + 1]):
            Q = _first_valid(G, span, want, [[u[0], *L[2:], v1, *u[1:s + 1], v2, *u[s + 1:]]])
            if Q is not None:
                return Q
        if not 2 <= s <= m - 3:
            return None
        if G.color(v2, u[s]) != side.colors[s] or G.color(v2, u[s + 2]) != side.colors[s + 1]:
            return None
        if G.color(L[3], L[4 % n]) == x:
            return None
        P3 = PCPath(u[s:s + 3], side.colors[s:s + 2])
        Q3 = lemma1_absorb(G, P3, C, v2, v3).path
        if len(Q3) == 3 + n:
            return _first_valid(G, span, want, [[*u[:s], *Q3.vertices, *u[s + 3:]]])
        W = [*Q3.vertices, *u[s + 3:]]
        return _first_valid(G, span, want, [[u[0], *L[3:], v1, *u[1:s], *W]])

    def _shrink_cycle(self, G, P, C, depth):
        n = len(C)
        if n < 5 or len(P) < 3:
            return None
        if n >= 6:
            # holds once the edge-absorb and recolor stages have both declined
            for i in range(n):
                if C.colors[i] == C.colors[(i + 4) % n]:
                    raise TheoremViolation(f"cycle edges {i} and {(i + 4) % n} share a color")
        for side in _sides(P):
            u = side.vertices
            for L in _orientations(C):
                if not self._claim5_setup(G, side, L):
                    continue
                Cp = make_cycle(G, L[1:5])
                Q = make_path(G, [u[0], *L[5:], L[0], *u[1:]])
                if Cp is not None and Q is not None and Q.character == P.character:
                    return self.solve(G, Q, Cp, depth + 1)
        return None

    def _four_cycle(self, G, P, C, depth):
        if len(C) != 4 or len(P) < 4:
            return None
        span = P.vertex_set | C.vertex_set
        want = P.character
        for side in _sides(P):
            u, m = side.vertices, len(side)
            x = side.colors[0]
            for L in _orientations(C):
                vs, w, p, q = L
                if G.color(u[2], vs) == side.colors[2] or G.color(vs, w) != x:
                    continue
                Q = _first_valid(
                    G,
                    span,
                    want,
                    [
                        [u[0], u[1], q, p, w, vs, *u[2:]],
                        [u[0], u[1], w, p, q, vs, *u[2:]],
                        [u[0], w, u[1], p, q, vs, *u[2:]],
                        [u[0], w, p, q, u[1], vs, *u[2:]],
                    ],
                )
                if Q is not None:
                    return Q
                for rep, other in ((p, q), (q, p)):
                    for r in range(3, m - 1):
                        if G.color(rep, u[r - 1]) != side.colors[r - 1] or G.color(rep, u[r + 1]) != side.colors[r]:
                            continue
                        P3 = PCPath(u[r - 1:r + 2], side.colors[r - 1:r + 1])
                        Q3 = lemma1_absorb(G, P3, C, rep, other).path.vertices
                        Q = _first_valid(
                            G,
                            span,
                            want,
                            [[*u[:r - 1], *Q3, *u[r + 2:]], [u[0], w, u[1], vs, *u[2:r - 1], *Q3, *u[r + 2:]]],
                        )
                        if Q is not None:
                            return Q
            for L in _orientations(C):
                vp, w1, w2, w3 = L
                Q = _first_valid(G, span, want, [[u[0], w1, w2, w3, *u[1:m - 1], vp, u[m - 1]]])
                if Q is not None:
                    return Q
        return None

    def _triangle(self, G, P, C, depth):
        if len(C) != 3 or len(P) < 3:
            return None
        span = P.vertex_set | C.vertex_set
        want = P.character
        for side in _sides(P):
            Q = _first_valid(G, span, want, self._triangle_candidates(G, side, C))
            if Q is not None:
                return Q
        return None

    def _triangle_candidates(self, G, side: PCPath, C: PCCycle) -> Iterator[list[int]]:
        u, m = list(side.vertices), len(side)
        alpha, y = side.colors[1], side.colors[-1]
        U = lambda i: u[i - 1]  # noqa: E731 - 1-based access keeps the sequences readable
        sub = PCPath(side.vertices[1:], side.colors[1:])
        for v1, v2, v3 in permutations(C.vertices):
            if G.color_summary(u[1], (v2, v3)) == {alpha} and G.color_summary(u[-1], (v2, v3)) == {y}:
                Pp = lemma2_absorb(G, sub, C, v2, v3)
                if Pp.first != u[1]:
                    Pp = Pp.reversed()
                yield [u[0], *Pp.vertices]
                yield [u[0], v1, *Pp.vertices]
            yield [U(1), U(2), v3, v2, v1, *u[2:]]
            yield [U(1), v3, U(2), v1, v2, *u[2:]]
            yield [U(1), v3, v1, U(2), v2, *u[2:]]
            if m >= 5:
                yield [U(1), U(2), v3, v1, *u[m - 2:1:-1], v2, U(m)]
                yield [U(1), U(2), *u[m - 2:1:-1], v2, v3, v1, U(m)]
                yield [U(1), v3, v1, v2, *u[m - 3:0:-1], U(m - 1), U(m)]
                yield [U(1), v1, *u[m - 3:0:-1], U(m - 1), v3, v2, U(m)]
                yield [U(1), v2, U(m - 1), *u[2:m - 2], v1, U(2), v3, U(m)]
            if m >= 6:
                tail = [U(1), U(2), U(3), *u[m - 2:2:-1]]
                for a, b, c in ((v1, v2, v3), (v1, v3, v2), (v3, v2, v1), (v3, v1, v2)):
                    yield [*tail, a, b, c, U(m)]
                yield [U(1), v2, *u[3:m - 2], v1, U(2), U(3), U(m - 1), v3, U(m)]
                yield [U(1), v3, v1, U(2), U(3), *u[m - 2:2:-1], v2, U(m)]

    def _fallback(self, G, P, C, depth):
        span = P.vertex_set | C.vertex_set
        if not self.allow_fallback or len(span) > FALLBACK_LIMIT:
            raise TheoremViolation(
                f"no construction applied to the instance P={list(P.vertices)}, C={list(C.vertices)}"
            )
        log.warning("merge fallback fired at depth %d (P=%s, C=%s)", depth, list(P.vertices), list(C.vertices))
        self.trace.fallback_fired = True
        H, order = induced_subgraph(G, span)
        idx = {v: i for i, v in enumerate(order)}
        ch = P.character
        R = brute_pc_hamilton_path(H, Character.of(idx[ch.end_a], ch.color_a, ch.color_b, idx[ch.end_b]), max_n=FALLBACK_LIMIT)
        if R is None:
            raise TheoremViolation("fallback search found no path with the required character")
        self.trace.records.append(("fallback", 2 * len(C) + len(P), depth))
        Q = make_path(G, [order[i] for i in R.vertices])
        assert Q is not None
        return Q if Q.first == P.first else Q.reversed()


def merge_path_cycle(
    G: EdgeColoredGraph, P: PCPath | Sequence[int], C: PCCycle | Sequence[int], allow_fallback: bool = True
) -> tuple[PCPath, MergeTrace]:
    """PC Hamilton path on ``V(P) | V(C)`` with the character of *P*.

    Preconditions: ``|P| >= 2``, the host is complete on ``V(P) | V(C)``, and
    every edge from the first (last) vertex of *P* to *C* has the path's first
    (last) color.
    """
    if not isinstance(P, PCPath):
        P = make_path(G, P)
        if P is None:
            raise PreconditionError("P is not a PC path")
    if not isinstance(C, PCCycle):
        C = make_cycle(G, C)
        if C is None:
            raise PreconditionError("C is not a PC cycle")
    merger = _Merger(allow_fallback)
    Q = merger.solve(G, P, C)
    return Q, merger.trace


def _extend_at_end(G: EdgeColoredGraph, cur: PCPath, C: PCCycle) -> PCPath | None:
    span = cur.vertex_set | C.vertex_set
    for path in (cur, cur.reversed()):
        for arc in _orientations(C):
            Q = make_path(G, [*path.vertices, *arc])
            if Q is not None and Q.vertex_set == span:
                return Q
    return None


def hamilton_from_factor(
    G: EdgeColoredGraph, factor: OnePathCycleFactor, traces: list[MergeTrace] | None = None
) -> PCPath:
    """A PC Hamilton path of the complete graph *G* from a PC 1-path-cycle factor."""
    problems = factor.problems(G)
    if problems:
        raise PreconditionError("; ".join(problems))
    if not G.is_complete_on(G.vertices):
        raise PreconditionError("host graph is not complete")
    cur = factor.path
    for C in factor.cycles:
        nxt = _extend_at_end(G, cur, C)
        if nxt is None:
            if len(cur) < 2:
                raise TheoremViolation("a single vertex always extends into a PC cycle")
            x, y = cur.colors[0], cur.colors[-1]
            if G.color_summary(cur.first, C.vertices) != {x} or G.color_summary(cur.last, C.vertices) != {y}:
                raise TheoremViolation("an end vertex sees a new color but no extension was found")
            nxt, trace = merge_path_cycle(G, cur, C)
            if traces is not None:
                traces.append(trace)
        cur = nxt
    if cur.vertex_set != set(G.vertices) or not verify_pc_path(G, cur):
        raise TheoremViolation("result is not a PC Hamilton path")
    return cur
