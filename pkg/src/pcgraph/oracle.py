"""Brute-force reference searches.

Everything here is exponential and guarded by a vertex-count limit. The
constructive modules are checked against these, so nothing in this file
imports from them.
"""
from __future__ import annotations

from collections.abc import Iterable

from .errors import PreconditionError, SizeGuardError
from .graph import EdgeColoredGraph
from .walks import Character, PCCycle, PCPath, verify_pc_cycle

PATH_LIMIT = 16
HAMILTON_LIMIT = 12
ENUM_LIMIT = 12


def guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeGuardError(f"{what} is desk-scale only: n = {n} exceeds the limit {limit}")


def constrained_pc_path(
    G: EdgeColoredGraph,
    u: int,
    v: int,
    forbid_start: int | None = None,
    forbid_end: int | None = None,
    max_n: int = PATH_LIMIT,
) -> PCPath | None:
    """A PC path from *u* to *v* whose first / last colors avoid the given ones."""
    if u == v:
        raise PreconditionError("endpoints must differ")
    guard(G.n, max_n, "constrained_pc_path")
    dead: set[tuple[int, int, int]] = set()
    verts, cols = [u], []

    def dfs(cur: int, last: int | None, mask: int) -> bool:
        key = (cur, -1 if last is None else last, mask)
        if key in dead:
            return False
        for w, c in G.incident(cur):
            if c == last or mask >> w & 1:
                continue
            if last is None and c == forbid_start:
                continue
            verts.append(w)
            cols.append(c)
            if w == v:
                if c != forbid_end:
                    return True
            elif dfs(w, c, mask | 1 << w):
                return True
            verts.pop()
            cols.pop()
        dead.add(key)
        return False

    if dfs(u, None, 1 << u):
        return PCPath(tuple(verts), tuple(cols))
    return None


def pc_reachable(G: EdgeColoredGraph, u: int, v: int) -> bool:
    return constrained_pc_path(G, u, v) is not None


def find_spanning_pc_cycle(G: EdgeColoredGraph, S: Iterable[int], max_n: int = PATH_LIMIT) -> PCCycle | None:
    """A PC cycle of ``G[S]`` through every vertex of *S*."""
    S = sorted(set(S))
    guard(len(S), max_n, "find_spanning_pc_cycle")
    if len(S) < 2:
        return None
    inside = set(S)
    full = 0
    for w in S:
        full |= 1 << w
    s = S[0]
    if len(S) == 2:
        cs = sorted(set(G.colors_between(S[0], S[1])))
        return PCCycle(tuple(S), tuple(cs[:2])) if len(cs) >= 2 else None

    for w0, c0 in G.incident(s):
        if w0 not in inside:
            continue
        dead: set[tuple[int, int, int]] = set()
        verts, cols = [s, w0], [c0]

        def dfs(cur: int, last: int, mask: int) -> bool:
            if mask == full:
                for w, c in G.incident(cur):
                    if w == s and c != last and c != c0:
                        cols.append(c)
                        return True
                return False
            key = (cur, last, mask)
            if key in dead:
                return False
            for w, c in G.incident(cur):
                if w in inside and c != last and not mask >> w & 1:
                    verts.append(w)
                    cols.append(c)
                    if dfs(w, c, mask | 1 << w):
                        return True
                    verts.pop()
                    cols.pop()
            dead.add(key)
            return False

        if dfs(w0, c0, 1 << s | 1 << w0):
            return PCCycle(tuple(verts), tuple(cols))
    return None


def brute_pc_hamilton_path(
    G: EdgeColoredGraph, required: Character | None = None, max_n: int = HAMILTON_LIMIT
) -> PCPath | None:
    """A PC Hamilton path of *G*, optionally with a prescribed character."""
    guard(G.n, max_n, "brute_pc_hamilton_path")
    n = G.n
    if n == 0:
        return None
    if n == 1:
        return PCPath((0,), ()) if required is None else None
    full = (1 << n) - 1
    dead: set[tuple[int, int, int]] = set()
    verts: list[int] = []
    cols: list[int] = []

    def dfs(cur: int, last: int, mask: int) -> bool:
        if mask == full:
            return required is None or (cur == required.end_b and last == required.color_b)
        key = (cur, last, mask)
        if key in dead:
            return False
        for w, c in G.incident(cur):
            if c == last or mask >> w & 1:
                continue
            if required is not None and w == required.end_b and mask | 1 << w != full:
                continue
            verts.append(w)
            cols.append(c)
            if dfs(w, c, mask | 1 << w):
                return True
            verts.pop()
            cols.pop()
        dead.add(key)
        return False

    starts = [required.end_a] if required is not None else list(range(n))
    for s in starts:
        for w, c in G.incident(s):
            if required is not None and c != required.color_a:
                continue
            if required is not None and w == required.end_b and n != 2:
                continue
            verts[:], cols[:] = [s, w], [c]
            if dfs(w, c, 1 << s | 1 << w):
                return PCPath(tuple(verts), tuple(cols))
    return None


def _canonical_cycle(vs: list[int], cs: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    k = len(vs)
    if k == 2:
        return (tuple(vs), tuple(sorted(cs)))
    i = vs.index(min(vs))
    fwd_v = [vs[(i + j) % k] for j in range(k)]
    fwd_c = [cs[(i + j) % k] for j in range(k)]
    if fwd_v[1] < fwd_v[-1]:
        return tuple(fwd_v), tuple(fwd_c)
    back_v = [fwd_v[0]] + fwd_v[:0:-1]
    back_c = fwd_c[::-1]
    return tuple(back_v), tuple(back_c)


def enumerate_pc_cycles(G: EdgeColoredGraph, span_only: bool = False, max_n: int = ENUM_LIMIT) -> list[PCCycle]:
    """All PC cycles of *G* up to rotation and reflection."""
    guard(G.n, max_n, "enumerate_pc_cycles")
    found: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    n = G.n
    for s in range(n):
        verts, cols = [s], []

        def dfs(cur: int, last: int | None) -> None:
            for w, c in G.incident(cur):
                if c == last:
                    continue
                if w == s and len(verts) >= 2 and c != cols[0]:
                    if len(verts) == 2 and (cols[0], c) != tuple(sorted((cols[0], c))):
                        continue
                    if len(verts) >= 3 and verts[1] > verts[-1]:
                        continue
                    if span_only and len(verts) != n:
                        continue
                    found.add(_canonical_cycle(verts, cols + [c]))
                elif w > s and w not in verts:
                    verts.append(w)
                    cols.append(c)
                    dfs(w, c)
                    verts.pop()
                    cols.pop()

        dfs(s, None)
    out = [PCCycle(v, c) for v, c in sorted(found)]
    assert all(verify_pc_cycle(G, C) for C in out)
    return out
