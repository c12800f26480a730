"""Seeded instance generators, the tournament encoding, and fixed fixtures.

Every generator takes an integer seed and is deterministic in it.
"""
from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import GraphError, PreconditionError
from .graph import EdgeColoredGraph, complete_graph
from .merge import OnePathCycleFactor
from .walks import PCCycle, PCPath, verify_pc_cycle, verify_pc_path

MAX_RETRIES = 1000


@dataclass(frozen=True)
class MultipartiteTournament:
    parts: tuple[tuple[int, ...], ...]
    arcs: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def part_of(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def validate(self) -> None:
        where = self.part_of()
        if sorted(where) != list(range(self.n)):
            raise GraphError("parts must partition 0 .. n-1")
        for u, v in self.arcs:
            if u not in where or v not in where:
                raise GraphError(f"arc ({u}, {v}) leaves the vertex set")
            if where[u] == where[v]:
                raise GraphError(f"arc ({u}, {v}) joins two vertices of one part")
            if (v, u) in self.arcs:
                raise GraphError(f"pair ({u}, {v}) is oriented both ways")
        for u in where:
            for v in where:
                if u < v and where[u] != where[v] and (u, v) not in self.arcs and (v, u) not in self.arcs:
                    raise GraphError(f"cross pair ({u}, {v}) has no arc")


def encode_tournament(T: MultipartiteTournament) -> EdgeColoredGraph:
    """Complete graph where ``uv`` gets color ``i + 1`` if ``u`` is in part ``i``
    and either ``v`` is too or the arc points from ``u`` to ``v``."""
    T.validate()
    where = T.part_of()

    def color(u: int, v: int) -> int:
        if where[u] == where[v] or (u, v) in T.arcs:
            return where[u] + 1
        return where[v] + 1

    return complete_graph(T.n, color)


def random_tournament(part_sizes: Sequence[int], seed: int) -> MultipartiteTournament:
    if not part_sizes or any(s < 1 for s in part_sizes):
        raise PreconditionError("need at least one part, each of positive size")
    rng = random.Random(seed)
    parts, start = [], 0
    for size in part_sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    where = {v: i for i, p in enumerate(parts) for v in p}
    arcs = set()
    for u in range(start):
        for v in range(u + 1, start):
            if where[u] != where[v]:
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return MultipartiteTournament(tuple(parts), frozenset(arcs))


def _pc_colors(rng: random.Random, length: int, palette: int, closed: bool) -> list[int]:
    """Random edge colors for a path (or cycle) with no two consecutive equal."""
    for _ in range(MAX_RETRIES):
        cs: list[int] = []
        for i in range(length):
            banned = {cs[-1]} if cs else set()
            if closed and i == length - 1:
                banned.add(cs[0])
            choices = [c for c in range(palette) if c not in banned]
            if not choices:
                break
            cs.append(rng.choice(choices))
        else:
            return cs
    raise PreconditionError(f"cannot properly color a {'cycle' if closed else 'path'} of {length} edges with {palette} colors")


def _partition(rng: random.Random, n: int, k: int, color_count: int) -> list[int]:
    """Sizes ``[path, cycle_1, ..., cycle_k]``; cycles are even when only two colors exist."""
    step = 2 if color_count == 2 else 1
    least = 4 if color_count == 2 else 3
    spare = n - 1 - k * least
    if spare < 0 or color_count < 2:
        raise PreconditionError(f"no partition of {n} into a path and {k} PC cycles with {color_count} colors")
    sizes = [1] + [least] * k
    while spare > 0:
        slot = rng.randrange(k + 1)
        if slot == 0:
            sizes[0] += 1
            spare -= 1
        elif spare >= step:
            sizes[slot] += step
            spare -= step
        elif k == 0 or step == 1:
            continue
        else:
            sizes[0] += spare
            spare = 0
    return sizes


def gen_planted_factor(n: int, k: int, color_count: int, seed: int) -> tuple[EdgeColoredGraph, OnePathCycleFactor]:
    """Random complete graph on *n* vertices containing a planted PC 1-path-cycle factor."""
    if n < 1 or k < 0:
        raise PreconditionError("need n >= 1 and k >= 0")
    rng = random.Random(seed)
    sizes = _partition(rng, n, k, color_count)
    order = list(range(n))
    rng.shuffle(order)
    groups, pos = [], 0
    for s in sizes:
        groups.append(order[pos:pos + s])
        pos += s
    colors: dict[tuple[int, int], int] = {}

    def put(a: int, b: int, c: int) -> None:
        colors[(min(a, b), max(a, b))] = c

    path_vs = groups[0]
    path_cs = _pc_colors(rng, len(path_vs) - 1, color_count, closed=False)
    for i, c in enumerate(path_cs):
        put(path_vs[i], path_vs[i + 1], c)
    cyc_data = []
    for g in groups[1:]:
        cs = _pc_colors(rng, len(g), color_count, closed=True)
        for i, c in enumerate(cs):
            put(g[i], g[(i + 1) % len(g)], c)
        cyc_data.append((tuple(g), tuple(cs)))
    G = complete_graph(n, lambda u, v: colors[(u, v)] if (u, v) in colors else rng.randrange(color_count))
    factor = OnePathCycleFactor(PCPath(tuple(path_vs), tuple(path_cs)), tuple(PCCycle(v, c) for v, c in cyc_data))
    assert not factor.problems(G)
    return G, factor


def gen_thm12_instance(m: int, nc: int, color_count: int, seed: int) -> tuple[EdgeColoredGraph, PCPath, PCCycle]:
    """Complete graph with a PC path ``0 .. m-1`` and PC cycle ``m .. m+nc-1``.

    Every edge from the first path vertex to the cycle has the path's first
    color, and every edge from the last path vertex has its last color.
    """
    if m < 2:
        raise PreconditionError("the path needs m >= 2 vertices")
    if nc < 3:
        raise PreconditionError("the cycle needs nc >= 3 vertices")
    if color_count < 2 or (color_count == 2 and nc % 2):
        raise PreconditionError(f"an odd cycle cannot be properly colored with {color_count} colors")
    rng = random.Random(seed)
    n = m + nc
    for _ in range(MAX_RETRIES):
        path_cs = _pc_colors(rng, m - 1, color_count, closed=False)
        cyc_cs = _pc_colors(rng, nc, color_count, closed=True)
        colors: dict[tuple[int, int], int] = {}
        for i, c in enumerate(path_cs):
            colors[(i, i + 1)] = c
        for i, c in enumerate(cyc_cs):
            a, b = m + i, m + (i + 1) % nc
            colors[(min(a, b), max(a, b))] = c
        x, y = path_cs[0], path_cs[-1]
        for v in range(m, n):
            colors[(0, v)] = x
            colors[(m - 1, v)] = y
        G = complete_graph(n, lambda u, v: colors[(u, v)] if (u, v) in colors else rng.randrange(color_count))
        P = PCPath(tuple(range(m)), tuple(path_cs))
        C = PCCycle(tuple(range(m, n)), tuple(cyc_cs))
        if verify_pc_path(G, P) and verify_pc_cycle(G, C):
            return G, P, C
    raise PreconditionError("could not generate a valid instance")


def gen_yeo_free(n: int, seed: int) -> tuple[EdgeColoredGraph, list[int]]:
    """Random graph with no PC cycle, plus an elimination order witnessing it.

    Built recursively: a root ``z`` is joined to every component of the rest
    with a single color per component.
    """
    if n < 1:
        raise PreconditionError("need n >= 1")
    rng = random.Random(seed)
    palette = max(2, n)
    edges: list[tuple[int, int, int]] = []

    def build(vs: list[int]) -> list[int]:
        z = vs[0]
        rest = vs[1:]
        if not rest:
            return [z]
        groups = rng.randint(1, len(rest))
        buckets: list[list[int]] = [[] for _ in range(groups)]
        for i, v in enumerate(rest):
            buckets[i if i < groups else rng.randrange(groups)].append(v)
        order = [z]
        for b in buckets:
            rng.shuffle(b)
            order += build(b)
            c = rng.randrange(palette)
            joins = [w for w in b if rng.random() < 0.5] or [rng.choice(b)]
            edges.extend((z, w, c) for w in joins)
        return order

    vs = list(range(n))
    rng.shuffle(vs)
    order = build(vs)
    return EdgeColoredGraph(n, edges), order


def construction1() -> EdgeColoredGraph:
    """Two disjoint PC triangles on K6 with no PC cycle through all six vertices.

    Vertices ``0, 1, 2`` are ``x1, x2, x3`` and ``3, 4, 5`` are ``y1, y2, y3``.
    """
    x, y = (0, 1, 2), (3, 4, 5)
    colors: dict[tuple[int, int], int] = {}
    for i in range(3):
        for tri in (x, y):
            a, b = tri[i], tri[(i + 1) % 3]
            colors[(min(a, b), max(a, b))] = i + 1
        for j in range(3):
            colors[(x[i], y[j])] = i + 1
    colors[(x[1], y[2])] = 1
    return complete_graph(6, lambda u, v: colors[(u, v)])
