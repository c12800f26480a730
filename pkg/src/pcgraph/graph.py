"""Edge-colored graph model.

Vertices are the dense integers ``0 .. n-1``; colors are non-negative
integers. Graphs are immutable once built. Parallel edges are allowed only
when the graph is built with ``allow_parallel=True``.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping

from .errors import GraphError

Edge = tuple[int, int, int]


def _norm(u: int, v: int, c: int) -> Edge:
    return (u, v, c) if u < v else (v, u, c)


class EdgeColoredGraph:
    __slots__ = ("n", "edges", "multi", "color_names", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge],
        multi: bool = False,
        color_names: Mapping[int, str] | None = None,
    ):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[dict[int, list[int]]] = [{} for _ in range(n)]
        normed = []
        for u, v, c in edges:
            for x in (u, v):
                if not (isinstance(x, int) and 0 <= x < n):
                    raise GraphError(f"vertex {x} out of range [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not isinstance(c, int) or c < 0:
                raise GraphError(f"color must be a non-negative integer, got {c!r}")
            if not multi and v in adj[u]:
                raise GraphError(f"duplicate pair ({u}, {v}) in a simple graph")
            adj[u].setdefault(v, []).append(c)
            adj[v].setdefault(u, []).append(c)
            normed.append(_norm(u, v, c))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(normed))
        self.multi = multi
        self.color_names = dict(color_names or {})
        self._adj = [{w: tuple(sorted(cs)) for w, cs in sorted(a.items())} for a in adj]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return (self.n, self.multi, self.edges) == (other.n, other.multi, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.multi, self.edges))

    def __repr__(self) -> str:
        kind = "multigraph" if self.multi else "graph"
        return f"<EdgeColoredGraph {kind} n={self.n} m={len(self.edges)}>"

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._adj[v])

    def incident(self, v: int) -> list[tuple[int, int]]:
        """All ``(neighbor, color)`` pairs at *v*, one per edge."""
        return [(w, c) for w, cs in self._adj[v].items() for c in cs]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def colors_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._adj[u].get(v, ())

    def color(self, u: int, v: int) -> int:
        """The color of the unique edge ``uv``; KeyError when absent."""
        cs = self._adj[u][v]
        if len(cs) != 1:
            raise KeyError(f"pair ({u}, {v}) carries {len(cs)} parallel edges")
        return cs[0]

    def degree(self, v: int) -> int:
        return sum(len(cs) for cs in self._adj[v].values())

    def colors(self) -> set[int]:
        return {c for _, _, c in self.edges}

    def color_summary(self, v: int, S: Iterable[int]) -> set[int]:
        """Colors on edges joining *v* to ``S - v``."""
        out: set[int] = set()
        for w in S:
            if w != v:
                out.update(self._adj[v].get(w, ()))
        return out

    def color_degree(self, v: int) -> set[int]:
        return self.color_summary(v, self._adj[v])

    def is_complete_on(self, S: Iterable[int]) -> bool:
        S = list(S)
        return all(self.has_edge(a, b) for i, a in enumerate(S) for b in S[i + 1:])

    # -- derived graphs ----------------------------------------------------

    def _derive(self, edges: Iterable[Edge], multi: bool | None = None) -> EdgeColoredGraph:
        return EdgeColoredGraph(
            self.n, edges, self.multi if multi is None else multi, self.color_names
        )

    def with_edge(self, u: int, v: int, c: int) -> EdgeColoredGraph:
        return self._derive(self.edges + (_norm(u, v, c),))

    def recolored(self, u: int, v: int, c: int) -> EdgeColoredGraph:
        """Copy with the single edge ``uv`` given color *c*."""
        if len(self.colors_between(u, v)) != 1:
            raise GraphError(f"cannot recolor pair ({u}, {v}): not a single edge")
        a, b = min(u, v), max(u, v)
        return self._derive([(x, y, c) if (x, y) == (a, b) else (x, y, k) for x, y, k in self.edges])

    def restrict(self, S: Iterable[int]) -> EdgeColoredGraph:
        """Keep only edges inside *S*; vertex ids are unchanged."""
        keep = set(S)
        return self._derive(e for e in self.edges if e[0] in keep and e[1] in keep)

    def edge_counts(self) -> Counter[Edge]:
        return Counter(self.edges)


def build_graph(
    n: int, edge_list: Iterable[tuple[int, int, int]], allow_parallel: bool = False
) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, edge_list, multi=allow_parallel)


def complete_graph(n: int, color_of) -> EdgeColoredGraph:
    """K_n with ``col(u, v) = color_of(u, v)`` for ``u < v``."""
    return EdgeColoredGraph(n, ((u, v, color_of(u, v)) for u in range(n) for v in range(u + 1, n)))


def components(G: EdgeColoredGraph, S: Iterable[int]) -> list[list[int]]:
    """Connected components of ``G[S]``, each sorted, ordered by least vertex."""
    S = set(S)
    seen: set[int] = set()
    out = []
    for s in sorted(S):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            a = stack.pop()
            for b in G.neighbors(a):
                if b in S and b not in seen:
                    seen.add(b)
                    comp.append(b)
                    stack.append(b)
        out.append(sorted(comp))
    return out


def induced_subgraph(G: EdgeColoredGraph, S: Iterable[int]) -> tuple[EdgeColoredGraph, list[int]]:
    """``G[S]`` relabelled to ``0 .. |S|-1``; returns the graph and the old ids in order."""
    order = sorted(set(S))
    idx = {v: i for i, v in enumerate(order)}
    edges = [(idx[u], idx[v], c) for u, v, c in G.edges if u in idx and v in idx]
    return EdgeColoredGraph(len(order), edges, G.multi, G.color_names), order
