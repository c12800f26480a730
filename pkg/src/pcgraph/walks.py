"""Properly colored paths and cycles, characters, and path surgery.

Positions are 0-based throughout: a path ``P`` has vertices
``P.vertices[0 .. m-1]`` and ``P.colors[i]`` is the color of the edge
between positions ``i`` and ``i + 1``.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import PreconditionError
from .graph import EdgeColoredGraph


@dataclass(frozen=True, order=True)
class Character:
    """``[end_a, color_a, color_b, end_b]`` with ``end_a < end_b``.

    ``color_a`` is the color of the edge at ``end_a``. A path and its
    reversal have the same character.
    """

    end_a: int
    color_a: int
    color_b: int
    end_b: int

    @classmethod
    def of(cls, a: int, ca: int, cb: int, b: int) -> Character:
        return cls(a, ca, cb, b) if a <= b else cls(b, cb, ca, a)

    def as_list(self) -> list[int]:
        return [self.end_a, self.color_a, self.color_b, self.end_b]


@dataclass(frozen=True)
class PCPath:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 1 or len(self.colors) != len(self.vertices) - 1:
            raise PreconditionError("path needs >= 1 vertex and one color per edge")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> PCPath:
        return PCPath(self.vertices[::-1], self.colors[::-1])

    @property
    def character(self) -> Character:
        if len(self.vertices) < 2:
            raise PreconditionError("character is undefined for a single-vertex path")
        return Character.of(self.vertices[0], self.colors[0], self.colors[-1], self.vertices[-1])

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class PCCycle:
    """Cyclic vertex list; ``colors[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (wrapping)."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.colors) != len(self.vertices):
            raise PreconditionError("cycle needs >= 2 vertices and one color per edge")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int, int]]:
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k], self.colors[i]) for i in range(k)]

    def rotated(self, start: int) -> PCCycle:
        k = len(self.vertices)
        return PCCycle(
            tuple(self.vertices[(start + i) % k] for i in range(k)),
            tuple(self.colors[(start + i) % k] for i in range(k)),
        )

    def reversed(self) -> PCCycle:
        # v0 v_{k-1} ... v1; the edge v0-v_{k-1} is colors[k-1]
        vs = (self.vertices[0],) + self.vertices[:0:-1]
        cs = self.colors[::-1]
        return PCCycle(vs, cs)

    def open_at(self, i: int) -> PCPath:
        """The path obtained by deleting the edge ``vertices[i-1] vertices[i]``, starting at ``vertices[i]``."""
        c = self.rotated(i)
        return PCPath(c.vertices, c.colors[:-1])


# -- verification -------------------------------------------------------------


def _edge_ok(G: EdgeColoredGraph, u: int, v: int, c: int) -> bool:
    return c in G.colors_between(u, v)


def _in_range(G: EdgeColoredGraph, seq: Sequence[int]) -> bool:
    return all(isinstance(v, int) and 0 <= v < G.n for v in seq)


def verify_pc_path(G: EdgeColoredGraph, seq: Sequence[int] | PCPath, colors: Sequence[int] | None = None) -> bool:
    """True iff *seq* is a properly colored path of *G*.

    With *colors* omitted, parallel edges may be chosen freely.
    """
    if isinstance(seq, PCPath):
        seq, colors = seq.vertices, seq.colors
    seq = list(seq)
    if not seq or not _in_range(G, seq) or len(set(seq)) != len(seq):
        return False
    if colors is not None:
        colors = list(colors)
        if len(colors) != len(seq) - 1:
            return False
        if not all(_edge_ok(G, seq[i], seq[i + 1], c) for i, c in enumerate(colors)):
            return False
        return all(colors[i] != colors[i + 1] for i in range(len(colors) - 1))
    return _choose_colors(G, seq) is not None


def _choose_colors(G: EdgeColoredGraph, seq: Sequence[int]) -> list[int] | None:
    """Pick one color per consecutive pair so no two adjacent are equal."""
    if len(seq) == 1:
        return []
    options = [G.colors_between(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
    if any(not o for o in options):
        return None
    # back[i][c] = color chosen at i-1 to reach color c at i
    back: list[dict[int, int | None]] = [{c: None for c in options[0]}]
    for i in range(1, len(options)):
        layer: dict[int, int | None] = {}
        for c in options[i]:
            for p in back[-1]:
                if p != c:
                    layer[c] = p
                    break
        if not layer:
            return None
        back.append(layer)
    c = next(iter(back[-1]))
    out = [c]
    for i in range(len(back) - 1, 0, -1):
        c = back[i][c]
        out.append(c)
    return out[::-1]


def verify_pc_cycle(G: EdgeColoredGraph, seq: Sequence[int] | PCCycle, colors: Sequence[int] | None = None) -> bool:
    if isinstance(seq, PCCycle):
        seq, colors = seq.vertices, seq.colors
    seq = list(seq)
    k = len(seq)
    if k < 2 or not _in_range(G, seq) or len(set(seq)) != k:
        return False
    if colors is not None:
        colors = list(colors)
        if len(colors) != k:
            return False
        if k == 2:
            u, v = seq
            have = list(G.colors_between(u, v))
            if colors[0] == colors[1] or any(c not in have for c in colors):
                return False
            return True
        if not all(_edge_ok(G, seq[i], seq[(i + 1) % k], colors[i]) for i in range(k)):
            return False
        return all(colors[i] != colors[(i + 1) % k] for i in range(k))
    return find_cycle_colors(G, seq) is not None


def find_cycle_colors(G: EdgeColoredGraph, seq: Sequence[int]) -> list[int] | None:
    """A PC color assignment around the closed vertex sequence, if one exists."""
    k = len(seq)
    if k == 2:
        cs = sorted(set(G.colors_between(seq[0], seq[1])))
        return cs[:2] if len(cs) >= 2 else None
    closing = G.colors_between(seq[-1], seq[0])
    for c0 in G.colors_between(seq[0], seq[1]):
        # fix the first edge's color, then the path must end on a color != c0 and
        # the closing edge must differ from both its neighbours
        opts = [[c0]] + [list(G.colors_between(seq[i], seq[i + 1])) for i in range(1, k - 1)]
        layers: list[dict[int, int | None]] = [{c0: None}]
        for i in range(1, len(opts)):
            layer = {}
            for c in opts[i]:
                for p in layers[-1]:
                    if p != c:
                        layer[c] = p
                        break
            layers.append(layer)
            if not layer:
                break
        else:
            for last, _ in layers[-1].items():
                for cc in closing:
                    if cc != last and cc != c0:
                        out = [last]
                        c = last
                        for i in range(len(layers) - 1, 0, -1):
                            c = layers[i][c]
                            out.append(c)
                        return out[::-1] + [cc]
    return None


def make_path(G: EdgeColoredGraph, seq: Sequence[int]) -> PCPath | None:
    """The PC path through *seq* in *G*, or None when *seq* is not one."""
    seq = list(seq)
    if not seq or not _in_range(G, seq) or len(set(seq)) != len(seq):
        return None
    cs = _choose_colors(G, seq)
    return None if cs is None else PCPath(tuple(seq), tuple(cs))


def make_cycle(G: EdgeColoredGraph, seq: Sequence[int]) -> PCCycle | None:
    seq = list(seq)
    if len(seq) < 2 or not _in_range(G, seq) or len(set(seq)) != len(seq):
        return None
    cs = find_cycle_colors(G, seq)
    return None if cs is None else PCCycle(tuple(seq), tuple(cs))


def as_path(G: EdgeColoredGraph, seq: Sequence[int] | PCPath) -> PCPath:
    if isinstance(seq, PCPath):
        if not verify_pc_path(G, seq):
            raise PreconditionError(f"{list(seq.vertices)} is not a PC path of the graph")
        return seq
    p = make_path(G, seq)
    if p is None:
        raise PreconditionError(f"{list(seq)} is not a PC path of the graph")
    return p


def as_cycle(G: EdgeColoredGraph, seq: Sequence[int] | PCCycle) -> PCCycle:
    if isinstance(seq, PCCycle):
        if not verify_pc_cycle(G, seq):
            raise PreconditionError(f"{list(seq.vertices)} is not a PC cycle of the graph")
        return seq
    c = make_cycle(G, seq)
    if c is None:
        raise PreconditionError(f"{list(seq)} is not a PC cycle of the graph")
    return c


def character_of(G: EdgeColoredGraph, path: Sequence[int] | PCPath) -> Character:
    p = as_path(G, path)
    if len(p) < 2:
        raise PreconditionError("character is undefined for a single-vertex path")
    return p.character


# -- surgery ------------------------------------------------------------------


def scan_anchor_indices(G: EdgeColoredGraph, P: PCPath, v: int) -> tuple[int | None, int | None]:
    """Return ``(t, s)`` for outside vertex *v*.

    ``t`` is the least position ``i <= m-2`` with ``col(v, P[i]) != P.colors[i]``;
    ``s`` is the greatest position ``i >= 1`` with ``col(v, P[i]) != P.colors[i-1]``.
    Either is None when no position qualifies.
    """
    if v in P.vertices:
        raise PreconditionError(f"vertex {v} lies on the path")
    m = len(P)
    if m < 2:
        raise PreconditionError("path must have at least two vertices")
    try:
        cv = [G.color(v, u) for u in P.vertices]
    except KeyError as exc:
        raise PreconditionError(f"vertex {v} is not joined to every path vertex") from exc
    t = next((i for i in range(m - 1) if cv[i] != P.colors[i]), None)
    s = next((i for i in range(m - 1, 0, -1) if cv[i] != P.colors[i - 1]), None)
    return t, s


def replace_vertex(G: EdgeColoredGraph, P: PCPath, v: int, r: int) -> PCPath | None:
    """Substitute ``P[r]`` by *v* when *v* copies both incident path colors."""
    m = len(P)
    if not 1 <= r <= m - 2:
        raise PreconditionError(f"replacement position {r} outside [1, {m - 2}]")
    if v in P.vertices:
        raise PreconditionError(f"vertex {v} lies on the path")
    u_prev, u_next = P.vertices[r - 1], P.vertices[r + 1]
    if not (G.has_edge(v, u_prev) and G.has_edge(v, u_next)):
        raise PreconditionError(f"vertex {v} is not joined to both neighbours of position {r}")
    if G.color(v, u_prev) != P.colors[r - 1] or G.color(v, u_next) != P.colors[r]:
        return None
    vs = list(P.vertices)
    vs[r] = v
    return PCPath(tuple(vs), P.colors)


def absorb_at(G: EdgeColoredGraph, P: PCPath, W: PCPath, i: int, keep_character: bool = False) -> PCPath | None:
    """Insert *W* between ``P[i]`` and ``P[i+1]`` if the result is properly colored.

    Interior slots never change the character; an end slot can, and with
    *keep_character* such an insertion is rejected.
    """
    m = len(P)
    if not 0 <= i <= m - 2:
        raise PreconditionError(f"slot {i} outside [0, {m - 2}]")
    if P.vertex_set & W.vertex_set:
        raise PreconditionError("W shares a vertex with P")
    a, b = P.vertices[i], P.vertices[i + 1]
    if not (G.has_edge(a, W.first) and G.has_edge(W.last, b)):
        raise PreconditionError("missing bridging edge")
    vs = P.vertices[: i + 1] + W.vertices + P.vertices[i + 1:]
    cs = P.colors[:i] + (G.color(a, W.first),) + W.colors + (G.color(W.last, b),) + P.colors[i + 1:]
    if not verify_pc_path(G, vs, cs):
        return None
    Q = PCPath(vs, cs)
    if keep_character and len(P) >= 2 and Q.character != P.character:
        return None
    return Q



def cycle_edge_color(C: PCCycle, v: int, vp: int) -> int:
    k = len(C)
    i = C.vertices.index(v)
    if C.vertices[(i + 1) % k] == vp:
        return C.colors[i]
    if C.vertices[(i - 1) % k] == vp:
        return C.colors[(i - 1) % k]
    raise PreconditionError(f"({v}, {vp}) is not an edge of the cycle")


def cycle_arc(C: PCCycle, v: int, vp: int) -> PCPath:
    """The path from *v* to *vp* around *C* that avoids the edge ``v vp``."""
    k = len(C)
    if k < 3:
        raise PreconditionError("cycle arcs need a cycle of length >= 3")
    i = C.vertices.index(v)
    if C.vertices[(i - 1) % k] == vp:
        return C.open_at(i)
    if C.vertices[(i + 1) % k] == vp:
        r = C.reversed()
        return r.open_at(r.vertices.index(v))
    raise PreconditionError(f"({v}, {vp}) is not an edge of the cycle")
