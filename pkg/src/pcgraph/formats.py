"""Line-based text formats.

ECG (edge-colored graph)::

    # comment
    n 4
    multi              (optional; allows parallel edges)
    e 0 1 2            (edge 0-1 with color 2)
    e 1 2 red          (word colors get dense ids after the numeric ones)
    c red 3            (legend: color id 3 is called "red")
    p 0 1              (optional factor path)
    c 2 3 ...          (optional factor cycle: all fields are integers)

Tournament::

    n 4
    part 0 2
    part 1 3
    a 0 1              (arc 0 -> 1)
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError, ParseError
from .generators import MultipartiteTournament
from .graph import EdgeColoredGraph


@dataclass
class EcgDocument:
    graph: EdgeColoredGraph
    path: list[int] | None = None
    cycles: list[list[int]] = field(default_factory=list)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no) from None
    if val < 0:
        raise ParseError(f"{what} must be non-negative, got {val}", no)
    return val


def _is_int(tok: str) -> bool:
    return tok.isdigit()


def parse_document(text: str) -> EcgDocument:
    n: int | None = None
    multi = False
    raw_edges: list[tuple[int, int, int, str]] = []
    legend: dict[int, str] = {}
    path: list[int] | None = None
    cycles: list[list[int]] = []
    for no, f in _lines(text):
        tag, args = f[0], f[1:]
        if tag == "n":
            if n is not None:
                raise ParseError("duplicate 'n' header", no)
            if len(args) != 1:
                raise ParseError("expected 'n <count>'", no)
            n = _int(args[0], no, "vertex count")
        elif tag == "multi":
            if args:
                raise ParseError("'multi' takes no arguments", no)
            multi = True
        elif tag == "e":
            if len(args) != 3:
                raise ParseError("expected 'e <u> <v> <color>'", no)
            raw_edges.append((no, _int(args[0], no, "vertex"), _int(args[1], no, "vertex"), args[2]))
        elif tag == "c" and args and not _is_int(args[0]):
            if len(args) != 2:
                raise ParseError("expected legend 'c <token> <id>'", no)
            cid = _int(args[1], no, "color id")
            if cid in legend:
                raise ParseError(f"color id {cid} named twice", no)
            legend[cid] = args[0]
        elif tag == "c":
            if not args:
                raise ParseError("empty cycle line", no)
            cycles.append([_int(a, no, "vertex") for a in args])
        elif tag == "p":
            if path is not None:
                raise ParseError("more than one 'p' line", no)
            if not args:
                raise ParseError("empty path line", no)
            path = [_int(a, no, "vertex") for a in args]
        else:
            raise ParseError(f"unknown line tag {tag!r}", no)
    if n is None:
        raise ParseError("missing 'n <count>' header")

    names = dict(legend)
    by_name = {v: k for k, v in legend.items()}
    numeric = [int(c) for *_, c in raw_edges if _is_int(c)]
    nxt = max(numeric + list(legend) + [-1]) + 1
    edges = []
    for no, u, v, tok in raw_edges:
        if _is_int(tok):
            c = int(tok)
        elif tok.lstrip("-").isdigit():
            raise ParseError(f"color must be non-negative, got {tok}", no)
        else:
            if tok not in by_name:
                by_name[tok] = nxt
                names[nxt] = tok
                nxt += 1
            c = by_name[tok]
        for x in (u, v):
            if x >= n:
                raise ParseError(f"vertex {x} out of range [0, {n})", no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        edges.append((u, v, c))
    for vs in cycles + ([path] if path else []):
        for x in vs:
            if x >= n:
                raise ParseError(f"factor vertex {x} out of range [0, {n})")
    try:
        G = EdgeColoredGraph(n, edges, multi=multi, color_names=names)
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    return EcgDocument(G, path, cycles)


def parse_graph(text: str) -> EdgeColoredGraph:
    return parse_document(text).graph


def serialize_graph(G: EdgeColoredGraph, path=None, cycles=()) -> str:
    """Canonical ECG text: header, sorted edges, legend sorted by id, then factor lines."""
    out = [f"n {G.n}"]
    if G.multi:
        out.append("multi")
    out += [f"e {u} {v} {c}" for u, v, c in G.edges]
    out += [f"c {G.color_names[c]} {c}" for c in sorted(G.color_names)]
    if path is not None:
        out.append("p " + " ".join(map(str, getattr(path, "vertices", path))))
    for C in cycles:
        out.append("c " + " ".join(map(str, getattr(C, "vertices", C))))
    return "\n".join(out) + "\n"


def structural_text(G: EdgeColoredGraph) -> str:
    """Canonical ECG without the legend; what certificate hashes bind to."""
    return serialize_graph(EdgeColoredGraph(G.n, G.edges, G.multi))


def parse_tournament(text: str) -> MultipartiteTournament:
    n: int | None = None
    parts: list[tuple[int, ...]] = []
    arcs: set[tuple[int, int]] = set()
    for no, f in _lines(text):
        tag, args = f[0], f[1:]
        if tag == "n" and len(args) == 1:
            n = _int(args[0], no, "vertex count")
        elif tag == "part":
            if not args:
                raise ParseError("empty part", no)
            parts.append(tuple(_int(a, no, "vertex") for a in args))
        elif tag == "a":
            if len(args) != 2:
                raise ParseError("expected 'a <u> <v>'", no)
            arcs.add((_int(args[0], no, "vertex"), _int(args[1], no, "vertex")))
        else:
            raise ParseError(f"unknown tournament line {' '.join(f)!r}", no)
    T = MultipartiteTournament(tuple(parts), frozenset(arcs))
    if n is not None and n != T.n:
        raise ParseError(f"header says n = {n} but parts hold {T.n} vertices")
    try:
        T.validate()
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    return T


def serialize_tournament(T: MultipartiteTournament) -> str:
    out = [f"n {T.n}"]
    out += ["part " + " ".join(map(str, p)) for p in T.parts]
    out += [f"a {u} {v}" for u, v in sorted(T.arcs)]
    return "\n".join(out) + "\n"
