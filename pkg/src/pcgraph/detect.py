"""PC-cycle detection with certificates on both sides.

Negative answers come with a vertex elimination order (each removed vertex
sees every component of the rest in at most one color) or with a single
separator vertex. Positive answers are PC cycles, either from exhaustive
search or extracted from pairs of internally disjoint PC paths.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError, TheoremViolation
from .graph import EdgeColoredGraph, components
from .oracle import PATH_LIMIT, constrained_pc_path, guard
from .walks import PCCycle, PCPath, verify_pc_cycle, verify_pc_path


@dataclass(frozen=True)
class EliminationStep:
    z: int
    components: tuple[tuple[int, ...], ...]
    attach_colors: tuple[int | None, ...]  # None when z has no edge into the component


@dataclass(frozen=True)
class EliminationCertificate:
    steps: tuple[EliminationStep, ...]

    @property
    def order(self) -> list[int]:
        return [s.z for s in self.steps]


@dataclass(frozen=True)
class Stuck:
    """An induced subgraph in which no vertex can be eliminated; it holds a PC cycle."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class SeparatorCertificate:
    z: int
    components: tuple[tuple[int, ...], ...]
    component_colors: tuple[int | None, ...]


@dataclass(frozen=True)
class PathPair:
    source: int
    target: int
    path_p: PCPath
    path_q: PCPath

    def problems(self, G: EdgeColoredGraph) -> list[str]:
        out = []
        for name, R in (("P", self.path_p), ("Q", self.path_q)):
            if not verify_pc_path(G, R):
                out.append(f"{name} is not a PC path")
            if len(R) < 2 or R.first != self.source or R.last != self.target:
                out.append(f"{name} does not run from {self.source} to {self.target}")
        if set(self.path_p.vertices[1:-1]) & set(self.path_q.vertices):
            out.append("paths share an internal vertex")
        if set(self.path_q.vertices[1:-1]) & set(self.path_p.vertices):
            out.append("paths share an internal vertex")
        if self.path_p.colors and self.path_q.colors and self.path_p.colors[0] == self.path_q.colors[0]:
            out.append("first colors coincide")
        return out


@dataclass
class AuxiliaryDigraph:
    n: int
    witness: dict[int, PathPair] = field(default_factory=dict)  # one out-arc per vertex

    @property
    def arcs(self) -> set[tuple[int, int]]:
        return {(u, pp.target) for u, pp in self.witness.items()}


# -- exhaustive detector -------------------------------------------------------


def _parallel_two_cycle(G: EdgeColoredGraph) -> PCCycle | None:
    if not G.multi:
        return None
    for u, v, _ in G.edges:
        cs = sorted(set(G.colors_between(u, v)))
        if len(cs) >= 2:
            return PCCycle((u, v), (cs[0], cs[1]))
    return None


def find_pc_cycle(G: EdgeColoredGraph, max_n: int = PATH_LIMIT) -> PCCycle | None:
    """Some PC cycle of *G*, or None. Exhaustive; refuses graphs above *max_n*."""
    guard(G.n, max_n, "find_pc_cycle")
    two = _parallel_two_cycle(G)
    if two is not None:
        return two
    for s in G.vertices:
        # cycles whose least vertex is s, started along each edge at s
        for w0, c0 in G.incident(s):
            if w0 < s:
                continue
            verts, cols = [s, w0], [c0]
            dead: set[tuple[int, int, int]] = set()

            def dfs(cur: int, last: int, mask: int) -> bool:
                key = (cur, last, mask)
                if key in dead:
                    return False
                for w, c in G.incident(cur):
                    if c == last:
                        continue
                    if w == s:
                        if c != c0 and len(verts) >= 3:
                            cols.append(c)
                            return True
                        continue
                    if w < s or mask >> w & 1:
                        continue
                    verts.append(w)
                    cols.append(c)
                    if dfs(w, c, mask | 1 << w):
                        return True
                    verts.pop()
                    cols.pop()
                dead.add(key)
                return False

            if dfs(w0, c0, 1 << s | 1 << w0):
                C = PCCycle(tuple(verts), tuple(cols))
                assert verify_pc_cycle(G, C)
                return C
    return None


# -- elimination ---------------------------------------------------------------


def _split(G: EdgeColoredGraph, S: set[int], z: int) -> EliminationStep | None:
    """The elimination step for *z* inside ``G[S]``, or None when some component sees two colors."""
    comps = components(G, S - {z})
    colors: list[int | None] = []
    for K in comps:
        seen = G.color_summary(z, K)
        if len(seen) > 1:
            return None
        colors.append(next(iter(seen)) if seen else None)
    return EliminationStep(z, tuple(tuple(K) for K in comps), tuple(colors))


def yeo_eliminate(G: EdgeColoredGraph) -> EliminationCertificate | Stuck:
    """Greedy elimination; a full certificate proves *G* has no PC cycle."""
    S = set(G.vertices)
    steps = []
    while S:
        for z in sorted(S):
            step = _split(G, S, z)
            if step is not None:
                steps.append(step)
                S.discard(z)
                break
        else:
            return Stuck(tuple(sorted(S)))
    return EliminationCertificate(tuple(steps))


# -- closure -------------------------------------------------------------------


def creates_pc_cycle(H: EdgeColoredGraph, u: int, v: int, c: int, max_n: int = PATH_LIMIT) -> bool:
    """Whether adding edge ``uv`` of color *c* to a PC-cycle-free *H* creates a PC cycle."""
    return constrained_pc_path(H, u, v, forbid_start=c, forbid_end=c, max_n=max_n) is not None


def candidate_colors(H: EdgeColoredGraph) -> list[int]:
    """Existing colors plus one fresh color."""
    present = sorted(H.colors())
    return present + [present[-1] + 1 if present else 0]


def closure_of(G: EdgeColoredGraph, max_n: int = PATH_LIMIT) -> tuple[EdgeColoredGraph, list[tuple[int, int, int]]]:
    """A closure of the PC-cycle-free graph *G* and the edges added, in order."""
    if G.multi:
        raise PreconditionError("closure needs a simple graph")
    guard(G.n, max_n, "closure_of")
    if find_pc_cycle(G, max_n=max_n) is not None:
        raise PreconditionError("graph already contains a PC cycle")
    H = G
    added: list[tuple[int, int, int]] = []
    changed = True
    while changed:
        changed = False
        for u in H.vertices:
            for v in range(u + 1, H.n):
                if H.has_edge(u, v):
                    continue
                for c in candidate_colors(H):
                    if not creates_pc_cycle(H, u, v, c, max_n):
                        H = H.with_edge(u, v, c)
                        added.append((u, v, c))
                        changed = True
                        break
    return H, added


# -- extraction from path pairs ------------------------------------------------


def two_disjoint_pc_paths(G: EdgeColoredGraph, u: int, max_n: int = PATH_LIMIT) -> PathPair | None:
    """Two internally disjoint PC paths from *u* to a common vertex, with distinct first colors.

    Two PC paths from *u* to the same target with distinct first colors are
    enough: cutting both at the first vertex of one that lies on the other
    leaves an internally disjoint pair.
    """
    guard(G.n, max_n, "two_disjoint_pc_paths")
    for t in G.vertices:
        if t == u:
            continue
        P = constrained_pc_path(G, u, t, max_n=max_n)
        if P is None:
            continue
        Q = constrained_pc_path(G, u, t, forbid_start=P.colors[0], max_n=max_n)
        if Q is None:
            continue
        on_q = set(Q.vertices[1:])
        cut = next(i for i in range(1, len(P)) if P.vertices[i] in on_q)
        j = Q.vertices.index(P.vertices[cut])
        pair = PathPair(
            u,
            P.vertices[cut],
            PCPath(P.vertices[:cut + 1], P.colors[:cut]),
            PCPath(Q.vertices[:j + 1], Q.colors[:j]),
        )
        assert not pair.problems(G)
        return pair
    return None


def build_auxiliary_digraph(G: EdgeColoredGraph, max_n: int = PATH_LIMIT) -> AuxiliaryDigraph:
    D = AuxiliaryDigraph(G.n)
    for u in G.vertices:
        pair = two_disjoint_pc_paths(G, u, max_n)
        if pair is None:
            raise PreconditionError(f"vertex {u} has no pair of disjoint PC paths with distinct first colors")
        D.witness[u] = pair
    return D


def _directed_cycle(D: AuxiliaryDigraph) -> list[int]:
    """Follow out-arcs from vertex 0 until a vertex repeats."""
    seen: dict[int, int] = {}
    walk = []
    v = 0
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = D.witness[v].target
    return walk[seen[v]:]


def _concat(parts: list[PCPath]) -> tuple[list[int], list[int]]:
    vs: list[int] = [parts[0].first]
    cs: list[int] = []
    for R in parts:
        vs.extend(R.vertices[1:])
        cs.extend(R.colors)
    return vs, cs


def extract_cycle_thm14(G: EdgeColoredGraph, max_n: int = PATH_LIMIT) -> PCCycle:
    """A PC cycle of *G*, built from one disjoint path pair at every vertex."""
    two = _parallel_two_cycle(G)
    if two is not None:
        return two
    D = build_auxiliary_digraph(G, max_n)
    cyc = _directed_cycle(D)
    k = len(cyc)
    pairs = [D.witness[v] for v in cyc]

    # a pair whose two end colors differ closes a PC cycle by itself
    for pp in pairs:
        if pp.path_p.colors[-1] != pp.path_q.colors[-1]:
            ring = PCCycle(pp.path_p.vertices + pp.path_q.vertices[-2:0:-1], pp.path_p.colors + pp.path_q.colors[::-1])
            if verify_pc_cycle(G, ring):
                return ring
            raise TheoremViolation("a path pair with distinct end colors failed to close a PC cycle")

    end = [pp.path_p.colors[-1] for pp in pairs]
    P: list[PCPath] = []
    Cyc: list[tuple[list[int], list[int]]] = []  # C_i traversed v_i P_i v_{i+1} Q_i^{-1}
    for i, pp in enumerate(pairs):
        a, b = pp.path_p, pp.path_q
        if a.colors[0] == end[i - 1]:
            a, b = b, a
        if a.colors[0] == end[i - 1]:
            raise TheoremViolation("both start colors equal the previous end color")
        P.append(a)
        Cyc.append((list(a.vertices + b.vertices[-2:0:-1]), list(a.colors + b.colors[::-1])))

    vs, cs = _concat(P)
    if len(set(vs[:-1])) == len(vs) - 1:
        ring = PCCycle(tuple(vs[:-1]), tuple(cs))
        if verify_pc_cycle(G, ring):
            return ring
        raise TheoremViolation("the simple closed walk of path pairs is not a PC cycle")

    best = None
    for i in range(k):
        nxt = cyc[(i + 1) % k]
        ring_i = set(Cyc[i][0]) - {nxt}
        for d in range(1, k):
            j = (i + d) % k
            if ring_i & set(P[j].vertices):
                size = len(set().union(*(P[(i + t) % k].vertex_set for t in range(d + 1))))
                key = (size, i, j)
                if best is None or key < best:
                    best = key
    if best is None:
        raise TheoremViolation("closed walk repeats a vertex but no overlapping pair exists")
    _, i, j = best
    nxt = cyc[(i + 1) % k]
    ring_v, ring_c = Cyc[i]
    ring_i = set(ring_v) - {nxt}
    Pj = P[j]
    cut = next(r for r in range(len(Pj)) if Pj.vertices[r] in ring_i)
    w = Pj.vertices[cut]
    middle = [P[(i + t) % k] for t in range(1, (j - i) % k)]
    head_v, head_c = _concat(middle + [PCPath(Pj.vertices[:cut + 1], Pj.colors[:cut])])
    L = len(ring_v)
    wi, ni = ring_v.index(w), ring_v.index(nxt)
    forward_v = [ring_v[(wi + t) % L] for t in range((ni - wi) % L + 1)]
    forward_c = [ring_c[(wi + t) % L] for t in range((ni - wi) % L)]
    backward_v = [ring_v[(wi - t) % L] for t in range((wi - ni) % L + 1)]
    backward_c = [ring_c[(wi - t - 1) % L] for t in range((wi - ni) % L)]
    for arc_v, arc_c in ((forward_v, forward_c), (backward_v, backward_c)):
        seq_v = head_v + arc_v[1:-1]
        seq_c = head_c + arc_c
        if len(seq_v) < 2 or len(set(seq_v)) != len(seq_v):
            continue
        ring = PCCycle(tuple(seq_v), tuple(seq_c))
        if verify_pc_cycle(G, ring):
            return ring
    raise TheoremViolation(f"neither splice at the minimal pair (i, j) = ({i}, {j}) is a PC cycle")


# -- separator -----------------------------------------------------------------


def separator_problems(G: EdgeColoredGraph, z: int) -> list[str]:
    out = []
    for K in components(G, set(G.vertices) - {z}):
        seen = G.color_summary(z, K)
        if len(seen) > 1:
            out.append(f"component {K} meets {z} in colors {sorted(seen)}")
    return out


def yeo_separator(G: EdgeColoredGraph, max_n: int = PATH_LIMIT) -> SeparatorCertificate:
    """A vertex whose removal leaves components each joined to it in at most one color."""
    H, _ = closure_of(G, max_n)
    for z in H.vertices:
        if _split(H, set(H.vertices), z) is None:
            continue
        step = _split(G, set(G.vertices), z)
        if step is None:
            raise TheoremViolation(f"{z} separates the closure but not the graph")
        return SeparatorCertificate(z, step.components, step.attach_colors)
    raise TheoremViolation("closure of a PC-cycle-free graph has no separator vertex")
