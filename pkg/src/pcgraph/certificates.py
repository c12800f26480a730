"""Portable certificates and their independent verifier.

The verifier re-derives everything from the graph: it never calls the
search or elimination code that produced a certificate.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .errors import ParseError
from .formats import structural_text
from .graph import EdgeColoredGraph
from .walks import PCCycle, PCPath, verify_pc_cycle, verify_pc_path

KINDS = ("hamilton_path", "pc_cycle", "elimination", "separator")


def graph_hash(G: EdgeColoredGraph) -> str:
    return hashlib.sha256(structural_text(G).encode()).hexdigest()


@dataclass(frozen=True)
class Certificate:
    kind: str
    payload: dict
    graph_hash: str

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "graph_hash": self.graph_hash, "payload": self.payload}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        try:
            data = json.loads(text)
            kind, payload, digest = data["kind"], data["payload"], data["graph_hash"]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None
        if kind not in KINDS:
            raise ParseError(f"unknown certificate kind {kind!r}")
        if not isinstance(payload, dict):
            raise ParseError("certificate payload must be an object")
        return cls(kind, payload, str(digest))


@dataclass
class VerdictReport:
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, detail: str) -> None:
        self.failures.append((check, detail))


def path_certificate(G: EdgeColoredGraph, P: PCPath) -> Certificate:
    return Certificate("hamilton_path", {"vertices": list(P.vertices), "colors": list(P.colors)}, graph_hash(G))


def cycle_certificate(G: EdgeColoredGraph, C: PCCycle) -> Certificate:
    return Certificate("pc_cycle", {"vertices": list(C.vertices), "colors": list(C.colors)}, graph_hash(G))


def elimination_certificate(G: EdgeColoredGraph, cert) -> Certificate:
    steps = [
        {"z": s.z, "components": [list(K) for K in s.components], "attach_colors": list(s.attach_colors)}
        for s in cert.steps
    ]
    return Certificate("elimination", {"steps": steps}, graph_hash(G))


def separator_certificate(G: EdgeColoredGraph, sep) -> Certificate:
    payload = {
        "z": sep.z,
        "components": [list(K) for K in sep.components],
        "component_colors": list(sep.component_colors),
    }
    return Certificate("separator", payload, graph_hash(G))


# -- verification ---------------------------------------------------------------


def _components(G: EdgeColoredGraph, S: set[int]) -> list[tuple[int, ...]]:
    left, out = set(S), []
    while left:
        root = min(left)
        comp, todo = {root}, [root]
        while todo:
            a = todo.pop()
            for b in G.neighbors(a):
                if b in left and b not in comp:
                    comp.add(b)
                    todo.append(b)
        left -= comp
        out.append(tuple(sorted(comp)))
    return sorted(out)


def _check_split(G: EdgeColoredGraph, S: set[int], z, comps, colors, where: str, report: VerdictReport) -> None:
    if not isinstance(z, int) or z not in S:
        report.fail(where, f"vertex {z!r} is not in the current graph")
        return
    try:
        claimed = sorted(tuple(sorted(K)) for K in comps)
    except TypeError:
        report.fail(where, "components are not vertex lists")
        return
    actual = _components(G, S - {z})
    if claimed != actual:
        report.fail(where, f"components {claimed} differ from the actual {actual}")
        return
    if len(colors) != len(comps):
        report.fail(where, "one attach color is needed per component")
        return
    for K, c in zip(comps, colors):
        seen = set()
        for w in K:
            seen.update(G.colors_between(z, w))
        if len(seen) > 1:
            report.fail(where, f"component {sorted(K)} meets {z} in colors {sorted(seen)}")
        elif seen != ({c} if c is not None else set()):
            report.fail(where, f"component {sorted(K)} meets {z} in {sorted(seen)}, not {c!r}")


def _seq(report: VerdictReport, payload: dict) -> tuple[list[int], list[int]] | None:
    vs, cs = payload.get("vertices"), payload.get("colors")
    if not isinstance(vs, list) or not isinstance(cs, list):
        report.fail("payload", "vertices and colors must be lists")
        return None
    if not all(isinstance(x, int) for x in vs + cs):
        report.fail("payload", "vertices and colors must be integers")
        return None
    return vs, cs


def verify_certificate(G: EdgeColoredGraph, cert: Certificate) -> VerdictReport:
    report = VerdictReport()
    if cert.graph_hash != graph_hash(G):
        report.fail("graph_hash", "certificate was issued for a different graph")
    p = cert.payload
    if cert.kind in ("hamilton_path", "pc_cycle"):
        got = _seq(report, p)
        if got is None:
            return report
        vs, cs = got
        if any(not 0 <= v < G.n for v in vs):
            report.fail("range", "vertex out of range")
            return report
        if cert.kind == "hamilton_path":
            if len(cs) != max(len(vs) - 1, 0) or not verify_pc_path(G, vs, cs):
                report.fail("pc_path", "sequence is not a PC path of the graph")
            if sorted(vs) != list(G.vertices):
                report.fail("spanning", "path does not visit every vertex exactly once")
        else:
            if len(vs) < 2 or len(cs) != len(vs) or not verify_pc_cycle(G, vs, cs):
                report.fail("pc_cycle", "sequence is not a PC cycle of the graph")
    elif cert.kind == "elimination":
        steps = p.get("steps")
        if not isinstance(steps, list):
            report.fail("payload", "steps must be a list")
            return report
        S = set(G.vertices)
        for i, st in enumerate(steps):
            try:
                z, comps, colors = st["z"], st["components"], st["attach_colors"]
            except (KeyError, TypeError):
                report.fail(f"step {i + 1}", "malformed step")
                return report
            before = len(report.failures)
            _check_split(G, S, z, comps, colors, f"step {i + 1}", report)
            if len(report.failures) > before:
                return report
            S.discard(z)
        if S:
            report.fail("exhausted", f"vertices {sorted(S)} were never eliminated")
    elif cert.kind == "separator":
        try:
            z, comps, colors = p["z"], p["components"], p["component_colors"]
        except KeyError:
            report.fail("payload", "separator needs z, components and component_colors")
            return report
        _check_split(G, set(G.vertices), z, comps, colors, "separator", report)
    else:
        report.fail("kind", f"unknown certificate kind {cert.kind!r}")
    return report
