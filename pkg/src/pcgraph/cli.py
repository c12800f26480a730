"""Command-line interface.

Exit codes: 0 success or valid certificate, 1 negative answer, 2 input
error, 3 internal theorem-contract violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import certificates as certs
from .detect import (
    EliminationCertificate,
    closure_of,
    find_pc_cycle,
    yeo_eliminate,
    yeo_separator,
)
from .errors import PCGraphError, TheoremViolation
from .formats import parse_document, parse_tournament, serialize_graph, serialize_tournament
from .generators import (
    construction1,
    encode_tournament,
    gen_planted_factor,
    gen_thm12_instance,
    gen_yeo_free,
    random_tournament,
)
from .graph import induced_subgraph
from .merge import OnePathCycleFactor, hamilton_from_factor, merge_path_cycle
from .oracle import PATH_LIMIT
from .walks import PCCycle, as_cycle, as_path

OK, NEGATIVE, INPUT_ERROR, VIOLATION = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(args, text: str, data: dict) -> None:
    print(json.dumps(data, indent=2) if args.json else text)


def cmd_detect(args) -> int:
    G = parse_document(_read(args.graph)).graph
    res = yeo_eliminate(G)
    if isinstance(res, EliminationCertificate):
        cert = certs.elimination_certificate(G, res)
        _emit(args, f"no PC cycle; elimination order {res.order}", {"pc_cycle": None, "certificate": json.loads(cert.to_json())})
        return NEGATIVE
    H, order = induced_subgraph(G, res.vertices)
    C = find_pc_cycle(H, max_n=args.max_n)
    if C is None:
        raise TheoremViolation(f"stuck set {list(res.vertices)} has no PC cycle")
    C = PCCycle(tuple(order[v] for v in C.vertices), C.colors)
    cert = certs.cycle_certificate(G, C)
    _emit(args, f"PC cycle {list(C.vertices)} colors {list(C.colors)}", {"pc_cycle": list(C.vertices), "certificate": json.loads(cert.to_json())})
    return OK


def cmd_yeo(args) -> int:
    G = parse_document(_read(args.graph)).graph
    if find_pc_cycle(G, max_n=args.max_n) is not None:
        _emit(args, "graph has a PC cycle; no separator is guaranteed", {"separator": None})
        return NEGATIVE
    sep = yeo_separator(G, max_n=args.max_n)
    cert = certs.separator_certificate(G, sep)
    _emit(args, f"separator {sep.z}; component colors {list(sep.component_colors)}", {"separator": sep.z, "certificate": json.loads(cert.to_json())})
    return OK


def cmd_closure(args) -> int:
    G = parse_document(_read(args.graph)).graph
    if find_pc_cycle(G, max_n=args.max_n) is not None:
        print("graph has a PC cycle; closure is undefined", file=sys.stderr)
        return NEGATIVE
    H, added = closure_of(G, max_n=args.max_n)
    _emit(args, serialize_graph(H).rstrip("\n"), {"graph": serialize_graph(H), "added": [list(e) for e in added]})
    return OK


def _trace_dump(trace) -> list[dict]:
    return [{"label": lab, "size": size, "depth": depth} for lab, size, depth in trace.records]


def cmd_merge(args) -> int:
    doc = parse_document(_read(args.graph))
    if doc.path is None or len(doc.cycles) != 1:
        raise InputError("merge needs one 'p' line and exactly one cycle line")
    G = doc.graph
    P, C = as_path(G, doc.path), as_cycle(G, doc.cycles[0])
    Q, trace = merge_path_cycle(G, P, C)
    data = {"path": list(Q.vertices), "colors": list(Q.colors), "character": Q.character.as_list(), "fallback_fired": trace.fallback_fired}
    if args.trace:
        data["trace"] = _trace_dump(trace)
    text = f"path {list(Q.vertices)} colors {list(Q.colors)}"
    if args.trace:
        text += "\n" + "\n".join(f"{'  ' * d}{lab} size={s}" for lab, s, d in trace.records)
    _emit(args, text, data)
    return OK


def cmd_hamilton(args) -> int:
    doc = parse_document(_read(args.graph))
    if doc.path is None:
        raise InputError("hamilton needs a factor: one 'p' line plus cycle lines")
    G = doc.graph
    factor = OnePathCycleFactor(as_path(G, doc.path), tuple(as_cycle(G, c) for c in doc.cycles))
    traces: list = []
    Q = hamilton_from_factor(G, factor, traces)
    cert = certs.path_certificate(G, Q)
    data = {"path": list(Q.vertices), "certificate": json.loads(cert.to_json())}
    if args.trace:
        data["traces"] = [_trace_dump(t) for t in traces]
    _emit(args, f"PC Hamilton path {list(Q.vertices)} colors {list(Q.colors)}", data)
    return OK


def cmd_encode(args) -> int:
    G = encode_tournament(parse_tournament(_read(args.tournament)))
    text = serialize_graph(G)
    _emit(args, text.rstrip("\n"), {"graph": text})
    return OK


def cmd_gen(args) -> int:
    kind, seed = args.kind, args.seed
    if kind == "planted-factor":
        G, f = gen_planted_factor(args.n, args.k, args.colors, seed)
        text = serialize_graph(G, f.path, f.cycles)
    elif kind == "thm12":
        G, P, C = gen_thm12_instance(args.m, args.nc, args.colors, seed)
        text = serialize_graph(G, P, [C])
    elif kind == "yeo-free":
        G, _ = gen_yeo_free(args.n, seed)
        text = serialize_graph(G)
    elif kind == "tournament":
        sizes = [int(s) for s in args.parts.split(",")]
        text = serialize_tournament(random_tournament(sizes, seed))
    else:
        text = serialize_graph(construction1())
    _emit(args, text.rstrip("\n"), {"kind": kind, "seed": seed, "text": text})
    return OK


def cmd_verify(args) -> int:
    G = parse_document(_read(args.graph)).graph
    cert = certs.Certificate.from_json(_read(args.certificate))
    report = certs.verify_certificate(G, cert)
    lines = ["ok" if report.ok else "INVALID"] + [f"  {c}: {d}" for c, d in report.failures]
    _emit(args, "\n".join(lines), {"ok": report.ok, "failures": [list(f) for f in report.failures]})
    return OK if report.ok else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pcgraph", description="Properly colored paths and cycles in edge-colored graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=PATH_LIMIT, help="size guard for exhaustive searches")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, *files: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        for f in files:
            p.add_argument(f, help="input file, '-' for stdin")
        p.set_defaults(func=func)
        return p

    add("detect", cmd_detect, "find a PC cycle or certify there is none", "graph")
    add("yeo", cmd_yeo, "separator vertex of a PC-cycle-free graph", "graph")
    add("closure", cmd_closure, "closure of a PC-cycle-free graph", "graph")
    add("merge", cmd_merge, "merge the file's path and cycle keeping the path's ends", "graph").add_argument(
        "--trace", action="store_true", help="dump the recursion trace"
    )
    add("hamilton", cmd_hamilton, "PC Hamilton path from a PC 1-path-cycle factor", "graph").add_argument(
        "--trace", action="store_true", help="dump merge traces"
    )
    add("encode", cmd_encode, "encode a multipartite tournament as a colored complete graph", "tournament")
    g = add("gen", cmd_gen, "generate an instance")
    g.add_argument("kind", choices=["planted-factor", "thm12", "yeo-free", "tournament", "construction1"])
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--m", type=int, default=4)
    g.add_argument("--nc", type=int, default=4)
    g.add_argument("--colors", type=int, default=3)
    g.add_argument("--parts", default="2,2,2")
    add("verify", cmd_verify, "check a certificate against a graph", "graph", "certificate")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"internal error (theorem contract violated): {exc}", file=sys.stderr)
        return VIOLATION
    except (PCGraphError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
