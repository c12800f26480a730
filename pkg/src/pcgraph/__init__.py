"""Properly colored paths and cycles in edge-colored graphs."""
from __future__ import annotations

from .absorb import Lemma1Result, lemma1_absorb, lemma2_absorb
from .certificates import Certificate, VerdictReport, graph_hash, verify_certificate
from .detect import (
    AuxiliaryDigraph,
    EliminationCertificate,
    EliminationStep,
    PathPair,
    SeparatorCertificate,
    Stuck,
    closure_of,
    extract_cycle_thm14,
    find_pc_cycle,
    two_disjoint_pc_paths,
    yeo_eliminate,
    yeo_separator,
)
from .errors import GraphError, ParseError, PCGraphError, PreconditionError, SizeGuardError, TheoremViolation
from .formats import parse_graph, parse_tournament, serialize_graph, serialize_tournament
from .generators import (
    MultipartiteTournament,
    construction1,
    encode_tournament,
    gen_planted_factor,
    gen_thm12_instance,
    gen_yeo_free,
    random_tournament,
)
from .graph import EdgeColoredGraph, build_graph, complete_graph
from .merge import MergeTrace, OnePathCycleFactor, hamilton_from_factor, merge_path_cycle
from .oracle import brute_pc_hamilton_path, constrained_pc_path, enumerate_pc_cycles
from .walks import (
    Character,
    PCCycle,
    PCPath,
    absorb_at,
    replace_vertex,
    scan_anchor_indices,
    verify_pc_cycle,
    verify_pc_path,
)

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
