"""Induced P5/C5 detection, perfect connected-dominant graphs and the (P5,C5)-free pipeline."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .domination import (DominationCertificate, augment_to_2dominating, connected_dominating,
                         min_k_dominating_exact, to_mask)
from .graph import Graph, LimitError
from .rainbow import EdgeColoring, extend_via_2dominating, spanning_tree_coloring

PCD_LIMIT = 10


class StructureError(ValueError):
    pass


def _walk(g: Graph, vs: tuple[int, ...], start: int) -> tuple[int, ...]:
    inside = set(vs)
    order = [start]
    while len(order) < len(vs):
        nxt = [w for w in g.adj[order[-1]] if w in inside and w not in order]
        order.append(min(nxt))
    return tuple(order)


def find_induced(g: Graph, pattern: str) -> tuple[int, ...] | None:
    """First 5-vertex set (lexicographic) inducing ``"P5"`` or ``"C5"``.

    The witness is listed in path / cycle order.
    """
    if pattern not in ("P5", "C5"):
        raise StructureError(f"unknown pattern {pattern!r}")
    want_edges = 4 if pattern == "P5" else 5
    min_deg = 1 if pattern == "P5" else 2
    cand = [v for v in range(g.n) if g.degree(v) >= min_deg]
    for vs in itertools.combinations(cand, 5):
        mask = to_mask(vs)
        degs = [(g.adjmask[v] & mask).bit_count() for v in vs]
        if sum(degs) != 2 * want_edges or max(degs) > 2 or min(degs) < min_deg:
            continue
        if not g.is_connected_set(mask):
            continue
        # connected, max degree 2: 4 edges is a path, 5 edges a cycle
        start = vs[degs.index(1)] if pattern == "P5" else vs[0]
        return _walk(g, vs, start)
    return None


def is_p5c5_free(g: Graph) -> bool:
    return find_induced(g, "P5") is None and find_induced(g, "C5") is None


def is_perfect_connected_dominant(g: Graph, limit: int = PCD_LIMIT) -> bool:
    """Whether domination and connected domination numbers agree on every
    connected induced subgraph."""
    if g.n > limit:
        raise LimitError(f"n={g.n} exceeds limit {limit}")
    for size in range(1, g.n + 1):
        for vs in itertools.combinations(range(g.n), size):
            if not g.is_connected_set(to_mask(vs)):
                continue
            sub, _ = g.induced_subgraph(vs)
            if (min_k_dominating_exact(sub, 1).size
                    != min_k_dominating_exact(sub, 1, require_connected=True).size):
                return False
    return True


@dataclass(frozen=True)
class StructureReport:
    p5_witness: tuple[int, ...] | None
    c5_witness: tuple[int, ...] | None
    perfect_connected_dominant: bool | None

    @property
    def has_induced_p5(self) -> bool:
        return self.p5_witness is not None

    @property
    def has_induced_c5(self) -> bool:
        return self.c5_witness is not None

    @property
    def p5c5_free(self) -> bool:
        return not (self.has_induced_p5 or self.has_induced_c5)

    def to_json(self) -> dict:
        return {
            "has_induced_p5": self.has_induced_p5,
            "p5_witness": list(self.p5_witness) if self.p5_witness else None,
            "has_induced_c5": self.has_induced_c5,
            "c5_witness": list(self.c5_witness) if self.c5_witness else None,
            "p5c5_free": self.p5c5_free,
            "perfect_connected_dominant": self.perfect_connected_dominant,
        }


def structure_report(g: Graph, limit: int = PCD_LIMIT) -> StructureReport:
    pcd = is_perfect_connected_dominant(g, limit) if g.n <= limit else None
    return StructureReport(find_induced(g, "P5"), find_induced(g, "C5"), pcd)


@dataclass(frozen=True)
class PipelineResult:
    applicable: bool
    reason: str
    bound: Fraction | None = None
    dominating: DominationCertificate | None = None
    two_dominating: DominationCertificate | None = None
    coloring: EdgeColoring | None = None

    @property
    def bound_floor(self) -> int | None:
        return None if self.bound is None else int(self.bound // 1)

    @property
    def colors_used(self) -> int | None:
        return None if self.coloring is None else self.coloring.num_colors


def p5c5_pipeline_bound(g: Graph, exact_limit: int = 14) -> PipelineResult:
    """``11n/16 + 3`` bound plus the coloring built along the way:
    connected dominating set, 2-domination augmentation, extension coloring."""
    if not g.is_connected():
        return PipelineResult(False, "graph is disconnected")
    if g.min_degree() < 3:
        return PipelineResult(False, f"minimum degree {g.min_degree()} < 3")
    for pat in ("P5", "C5"):
        wit = find_induced(g, pat)
        if wit is not None:
            return PipelineResult(False, f"induced {pat} on {list(wit)}")
    bound = Fraction(11 * g.n, 16) + 3
    cds = connected_dominating(g, exact_limit)
    d2 = augment_to_2dominating(g, cds.vertices)
    sub, _ = g.induced_subgraph(d2.vertices)
    coloring = extend_via_2dominating(g, d2, base=spanning_tree_coloring(sub))
    return PipelineResult(True, f"{cds.method} connected dominating set", bound, cds, d2, coloring)
