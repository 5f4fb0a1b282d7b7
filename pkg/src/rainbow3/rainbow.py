"""Rainbow trees, 3-rainbow colorings, exact search and constructions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .decomposition import blocks
from .domination import (DominationCertificate, forest_bipartition, from_mask,
                         is_k_dominating, to_mask)
from .graph import Graph, GraphError, LimitError, complete_bipartite, cycle, steiner_triple_size
from .kernels import make_checker

DEFAULT_BUDGET = 2_000_000
EXACT_EDGE_LIMIT = 64
STEINER_EXHAUSTIVE_LIMIT = 14
STEINER_SAMPLES = 20_000


class RainbowError(ValueError):
    pass


class ConstructionError(RainbowError):
    """A construction produced a coloring that failed verification."""

    def __init__(self, msg: str, triple: tuple[int, ...] | None = None):
        super().__init__(msg)
        self.triple = triple


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in ``1..k`` indexed by edge id."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(c < 1 or c > self.k for c in self.colors):
            raise RainbowError(f"colors must lie in 1..{self.k}")

    @classmethod
    def from_list(cls, colors: Iterable[int]) -> "EdgeColoring":
        cs = tuple(colors)
        return cls(cs, max(cs, default=0))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def compact(self) -> "EdgeColoring":
        """Relabel used colors to ``1..num_colors`` in order of first appearance."""
        relabel: dict[int, int] = {}
        cs = tuple(relabel.setdefault(c, len(relabel) + 1) for c in self.colors)
        return EdgeColoring(cs, len(relabel))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failing: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def spanning_tree_coloring(g: Graph) -> EdgeColoring:
    """Distinct colors on a BFS spanning tree, color 1 on every other edge."""
    colors = [1] * g.m
    for i, e in enumerate(g.spanning_tree_edges(), 1):
        colors[e] = i
    return EdgeColoring(tuple(colors), max(g.n - 1, 0) if g.m else 0)


def _checker(g: Graph, colors: Sequence[int]):
    ck = make_checker(g.n, g.edges, len(set(colors)))
    ck.set_colors(list(colors))
    return ck


# -- rainbow trees -----------------------------------------------------------


def _grow_search(g: Graph, colors: Sequence[int], terminals: Sequence[int]):
    """Search over (reached vertices, used colors) grown edge by edge from one terminal."""
    target = to_mask(terminals)
    start = 1 << terminals[0]
    dense: dict[int, int] = {}
    bits = [1 << dense.setdefault(c, len(dense)) for c in colors]
    seen = {(start, 0)}
    stack: list[tuple[int, int, tuple[int, ...]]] = [(start, 0, ())]
    while stack:
        vmask, cmask, used = stack.pop()
        if vmask & target == target:
            return used
        for v in from_mask(vmask):
            for w in g.adj[v]:
                if vmask >> w & 1:
                    continue
                e = g.edge_id(v, w)
                if cmask & bits[e]:
                    continue
                state = (vmask | 1 << w, cmask | bits[e])
                if state not in seen:
                    seen.add(state)
                    stack.append((state[0], state[1], used + (e,)))
    return None


def exists_rainbow_tree(g: Graph, coloring: EdgeColoring | Sequence[int], s: Iterable[int],
                        witness: bool = False):
    """Whether some rainbow subtree contains every vertex of ``s``.

    With ``witness=True`` returns the tree's edge ids (or ``None``) instead of a bool.
    """
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    ts = sorted(set(s))
    if not ts:
        raise RainbowError("terminal set is empty")
    if witness or len(ts) > 3:
        found = _grow_search(g, colors, ts)
        return found if witness else found is not None
    if len(ts) == 1:
        return True
    a, b, c = (ts + ts[-1:])[:3]
    return _checker(g, colors).triple_ok(a, b, c)


def is_k_rainbow(g: Graph, coloring: EdgeColoring | Sequence[int], k: int = 3) -> Verdict:
    """Check every ``k``-subset; reports the lexicographically first failing one.

    For ``k > n`` the whole vertex set is the only subset checked.
    """
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    if len(colors) != g.m:
        raise RainbowError(f"coloring has {len(colors)} entries for {g.m} edges")
    if k < 1:
        raise RainbowError("k must be positive")
    if k == 1 or g.n <= 1:
        return Verdict(True)
    if k >= g.n:
        verts = tuple(range(g.n))
        return Verdict(True) if _grow_search(g, colors, verts) is not None else Verdict(False, verts)
    if k <= 3:
        ck = _checker(g, colors)
        if k == 3:
            bad = ck.first_failing()
            return Verdict(bad is None, bad)
        for a, b in itertools.combinations(range(g.n), 2):
            if not ck.triple_ok(a, b, b):
                return Verdict(False, (a, b))
        return Verdict(True)
    for sub in itertools.combinations(range(g.n), k):
        if _grow_search(g, colors, sub) is None:
            return Verdict(False, sub)
    return Verdict(True)


# -- lower bounds ------------------------------------------------------------


@dataclass(frozen=True)
class SteinerBound:
    value: int
    triple: tuple[int, int, int] | None
    sampled: bool


def steiner_lower_witness(g: Graph, exhaustive_limit: int = STEINER_EXHAUSTIVE_LIMIT,
                          samples: int = STEINER_SAMPLES) -> SteinerBound:
    """Largest three-terminal Steiner tree size over vertex triples.

    Above ``exhaustive_limit`` vertices a fixed-seed sample of triples is used
    (still a valid lower bound, flagged ``sampled``).
    """
    if g.n < 3:
        raise GraphError("needs n >= 3")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    dist = g.distances()
    if g.n <= exhaustive_limit:
        triples: Iterable[tuple[int, int, int]] = itertools.combinations(range(g.n), 3)
        sampled = False
    else:
        rng = random.Random(0)
        a = max(range(g.n), key=lambda v: max(dist[v]))
        b = max(range(g.n), key=lambda v: dist[a][v])
        seeds = [tuple(sorted((a, b, c))) for c in range(g.n) if c not in (a, b)]
        triples = seeds + [tuple(sorted(rng.sample(range(g.n), 3))) for _ in range(samples)]
        sampled = True
    best, arg = -1, None
    for t in triples:
        v = steiner_triple_size(dist, *t)
        if v > best:
            best, arg = v, t
    return SteinerBound(best, arg, sampled)


def lower_bound_steiner(g: Graph, exhaustive_limit: int = STEINER_EXHAUSTIVE_LIMIT) -> int:
    return steiner_lower_witness(g, exhaustive_limit).value


def k2t_lower_bound(t: int) -> int:
    """Smallest ``k`` with ``2 k**2 >= t``: at most two leaves of K_{2,t} share a color code."""
    if t < 2:
        raise RainbowError("t must be at least 2")
    k = 1
    while 2 * k * k < t:
        k += 1
    return k


# -- exact search ------------------------------------------------------------


@dataclass
class ExactResult:
    value: int | None
    coloring: EdgeColoring | None
    status: str  # "proved" or "budget"
    lower: int
    nodes: int = 0
    covered: dict[int, int] = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.status == "proved"


class _BudgetExceeded(Exception):
    pass


def _completions(m: int, k: int):
    @lru_cache(maxsize=None)
    def f(r: int, used: int) -> int:
        if r == 0:
            return 1 if used == k else 0
        total = used * f(r - 1, used)
        if used < k:
            total += f(r - 1, used + 1)
        return total
    return f


def stirling2(m: int, k: int) -> int:
    """Set partitions of ``m`` items into exactly ``k`` blocks."""
    return _completions(m, k)(m, 0)


class _ExactSearch:
    """Restricted-growth enumeration of edge colorings with exactly ``k`` classes.

    Splitting a color class never destroys a rainbow tree, so a prefix is pruned
    when giving every unassigned edge its own fresh color already leaves a
    recently failing triple uncovered.  ``covered`` counts enumerated plus
    pruned leaves and must equal the Stirling number on exhaustion.
    """

    CACHE = 24

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.m = g.m
        self.ck = make_checker(g.n, g.edges, g.m)
        self.budget = budget
        self.nodes = 0
        self.failing: list[tuple[int, int, int]] = []

    def _fails_cached(self, colors: list[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        self.ck.set_colors(colors)
        for i, t in enumerate(self.failing):
            if not self.ck.triple_ok(*t):
                if i:
                    self.failing.insert(0, self.failing.pop(i))
                return True
        return False

    def run(self, k: int) -> tuple[list[int] | None, int]:
        m = self.m
        f = _completions(m, k)
        assign = [0] * m
        covered = 0

        def rec(i: int, used: int):
            nonlocal covered
            if i == m:
                covered += 1
                if self._fails_cached(assign):
                    return None
                bad = self.ck.first_failing()
                if bad is None:
                    return list(assign)
                self.failing.insert(0, bad)
                del self.failing[self.CACHE:]
                return None
            rest = m - i - 1
            top = used + 1 if used < k else used
            for c in range(top):
                nu = max(used, c + 1)
                if nu + rest < k:
                    continue
                assign[i] = c
                if rest and self.failing:
                    trial = assign[:i + 1] + list(range(k, k + rest))
                    if self._fails_cached(trial):
                        covered += f(rest, nu)
                        continue
                found = rec(i + 1, nu)
                if found is not None:
                    return found
            return None

        found = rec(0, 0)
        return found, covered


def rx3_exact(g: Graph, budget: int = DEFAULT_BUDGET, lower: int | None = None) -> ExactResult:
    """Exact 3-rainbow index with a witness coloring.

    Values ``k`` are tried upward from the Steiner lower bound; each failed ``k``
    is certified by exhausting all partitions of the edges into ``k`` classes.
    When ``budget`` search nodes are spent the result has status ``"budget"``
    and ``lower`` is the smallest value not yet refuted.
    """
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if g.n < 3:
        col = spanning_tree_coloring(g)
        return ExactResult(col.num_colors, col, "proved", col.num_colors)
    if g.m > EXACT_EDGE_LIMIT:
        raise LimitError(f"m={g.m} exceeds exact search limit {EXACT_EDGE_LIMIT}")
    lb = lower_bound_steiner(g) if lower is None else lower
    tree = spanning_tree_coloring(g)
    search = _ExactSearch(g, budget)
    covered: dict[int, int] = {}
    for k in range(lb, g.n - 1):
        try:
            found, cov = search.run(k)
        except _BudgetExceeded:
            return ExactResult(None, None, "budget", k, search.nodes, covered)
        covered[k] = cov
        if found is not None:
            return ExactResult(k, EdgeColoring(tuple(c + 1 for c in found), k), "proved", lb,
                               search.nodes, covered)
    return ExactResult(g.n - 1, tree, "proved", lb, search.nodes, covered)


# -- constructions -----------------------------------------------------------


@dataclass(frozen=True)
class ExtensionPlan:
    d: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    legs: dict[int, tuple[int, ...]]


def extension_plan(g: Graph, d: Iterable[int]) -> ExtensionPlan:
    dmask = to_mask(d)
    rest = ((1 << g.n) - 1) & ~dmask
    z, x, y = forest_bipartition(g, rest)
    legs = {v: tuple(sorted(g.edge_id(v, w) for w in from_mask(g.adjmask[v] & dmask)))
            for v in from_mask(rest)}
    return ExtensionPlan(from_mask(dmask), from_mask(x), from_mask(y), from_mask(z), legs)


def base_coloring(g: Graph, exact_edge_limit: int = 10, budget: int = 200_000) -> EdgeColoring:
    """3-rainbow coloring of a small graph: exact when cheap, spanning tree otherwise."""
    if g.n >= 3 and g.m <= exact_edge_limit:
        res = rx3_exact(g, budget=budget)
        if res.proved and res.coloring.num_colors <= max(g.n - 1, 0):
            return res.coloring
    return spanning_tree_coloring(g)


def extend_via_2dominating(g: Graph, d: DominationCertificate | Iterable[int],
                           base: EdgeColoring | None = None, verify: bool = True) -> EdgeColoring:
    """Extend a 3-rainbow coloring of ``G[D]`` to ``G`` with four extra colors.

    ``base`` is indexed by the edge ids of ``g.induced_subgraph(D)``.  Per
    exterior vertex the lowest leg gets ``k+1``; the remaining legs get ``k+2``
    on the X side, ``k+3`` on the Y side, and ``k+3`` then ``k+4`` for vertices
    with no neighbour outside ``D``.  All edges outside ``D`` get ``k+4``.
    """
    verts = d.vertices if isinstance(d, DominationCertificate) else tuple(sorted(set(d)))
    if g.min_degree() < 3:
        raise RainbowError("minimum degree must be at least 3")
    if not is_k_dominating(g, verts, 2, require_connected=True):
        raise RainbowError("D is not a connected 2-dominating set")
    sub, back = g.induced_subgraph(verts)
    if base is None:
        base = base_coloring(sub)
    if len(base.colors) != sub.m:
        raise RainbowError("base coloring does not match G[D]")
    k = base.k
    colors = [0] * g.m
    for i, (u, v) in enumerate(sub.edges):
        colors[g.edge_id(back[u], back[v])] = base.colors[i]
    plan = extension_plan(g, verts)
    for side, rest in ((plan.x, (k + 2,)), (plan.y, (k + 3,)), (plan.z, (k + 3, k + 4))):
        for v in side:
            legs = plan.legs[v]
            colors[legs[0]] = k + 1
            for j, e in enumerate(legs[1:]):
                colors[e] = rest[min(j, len(rest) - 1)]
    for i in range(g.m):
        if colors[i] == 0:
            colors[i] = k + 4
    out = EdgeColoring(tuple(colors), k + 4 if plan.legs else k)
    if verify:
        _verified(g, out, "extension coloring")
    return out


def _verified(g: Graph, coloring: EdgeColoring, what: str) -> EdgeColoring:
    verdict = is_k_rainbow(g, coloring, 3)
    if not verdict.ok:
        raise ConstructionError(f"{what} failed on triple {verdict.failing}", verdict.failing)
    return coloring


def kst_coloring(s: int, t: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """Coloring of K_{s,t} (first side ``0..s-1``) with at most ``min(6, s+t-3)`` colors."""
    if s < 3 or t < s:
        raise RainbowError("need 3 <= s <= t")
    g = complete_bipartite(s, t)
    if s + t - 3 >= 6:
        return extend_via_2dominating(g, (0, 1, s, s + 1))
    res = rx3_exact(g, budget=budget)
    if not res.proved:
        raise RainbowError(f"exact search for K_{s},{t} exceeded its budget")
    return _verified(g, res.coloring, f"K_{s},{t} coloring")


def _cycle_walk_colors(n: int) -> list[int]:
    # colors along the walk 0-1-...-(n-1)-0; the four edges around vertex 0 read 1,2,1,2
    if n < 4:
        raise RainbowError("needs n >= 4")
    return list(range(1, n - 1)) + [1, 2]


def cycle_coloring(n: int) -> EdgeColoring:
    """3-rainbow coloring of ``cycle(n)`` with ``n-2`` colors."""
    return _cycle_block_coloring(cycle(n))


def _block_budget(order: int, size: int, cls: str) -> int:
    return {"A": 1, "B": 2, "C": order - 2, "D": order - 3}[cls]


def block_composite_coloring(g: Graph, budget: int = DEFAULT_BUDGET,
                             exact_edge_limit: int = 16) -> EdgeColoring:
    """Color each block separately with a fresh palette.

    Blocks get an exact minimum coloring when small enough; larger cycle
    blocks use :func:`cycle_coloring`.
    """
    if g.n < 3:
        raise GraphError("needs n >= 3")
    dec = blocks(g)
    colors = [0] * g.m
    offset = 0
    for blk in dec.blocks:
        cap = _block_budget(blk.order, len(blk.edges), blk.cls)
        sub, back = g.induced_subgraph(blk.vertices)
        if blk.cls == "A":
            local = EdgeColoring((1,), 1)
        elif sub.m <= exact_edge_limit:
            res = rx3_exact(sub, budget=budget)
            if not res.proved:
                raise RainbowError(f"block {blk.vertices} exceeded the exact budget")
            local = res.coloring
        elif sub.m == sub.n:
            local = _cycle_block_coloring(sub)
        else:
            raise RainbowError(f"block with {sub.m} edges is too large for exact search")
        if local.num_colors > cap:
            raise ConstructionError(f"block {blk.vertices} needs {local.num_colors} > {cap} colors")
        local = local.compact()
        for i, (u, v) in enumerate(sub.edges):
            colors[g.edge_id(back[u], back[v])] = offset + local.colors[i]
        offset += local.k
    return _verified(g, EdgeColoring(tuple(colors), offset), "block composite coloring")


def _cycle_block_coloring(sub: Graph) -> EdgeColoring:
    # walk the cycle to map its edges onto the standard labelling of C_n
    order = [0]
    prev = -1
    while len(order) < sub.n:
        cur = order[-1]
        nxt = next(w for w in sub.adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    std = _cycle_walk_colors(sub.n)
    colors = [0] * sub.m
    for i in range(sub.n):
        colors[sub.edge_id(order[i], order[(i + 1) % sub.n])] = std[i]
    return EdgeColoring(tuple(colors), sub.n - 2)


# -- coloring files ----------------------------------------------------------


def serialize_coloring(g: Graph, coloring: EdgeColoring) -> str:
    if len(coloring.colors) != g.m:
        raise RainbowError("coloring does not match graph")
    return "".join(f"{u} {v} {c}\n" for (u, v), c in zip(g.edges, coloring.colors))


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Parse ``"u v color"`` lines; every edge of ``g`` must appear exactly once."""
    colors = [0] * g.m
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 3:
            raise RainbowError(f"line {lineno}: expected 'u v color', got {raw!r}")
        try:
            u, v, c = (int(x) for x in tok)
        except ValueError:
            raise RainbowError(f"line {lineno}: malformed token in {raw!r}") from None
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise RainbowError(f"line {lineno}: ({u}, {v}) is not an edge")
        if c < 1:
            raise RainbowError(f"line {lineno}: colors start at 1")
        e = g.edge_id(u, v)
        if colors[e]:
            raise RainbowError(f"line {lineno}: edge ({u}, {v}) colored twice")
        colors[e] = c
    missing = [g.edges[i] for i, c in enumerate(colors) if c == 0]
    if missing:
        raise RainbowError(f"edges without a color: {missing[:5]}")
    return EdgeColoring.from_list(colors)
