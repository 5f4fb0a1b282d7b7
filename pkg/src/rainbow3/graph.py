"""Simple undirected graphs, edge-list I/O, family generators and exact helpers."""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed input or invalid generator parameters."""


class LimitError(ValueError):
    """An exact routine was asked to run beyond its configured size limit."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored sorted lexicographically by ``(min, max)``; an edge id is
    its position in that order, which keeps coloring files stable.
    """

    __slots__ = ("n", "edges", "adj", "adjmask", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.adjmask: tuple[int, ...] = tuple(sum(1 << w for w in a) for a in self.adj)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def incident(self, v: int) -> list[tuple[int, int]]:
        """``(neighbor, edge id)`` pairs around ``v``, neighbors ascending."""
        return [(w, self.edge_id(v, w)) for w in self.adj[v]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- queries ---------------------------------------------------------

    def components(self, removed: int = 0) -> list[list[int]]:
        """Connected components of the graph minus the vertex bitmask ``removed``."""
        seen = removed
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            seen |= 1 << s
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen >> w & 1:
                        seen |= 1 << w
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        return ([v for v in range(self.n) if side[v] == 0],
                [v for v in range(self.n) if side[v] == 1])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to ``0..k-1``; also returns new->old ids."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), sub), keep

    def is_connected_set(self, mask: int) -> bool:
        """Whether the vertex bitmask ``mask`` induces a connected subgraph."""
        if mask == 0:
            return False
        start = (mask & -mask).bit_length() - 1
        reached = frontier = 1 << start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adjmask[low.bit_length() - 1]
                f ^= low
            nxt &= mask & ~reached
            reached |= nxt
            frontier = nxt
        return reached == mask

    def distances(self) -> list[list[int]]:
        """All-pairs BFS distances; ``-1`` marks unreachable pairs."""
        out = []
        for s in range(self.n):
            d = [-1] * self.n
            d[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if d[w] < 0:
                        d[w] = d[u] + 1
                        queue.append(w)
            out.append(d)
        return out

    def spanning_tree_edges(self) -> list[int]:
        """Edge ids of the BFS spanning forest rooted at the smallest vertex of each component."""
        seen = [False] * self.n
        tree = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        tree.append(self.edge_id(u, w))
                        queue.append(w)
        return sorted(tree)


# -- text formats ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"u v"`` lines; an optional ``"n <count>"`` header fixes the vertex count."""
    declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "n":
            if len(tok) != 2 or declared is not None or pairs:
                raise GraphError(f"line {lineno}: bad header {raw!r}")
            declared = _parse_int(tok[1], lineno)
            continue
        if len(tok) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = _parse_int(tok[0], lineno), _parse_int(tok[1], lineno)
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id")
        pairs.append((u, v))
    n = declared if declared is not None else 1 + max((max(p) for p in pairs), default=-1)
    for u, v in pairs:
        if max(u, v) >= n:
            raise GraphError(f"vertex {max(u, v)} not below declared n={n}")
    return Graph(n, pairs)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: malformed token {tok!r}") from None


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, colors: Sequence[int] | None = None) -> str:
    out = ["graph G {"]
    out += [f"  {v};" for v in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        attr = f' [label="{colors[i]}", colorscheme=set312, color={(colors[i] - 1) % 12 + 1}]' if colors else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


# -- families ----------------------------------------------------------------

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "three_sun",
            "k5_minus_e", "figure1", "random_min_degree")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError("complete bipartite needs s, t >= 1")
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def three_sun() -> Graph:
    # v1..v6 -> 0..5; chords v2v4, v2v6, v4v6
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(1, 3), (1, 5), (3, 5)])


def k5_minus_e() -> Graph:
    return Graph(5, [e for e in itertools.combinations(range(5), 2) if e != (0, 1)])


def figure1(r: int, b: int) -> Graph:
    """Chain of ``b`` bridges, ``r`` 4-cycles in series, then a 7-cycle with one chord.

    Vertex 0 is the start of the chain; see :func:`figure1_terminals`.
    """
    if r < 0 or b < 0:
        raise GraphError("figure1 needs r >= 0 and b >= 0")
    edges = [(i, i + 1) for i in range(b)]
    at = b
    nxt = b + 1
    for _ in range(r):
        a, q, c = nxt, nxt + 1, nxt + 2
        edges += [(at, a), (a, q), (q, c), (c, at)]
        at, nxt = q, nxt + 3
    ring = [at] + list(range(nxt, nxt + 6))  # v1..v7
    edges += [(ring[i], ring[(i + 1) % 7]) for i in range(7)]
    edges.append((ring[0], ring[3]))
    return Graph(nxt + 6, edges)


def figure1_terminals(r: int, b: int) -> tuple[int, int, int]:
    """``(u, v, w)``: chain start, v3 and v6 of the chorded 7-cycle."""
    first = b + 1 + 3 * r  # id of v2
    return 0, first + 1, first + 4


def random_min_degree(n: int, delta: int, seed: int, m: int | None = None,
                      retries: int = 100) -> Graph:
    """Seeded random connected graph with minimum degree at least ``delta``.

    A random spanning tree is grown first; random non-edges touching a vertex of
    deficient degree are then added until the minimum degree reaches ``delta``,
    after which uniform random non-edges are added until ``m`` edges exist.
    """
    if n < 1 or delta < 0 or delta > n - 1:
        raise GraphError(f"cannot build n={n} graph with min degree {delta}")
    max_m = n * (n - 1) // 2
    if m is not None and m > max_m:
        raise GraphError(f"m={m} exceeds {max_m}")
    rng = random.Random(seed)
    for _ in range(retries):
        order = list(range(n))
        rng.shuffle(order)
        edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        while min(deg) < delta:
            cand = [(u, v) for u, v in itertools.combinations(range(n), 2)
                    if (u, v) not in edges and (deg[u] < delta or deg[v] < delta)]
            if not cand:
                break
            u, v = rng.choice(cand)
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
        if min(deg, default=delta) < delta:
            continue
        while m is not None and len(edges) < m:
            cand = [e for e in itertools.combinations(range(n), 2) if e not in edges]
            edges.add(rng.choice(cand))
        g = Graph(n, edges)
        if g.is_connected() and g.min_degree() >= delta:
            return g
    raise GraphError(f"no graph with min degree {delta} after {retries} tries")


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    f = spec.family
    try:
        if f == "path":
            return path(p["n"])
        if f == "cycle":
            return cycle(p["n"])
        if f == "complete":
            return complete(p["n"])
        if f == "complete_bipartite":
            return complete_bipartite(p["s"], p["t"])
        if f == "star":
            return star(p["n"])
        if f == "three_sun":
            return three_sun()
        if f == "k5_minus_e":
            return k5_minus_e()
        if f == "figure1":
            return figure1(p.get("r", 1), p.get("b", 1))
        if f == "random_min_degree":
            return random_min_degree(p["n"], p["delta"], p.get("seed", 0), p.get("m"))
    except KeyError as exc:
        raise GraphError(f"family {f!r} needs parameter {exc.args[0]!r}") from None
    raise GraphError(f"unknown family {f!r}")


# -- Steiner trees -----------------------------------------------------------

STEINER_TERMINAL_LIMIT = 8


def min_steiner_tree_size(g: Graph, terminals: Iterable[int]) -> int:
    """Minimum edge count of a subtree of ``g`` spanning all ``terminals``.

    Dreyfus-Wagner dynamic program over terminal subsets with unit edge weights.
    """
    ts = sorted(set(terminals))
    if not ts:
        raise GraphError("terminal set is empty")
    if len(ts) > STEINER_TERMINAL_LIMIT:
        raise LimitError(f"more than {STEINER_TERMINAL_LIMIT} terminals")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if len(ts) == 1:
        return 0
    dist = g.distances()
    n, k = g.n, len(ts)
    inf = float("inf")
    full = (1 << k) - 1
    dp = [[inf] * n for _ in range(full + 1)]
    for i, t in enumerate(ts):
        dp[1 << i] = list(dist[t])
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        row = dp[mask]
        sub = (mask - 1) & mask
        while sub:
            if sub < mask ^ sub:  # each split once
                a, b = dp[sub], dp[mask ^ sub]
                for v in range(n):
                    s = a[v] + b[v]
                    if s < row[v]:
                        row[v] = s
            sub = (sub - 1) & mask
        best = list(row)
        for v in range(n):
            dv = dist[v]
            best[v] = min(row[u] + dv[u] for u in range(n))
        dp[mask] = best
    return int(dp[full][ts[0]])


def steiner_triple_size(dist: Sequence[Sequence[int]], a: int, b: int, c: int) -> int:
    """Three-terminal Steiner size: a minimal tree is a spider around some center."""
    da, db, dc = dist[a], dist[b], dist[c]
    return min(x + y + z for x, y, z in zip(da, db, dc))
