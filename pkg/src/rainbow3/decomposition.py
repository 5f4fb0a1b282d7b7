"""Block (biconnected component) decomposition and the four block classes."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

CLASSES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class Block:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    cls: str

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    q_max: int

    @property
    def class_counts(self) -> tuple[int, int, int, int]:
        return tuple(sum(b.cls == c for b in self.blocks) for c in CLASSES)

    def to_json(self) -> dict:
        return {
            "blocks": [{"vertices": list(b.vertices), "edges": list(b.edges), "class": b.cls}
                       for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "class_counts": dict(zip(CLASSES, self.class_counts)),
            "q_max": self.q_max,
        }


def classify_block(order: int, size: int) -> str:
    """Class of a block from its vertex and edge counts.

    A 2-connected block whose edge count equals its order is a cycle.
    """
    if order == 2:
        return "A"
    if order == 3:
        return "B"
    if size == order or order <= 6:
        return "C"
    return "D"


def _biconnected(g: Graph) -> tuple[list[list[int]], list[int]]:
    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    blocks: list[list[int]] = []
    estack: list[int] = []
    time = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = time
        time += 1
        children = 0
        # frames: (vertex, parent edge id, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            inc = g.adj[v]
            if i < len(inc):
                stack[-1] = (v, pe, i + 1)
                w = inc[i]
                e = g.edge_id(v, w)
                if e == pe:
                    continue
                if disc[w] < 0:
                    estack.append(e)
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        children += 1
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                if u != root:
                    is_cut[u] = True
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                blocks.append(sorted(comp))
        if children > 1:
            is_cut[root] = True
    return blocks, [v for v in range(n) if is_cut[v]]


def q_max(g: Graph) -> int:
    """Maximum number of components left after deleting a single vertex."""
    if g.n < 2:
        raise GraphError("q_max needs n >= 2")
    return max(len(g.components(1 << u)) for u in range(g.n))


def blocks(g: Graph) -> BlockDecomposition:
    if g.n < 2:
        raise GraphError("block decomposition needs n >= 2")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    raw, cuts = _biconnected(g)
    out = []
    for comp in raw:
        vs = sorted({x for e in comp for x in g.edges[e]})
        out.append(Block(tuple(comp), tuple(vs), classify_block(len(vs), len(comp))))
    out.sort(key=lambda b: b.edges)
    # block-cut tree: a cut vertex in j blocks leaves j components when deleted
    per_vertex = [0] * g.n
    for b in out:
        for v in b.vertices:
            per_vertex[v] += 1
    return BlockDecomposition(tuple(out), tuple(cuts), max(per_vertex))


def block_bound(g: Graph) -> int:
    """Upper bound ``n - |C| - 2|D| - 1`` on the 3-rainbow index."""
    if g.n < 3:
        raise GraphError("block bound needs n >= 3")
    _, _, c, d = blocks(g).class_counts
    return g.n - c - 2 * d - 1
