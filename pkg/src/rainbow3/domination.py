"""k-domination: verification, exact minima, a greedy heuristic and 2-domination augmentation."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .decomposition import q_max
from .graph import Graph, LimitError

EXACT_LIMIT = 16


class DominationError(ValueError):
    pass


@dataclass(frozen=True)
class DominationCertificate:
    vertices: tuple[int, ...]
    k: int
    connected: bool
    method: str = "exact"

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def to_json(self) -> dict:
        return {"set": list(self.vertices), "k": self.k, "connected": self.connected,
                "size": self.size, "method": self.method}


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _dominates(g: Graph, mask: int, k: int) -> bool:
    for v in range(g.n):
        if not mask >> v & 1 and (g.adjmask[v] & mask).bit_count() < k:
            return False
    return True


def is_k_dominating(g: Graph, d: Iterable[int], k: int, require_connected: bool = False) -> bool:
    mask = to_mask(d)
    if mask >> g.n:
        raise DominationError("set contains vertices outside the graph")
    if not _dominates(g, mask, k):
        return False
    return not require_connected or g.is_connected_set(mask)


def min_k_dominating_exact(g: Graph, k: int = 1, require_connected: bool = False,
                           limit: int = EXACT_LIMIT) -> DominationCertificate:
    """Minimum (connected) k-dominating set; ties go to the lexicographically smallest set."""
    if g.n > limit:
        raise LimitError(f"n={g.n} exceeds exact limit {limit}")
    if k < 1:
        raise DominationError("k must be positive")
    if require_connected and not g.is_connected():
        raise DominationError("graph is disconnected")
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = to_mask(combo)
            if _dominates(g, mask, k) and (not require_connected or g.is_connected_set(mask)):
                return DominationCertificate(combo, k, require_connected)
    raise DominationError("graph has no vertices")


def greedy_connected_dominating(g: Graph) -> DominationCertificate:
    """Grow a connected dominating set from a maximum-degree vertex."""
    if not g.is_connected() or g.n == 0:
        raise DominationError("graph must be connected and non-empty")
    full = (1 << g.n) - 1
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    chosen = 1 << start
    covered = chosen | g.adjmask[start]
    while covered != full:
        best, gain = -1, -1
        for v in from_mask(covered & ~chosen):
            new = (g.adjmask[v] & ~covered).bit_count()
            if new > gain:
                best, gain = v, new
        chosen |= 1 << best
        covered |= g.adjmask[best]
    return DominationCertificate(from_mask(chosen), 1, True, method="greedy")


def connected_dominating(g: Graph, exact_limit: int = 14) -> DominationCertificate:
    if g.n <= exact_limit:
        return min_k_dominating_exact(g, 1, True)
    return greedy_connected_dominating(g)


def forest_bipartition(g: Graph, outside: int) -> tuple[int, int, int]:
    """Split the vertices of bitmask ``outside`` by the BFS spanning forest they induce.

    Returns ``(singletons, x, y)`` as bitmasks.  Trees are rooted at the smallest
    vertex of each component with the root on the ``x`` side.
    """
    singles = x = y = 0
    seen = 0
    for s in from_mask(outside):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        comp_x, comp_y = 1 << s, 0
        queue = deque([(s, 0)])
        while queue:
            u, depth = queue.popleft()
            for w in g.adj[u]:
                if outside >> w & 1 and not seen >> w & 1:
                    seen |= 1 << w
                    if depth % 2:
                        comp_x |= 1 << w
                    else:
                        comp_y |= 1 << w
                    queue.append((w, depth + 1))
        if comp_y == 0:
            singles |= comp_x
        else:
            x |= comp_x
            y |= comp_y
    return singles, x, y


def augment_to_2dominating(g: Graph, d: Iterable[int]) -> DominationCertificate:
    """Extend a connected dominating set to a connected 2-dominating superset.

    Adds at most ``floor((n - |d|) / 2)`` vertices: each step adds one vertex of
    the smaller forest side ``X``.
    """
    dmask = to_mask(d)
    if g.min_degree() < 2:
        raise DominationError("minimum degree must be at least 2")
    if not is_k_dominating(g, from_mask(dmask), 1, require_connected=True):
        raise DominationError("input is not a connected dominating set")
    full = (1 << g.n) - 1
    singles, x, y = forest_bipartition(g, full & ~dmask)
    if x.bit_count() > y.bit_count():
        x, y = y, x
    for v in from_mask(singles):
        if (g.adjmask[v] & dmask).bit_count() < 2:
            raise DominationError(f"singleton {v} has fewer than two neighbours in D")
    forest = x | y
    out = dmask
    while True:
        deficient = [v for v in from_mask(forest & ~out) if (g.adjmask[v] & out).bit_count() == 1]
        if not deficient:
            break
        v = deficient[0]
        if y >> v & 1:
            cand = g.adjmask[v] & x & ~out
            if not cand:
                raise DominationError(f"counterexample: vertex {v} in Y has no free X neighbour")
            out |= cand & -cand
        else:
            out |= 1 << v
    return DominationCertificate(from_mask(out), 2, True, method="augmented")


def reed_bound(g: Graph) -> int | None:
    """``floor(3n/8)`` bound on the domination number; ``None`` when min degree < 3."""
    if g.min_degree() < 3 or not g.is_connected():
        return None
    return 3 * g.n // 8


def qmax_domination_bound(g: Graph, k: int) -> int | None:
    """``n - q_max (delta - k + 1)`` bound on the connected k-domination number."""
    delta = g.min_degree()
    if delta < 2 or not 1 <= k <= delta or not g.is_connected():
        return None
    return g.n - q_max(g) * (delta - k + 1)

