"""Pure-Python rainbow-tree kernel (fallback for the compiled ``_ckernel``).

A minimal rainbow tree containing three vertices is a spider: a center ``x``
joined to each terminal by a path, the three paths using pairwise disjoint
color sets.  So for every source we collect, per vertex ``x``, the
inclusion-minimal color sets of rainbow walks from the source to ``x``; a
triple is covered iff some ``x`` admits three pairwise disjoint choices.
"""

from __future__ import annotations

import itertools
from typing import Sequence


class RainbowChecker:
    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        self.m = len(edges)
        self._edges = [(int(u), int(v)) for u, v in edges]
        self._nbr: list[list[tuple[int, int]]] = []
        self._fam: dict[int, list[list[int]]] = {}
        self.palette = 0

    def set_colors(self, colors: Sequence[int]) -> None:
        if len(colors) != self.m:
            raise ValueError(f"expected {self.m} colors, got {len(colors)}")
        dense: dict[int, int] = {}
        bits = []
        for c in colors:
            bits.append(1 << dense.setdefault(c, len(dense)))
        self.palette = len(dense)
        nbr: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (u, v), bit in zip(self._edges, bits):
            nbr[u].append((v, bit))
            nbr[v].append((u, bit))
        self._nbr = nbr
        self._fam = {}

    def _family(self, src: int) -> list[list[int]]:
        fam = self._fam.get(src)
        if fam is not None:
            return fam
        fam = [[] for _ in range(self.n)]
        fam[src].append(0)
        frontier = [(src, 0)]
        nbr = self._nbr
        # layers grow by one color each, so earlier entries are never supersets
        while frontier:
            nxt = []
            for v, mask in frontier:
                for w, bit in nbr[v]:
                    if mask & bit:
                        continue
                    nm = mask | bit
                    slot = fam[w]
                    for f in slot:
                        if f & nm == f:
                            break
                    else:
                        slot.append(nm)
                        nxt.append((w, nm))
            frontier = nxt
        self._fam[src] = fam
        return fam

    def triple_ok(self, a: int, b: int, c: int) -> bool:
        fa, fb, fc = self._family(a), self._family(b), self._family(c)
        for x in range(self.n):
            la, lb, lc = fa[x], fb[x], fc[x]
            if not (la and lb and lc):
                continue
            for ma in la:
                for mb in lb:
                    if ma & mb:
                        continue
                    mab = ma | mb
                    for mc in lc:
                        if not mab & mc:
                            return True
        return False

    def first_failing(self) -> tuple[int, int, int] | None:
        for t in itertools.combinations(range(self.n), 3):
            if not self.triple_ok(*t):
                return t
        return None
