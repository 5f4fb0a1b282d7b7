# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled rainbow-tree kernel; same interface and algorithm as ``_pykernel``.

Palettes are limited to 64 colors (one machine word per color set).
"""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

ctypedef vector[uint64_t] MaskList
ctypedef vector[MaskList] Family


cdef class RainbowChecker:
    cdef readonly int n, m
    cdef readonly int palette
    cdef vector[int] eu, ev, start, nbr, eid
    cdef vector[uint64_t] bit
    cdef vector[Family] fam
    cdef vector[char] have

    def __init__(self, int n, edges):
        cdef int i, u, v
        self.n = n
        self.m = len(edges)
        self.palette = 0
        deg = [0] * n
        for u, v in edges:
            self.eu.push_back(u)
            self.ev.push_back(v)
            deg[u] += 1
            deg[v] += 1
        self.start.resize(n + 1, 0)
        for i in range(n):
            self.start[i + 1] = self.start[i] + deg[i]
        self.nbr.resize(2 * self.m, 0)
        self.eid.resize(2 * self.m, 0)
        fill = [self.start[i] for i in range(n)]
        for i in range(self.m):
            u = self.eu[i]
            v = self.ev[i]
            self.nbr[fill[u]] = v
            self.eid[fill[u]] = i
            fill[u] += 1
            self.nbr[fill[v]] = u
            self.eid[fill[v]] = i
            fill[v] += 1
        self.bit.resize(self.m, 0)
        self.fam.resize(n)
        self.have.resize(n, 0)

    def set_colors(self, colors):
        cdef int i
        if len(colors) != self.m:
            raise ValueError(f"expected {self.m} colors, got {len(colors)}")
        dense = {}
        for i in range(self.m):
            d = dense.setdefault(colors[i], len(dense))
            if d >= 64:
                raise OverflowError("compiled kernel supports at most 64 colors")
            self.bit[i] = (<uint64_t>1) << (<int>d)
        self.palette = len(dense)
        for i in range(self.n):
            self.have[i] = 0

    cdef void _reach(self, int src):
        cdef Family* F = &self.fam[src]
        cdef vector[int] fv, nv
        cdef vector[uint64_t] fm, nm_
        cdef int v, w, j, idx, k
        cdef uint64_t mask, b, nm, f
        cdef bint dominated
        F.clear()
        F.resize(self.n)
        F[0][src].push_back(0)
        fv.push_back(src)
        fm.push_back(0)
        while fv.size() > 0:
            nv.clear()
            nm_.clear()
            for idx in range(<int>fv.size()):
                v = fv[idx]
                mask = fm[idx]
                for j in range(self.start[v], self.start[v + 1]):
                    b = self.bit[self.eid[j]]
                    if mask & b:
                        continue
                    nm = mask | b
                    w = self.nbr[j]
                    dominated = False
                    for k in range(<int>F[0][w].size()):
                        f = F[0][w][k]
                        if (f & nm) == f:
                            dominated = True
                            break
                    if dominated:
                        continue
                    F[0][w].push_back(nm)
                    nv.push_back(w)
                    nm_.push_back(nm)
            fv.swap(nv)
            fm.swap(nm_)
        self.have[src] = 1

    cdef bint _triple(self, int a, int b, int c):
        cdef int x, i, j, k, na, nb, nc
        cdef uint64_t ma, mab
        if not self.have[a]:
            self._reach(a)
        if not self.have[b]:
            self._reach(b)
        if not self.have[c]:
            self._reach(c)
        cdef Family* Fa = &self.fam[a]
        cdef Family* Fb = &self.fam[b]
        cdef Family* Fc = &self.fam[c]
        for x in range(self.n):
            na = Fa[0][x].size()
            nb = Fb[0][x].size()
            nc = Fc[0][x].size()
            if na == 0 or nb == 0 or nc == 0:
                continue
            for i in range(na):
                ma = Fa[0][x][i]
                for j in range(nb):
                    if ma & Fb[0][x][j]:
                        continue
                    mab = ma | Fb[0][x][j]
                    for k in range(nc):
                        if not (mab & Fc[0][x][k]):
                            return True
        return False

    def triple_ok(self, int a, int b, int c):
        return self._triple(a, b, c)

    def first_failing(self):
        cdef int a, b, c
        for a in range(self.n):
            for b in range(a + 1, self.n):
                for c in range(b + 1, self.n):
                    if not self._triple(a, b, c):
                        return (a, b, c)
        return None
