"""Brute-force reference implementations, independent of the package internals."""

import itertools


def _connected_edge_set(n, edges, chosen):
    """(is connected subgraph, vertex set) for a nonempty list of chosen edges."""
    verts = {x for i in chosen for x in edges[i]}
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in chosen:
        a, b = edges[i]
        parent[find(a)] = find(b)
    return len({find(v) for v in verts}) == 1, verts


def rainbow_tree_exists(n, edges, colors, terminals):
    """Enumerate every edge subset that forms a tree containing the terminals."""
    ts = set(terminals)
    if len(ts) <= 1:
        return True
    m = len(edges)
    for size in range(1, m + 1):
        for chosen in itertools.combinations(range(m), size):
            if len({colors[i] for i in chosen}) != size:
                continue
            ok, verts = _connected_edge_set(n, edges, chosen)
            if ok and len(verts) == size + 1 and ts <= verts:
                return True
    return False


def steiner_size(n, edges, terminals):
    """Smallest connected edge subset touching every terminal."""
    ts = set(terminals)
    if len(ts) == 1:
        return 0
    m = len(edges)
    for size in range(1, m + 1):
        for chosen in itertools.combinations(range(m), size):
            ok, verts = _connected_edge_set(n, edges, chosen)
            if ok and ts <= verts:
                return size
    raise ValueError("terminals not connected")


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_connected_subset(adj, vs):
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u] & vs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def domination_number(n, edges, k=1, connected=False):
    adj = adjacency(n, edges)
    for size in range(1, n + 1):
        for d in itertools.combinations(range(n), size):
            ds = set(d)
            if all(len(adj[v] & ds) >= k for v in range(n) if v not in ds):
                if not connected or is_connected_subset(adj, ds):
                    return size
    raise ValueError


def has_induced(n, edges, pattern):
    """All 5-subsets times all vertex orderings, compared edge by edge."""
    adj = adjacency(n, edges)
    if pattern == "P5":
        want = {(0, 1), (1, 2), (2, 3), (3, 4)}
    else:
        want = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    for vs in itertools.combinations(range(n), 5):
        for perm in itertools.permutations(vs):
            if all((perm[j] in adj[perm[i]]) == ((i, j) in want)
                   for i, j in itertools.combinations(range(5), 2)):
                return True
    return False


def rx3_brute(n, edges, kmax):
    """Smallest k such that some k-coloring (all k^m assignments) is 3-rainbow."""
    m = len(edges)
    for k in range(1, kmax + 1):
        for colors in itertools.product(range(k), repeat=m):
            if all(rainbow_tree_exists(n, edges, colors, t)
                   for t in itertools.combinations(range(n), 3)):
                return k
    return None


def rainbow_tree_vertex_sets(n, edges, colors):
    """Vertex sets (as bitmasks) of every rainbow subtree with at least one edge."""
    m = len(edges)
    out = set()
    for size in range(1, m + 1):
        for chosen in itertools.combinations(range(m), size):
            if len({colors[i] for i in chosen}) != size:
                continue
            ok, verts = _connected_edge_set(n, edges, chosen)
            if ok and len(verts) == size + 1:
                out.add(sum(1 << v for v in verts))
    return out


def covered(tree_sets, terminals):
    want = sum(1 << v for v in terminals)
    if len(set(terminals)) <= 1:
        return True
    return any(t & want == want for t in tree_sets)
