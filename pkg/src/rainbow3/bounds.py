"""All applicable 3-rainbow index bounds for one graph, in one report."""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import blocks, q_max
from .domination import augment_to_2dominating, greedy_connected_dominating, min_k_dominating_exact
from .graph import Graph, GraphError
from .rainbow import DEFAULT_BUDGET, base_coloring, rx3_exact, steiner_lower_witness
from .structure import find_induced

SCHEMA = 1


@dataclass(frozen=True)
class Bound:
    name: str
    value: int | None
    applicable: bool
    reason: str


@dataclass
class BoundsReport:
    n: int
    m: int
    delta: int
    bounds: list[Bound]
    steiner_lower: int
    steiner_sampled: bool
    exact_value: int | None = None
    exact_status: str = "skipped"
    extra: dict = field(default_factory=dict)

    def applicable(self) -> list[Bound]:
        return [b for b in self.bounds if b.applicable]

    @property
    def best_upper(self) -> int:
        return min(b.value for b in self.applicable())

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "bounds": [{"name": b.name, "value": b.value, "applicable": b.applicable,
                        "reason": b.reason} for b in self.bounds],
            "steiner_lower": self.steiner_lower,
            "steiner_mode": "sampled" if self.steiner_sampled else "exhaustive",
            "exact": {"value": self.exact_value, "status": self.exact_status},
        }


def _kst_sides(g: Graph) -> tuple[int, int] | None:
    parts = g.bipartition()
    if parts is None:
        return None
    s, t = sorted(len(p) for p in parts)
    return (s, t) if g.m == s * t else None


def _two_dominating(g: Graph, exact_limit: int):
    if g.n <= exact_limit:
        return min_k_dominating_exact(g, 2, require_connected=True)
    return augment_to_2dominating(g, greedy_connected_dominating(g).vertices)


def bounds_report(g: Graph, budget: int = DEFAULT_BUDGET, exact_edge_limit: int = 14,
                  exact_limit: int = 14) -> BoundsReport:
    """Evaluate every bound; run exact search only when the bounds do not already meet."""
    if g.n < 3:
        raise GraphError("needs n >= 3")
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    n, delta = g.n, g.min_degree()
    dec = blocks(g)
    _, _, c, d = dec.class_counts
    two_conn = len(dec.blocks) == 1 and dec.blocks[0].order == n
    out = [Bound("spanning_tree", n - 1, True, "distinct colors on a spanning tree")]

    if two_conn and n >= 4:
        out.append(Bound("two_connected", n - 2, True, "2-connected, n >= 4"))
    else:
        out.append(Bound("two_connected", None, False,
                         "n < 4" if two_conn else "has a cut vertex"))

    out.append(Bound("block_decomposition", n - c - 2 * d - 1, True,
                     f"class counts A,B,C,D = {list(dec.class_counts)}"))

    sides = _kst_sides(g)
    if sides and sides[0] >= 3:
        s, t = sides
        out.append(Bound("complete_bipartite", min(6, s + t - 3), True, f"K_{{{s},{t}}}"))
    else:
        out.append(Bound("complete_bipartite", None, False, "not K_{s,t} with 3 <= s <= t"))

    if delta >= 3:
        dom = _two_dominating(g, exact_limit)
        sub, _ = g.induced_subgraph(dom.vertices)
        base = base_coloring(sub).num_colors
        out.append(Bound("connected_2_dominating", base + 4, True,
                         f"D = {list(dom.vertices)} ({dom.method}), G[D] colored with {base}"))
        out.append(Bound("qmax_degree", n - q_max(g) * (delta - 1) + 3, True,
                         f"q_max = {dec.q_max}, delta = {delta}"))
        wit = find_induced(g, "P5") or find_induced(g, "C5")
        if wit is None:
            out.append(Bound("p5c5_free", 11 * n // 16 + 3, True, f"floor of {11 * n}/16 + 3"))
        else:
            out.append(Bound("p5c5_free", None, False, f"induced subgraph on {list(wit)}"))
    else:
        why = f"minimum degree {delta} < 3"
        out += [Bound(name, None, False, why)
                for name in ("connected_2_dominating", "qmax_degree", "p5c5_free")]

    st = steiner_lower_witness(g)
    rep = BoundsReport(n, g.m, delta, out, st.value, st.sampled)
    if st.value == rep.best_upper:
        rep.exact_value, rep.exact_status = st.value, "pinned"
    elif g.m <= exact_edge_limit:
        res = rx3_exact(g, budget=budget, lower=st.value)
        if res.proved:
            rep.exact_value, rep.exact_status = res.value, "proved"
        else:
            rep.exact_status = "budget-limited"
            rep.extra["refuted_below"] = res.lower
    return rep
