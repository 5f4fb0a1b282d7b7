import random
from fractions import Fraction

import pytest

from oracles import has_induced
from rainbow3 import Graph, LimitError, is_k_rainbow
from rainbow3.graph import complete, complete_bipartite, cycle, path, random_min_degree, three_sun
from rainbow3.structure import (StructureError, find_induced, is_p5c5_free,
                                is_perfect_connected_dominant, p5c5_pipeline_bound,
                                structure_report)


def _is_induced(g, wit, pattern):
    k = len(wit)
    want = {(i, i + 1) for i in range(k - 1)}
    if pattern == "C5":
        want.add((0, k - 1))
    return all(g.has_edge(wit[i], wit[j]) == ((i, j) in want)
               for i in range(k) for j in range(i + 1, k))


def test_path_contains_itself():
    assert find_induced(path(5), "P5") == (0, 1, 2, 3, 4)
    assert find_induced(path(5), "C5") is None


def test_complete_graphs_are_free():
    for n in range(1, 9):
        assert is_p5c5_free(complete(n))


def test_six_cycle():
    g = cycle(6)
    wit = find_induced(g, "P5")
    assert wit is not None and _is_induced(g, wit, "P5")
    assert find_induced(g, "C5") is None


def test_five_cycle_witness_in_cycle_order():
    wit = find_induced(cycle(5), "C5")
    assert _is_induced(cycle(5), wit, "C5")


def test_unknown_pattern():
    with pytest.raises(StructureError):
        find_induced(cycle(5), "K5")


def _random_graph(rng, n):
    p = rng.random()
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.mark.parametrize("seed", range(40))
def test_find_induced_matches_naive(seed):
    rng = random.Random(seed)
    g = _random_graph(rng, rng.randint(5, 8))
    for pat in ("P5", "C5"):
        wit = find_induced(g, pat)
        assert (wit is not None) == has_induced(g.n, g.edges, pat)
        if wit is not None:
            assert _is_induced(g, wit, pat)


def test_pcd_examples():
    assert not is_perfect_connected_dominant(path(5))
    assert is_perfect_connected_dominant(complete(4))


def test_pcd_limit():
    with pytest.raises(LimitError):
        is_perfect_connected_dominant(cycle(11))


@pytest.mark.parametrize("seed", range(30))
def test_free_iff_perfect_connected_dominant(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    g = random_min_degree(n, 1, seed, m=rng.randint(n - 1, n * (n - 1) // 2))
    assert is_p5c5_free(g) == is_perfect_connected_dominant(g)


def test_report_consistency():
    rep = structure_report(cycle(6))
    assert rep.has_induced_p5 and not rep.has_induced_c5 and not rep.p5c5_free
    assert rep.perfect_connected_dominant is False
    data = rep.to_json()
    assert data["p5c5_free"] is False and len(data["p5_witness"]) == 5
    big = structure_report(complete(12))
    assert big.p5c5_free and big.perfect_connected_dominant is None


def test_pipeline_complete_graph():
    g = complete(8)
    res = p5c5_pipeline_bound(g)
    assert res.applicable
    assert res.bound == Fraction(17, 2) and res.bound_floor == 8
    assert res.colors_used == 5
    assert is_k_rainbow(g, res.coloring).ok


def test_pipeline_complete_bipartite():
    g = complete_bipartite(4, 4)
    res = p5c5_pipeline_bound(g)
    assert res.applicable and res.colors_used == 7
    assert res.colors_used <= res.bound
    assert is_k_rainbow(g, res.coloring).ok


def test_pipeline_inapplicable():
    assert not p5c5_pipeline_bound(path(5)).applicable
    assert not p5c5_pipeline_bound(cycle(6)).applicable
    res = p5c5_pipeline_bound(three_sun())
    assert not res.applicable and "minimum degree" in res.reason
