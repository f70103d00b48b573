import pytest
from hypothesis import given
from hypothesis import strategies as st

from termpair.constructions import (
    bipartite_one_factor_demand,
    canonical_triples,
    one_factor_demand,
    relabel_instance,
    triangle_demand,
)
from termpair.graph import HostGraph, max_degree


def test_one_factor_examples():
    assert one_factor_demand(2, 1).edges == ((0, 1, 1),)
    d = one_factor_demand(6, 3)
    assert d.edges == ((0, 1, 3), (2, 3, 3), (4, 5, 3)) and d.num_edges == 9
    d = one_factor_demand(4, 2)
    assert max_degree(d) == 2 and d.num_edges == 4


def test_triangle_examples():
    assert triangle_demand(3, 2).edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))
    d = triangle_demand(6, 4)
    assert len(d.edges) == 6 and all(m == 2 for *_, m in d.edges)
    assert d.num_edges == 12 and max_degree(d) == 4
    d = triangle_demand(27, 14)
    assert d.num_edges == 189 and max_degree(d) == 14


def test_bipartite_examples():
    assert bipartite_one_factor_demand(3).edges == ((0, 3, 1), (1, 4, 1), (2, 5, 1))
    d = bipartite_one_factor_demand(6)
    assert len(d.edges) == 6 and d.num_edges == 12
    d = bipartite_one_factor_demand(9)
    assert max_degree(d) == 3 and d.num_edges == 27


def test_canonical_triples():
    assert canonical_triples(3).triples == ((0, 1, 2),)
    assert canonical_triples(6).triples == ((0, 1, 2), (3, 4, 5))
    t = canonical_triples(9)
    assert len(t.triples) == 3
    assert sorted(v for tr in t.triples for v in tr) == list(range(9))


@pytest.mark.parametrize(
    "call",
    [
        lambda: one_factor_demand(5, 1),
        lambda: triangle_demand(7, 2),
        lambda: triangle_demand(6, 3),
        lambda: bipartite_one_factor_demand(4),
        lambda: canonical_triples(10),
    ],
)
def test_rejects_bad_parameters(call):
    with pytest.raises(ValueError):
        call()


@given(st.integers(1, 40), st.integers(1, 30))
def test_family_degrees(k, half):
    n, q = 3 * k, 2 * half
    d = triangle_demand(n, q)
    assert max_degree(d) == q and d.num_edges * 2 == n * q
    owner = canonical_triples(n).index_of()
    assert all(owner[u] == owner[v] for u, v, _ in d.edges)
    if n % 2 == 0:
        f = one_factor_demand(n, q)
        assert max_degree(f) == q and f.num_edges * 2 == n * q


@given(st.integers(1, 30))
def test_bipartite_edges_cross(k):
    n = 3 * k
    d = bipartite_one_factor_demand(n)
    host = HostGraph.bipartite(n, n)
    assert all(host.has_edge(u, v) for u, v, _ in d.edges)
    assert max_degree(d) == n // 3


@given(st.integers(0, 1000))
def test_relabel_keeps_bipartite_sides(seed):
    host = HostGraph.bipartite(6, 6)
    h2, d2, perm = relabel_instance(host, bipartite_one_factor_demand(6), seed)
    assert h2 == host
    assert all(host.has_edge(u, v) for u, v, _ in d2.edges)
    assert sorted(perm) == list(range(12))
