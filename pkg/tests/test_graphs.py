from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from vcgap.errors import GraphParseError, ParameterError
from vcgap.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    gen_family,
    grotzsch,
    induced_subgraph,
    is_bipartite,
    is_independent,
    is_vertex_cover,
    kneser,
    mycielskian,
    parse_dimacs,
    petersen,
    to_adjacency_text,
    to_dimacs,
)

from strategies import graphs


def test_parse_single_edge():
    g = parse_dimacs("p edge 2 1\ne 1 2")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_triangle_with_comments_and_duplicates():
    g = parse_dimacs("c a triangle\np edge 3 4\ne 1 2\ne 2 3\ne 1 3\ne 2 1\n")
    assert g == complete(3)


def test_parse_out_of_range_names_line():
    with pytest.raises(GraphParseError, match="line 2: vertex 4 out of range"):
        parse_dimacs("p edge 3 1\ne 1 4")


@pytest.mark.parametrize("text, message", [
    ("p edge 3 1\ne 2 2", "self-loop"),
    ("p graph 3 1\ne 1 2", "malformed header"),
    ("e 1 2", "before 'p edge'"),
    ("c nothing here", "missing"),
    ("p edge 2 1\ne 1 x", "malformed edge"),
])
def test_parse_errors(text, message):
    with pytest.raises(GraphParseError, match=message):
        parse_dimacs(text)


def test_adjacency_consistent_with_edges():
    g = petersen()
    assert sum(len(a) for a in g.adj) == 2 * g.m
    for u, v in g.edges:
        assert v in g.adj[u] and u in g.adj[v]


def test_from_edges_rejects_bad_input():
    with pytest.raises(ParameterError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ParameterError):
        Graph.from_edges(2, [(0, 2)])


def test_small_families():
    assert cycle(5).m == 5 and cycle(5).n == 5
    assert complete(3).edges == ((0, 1), (0, 2), (1, 2))
    assert complete_bipartite(2, 3).m == 6


@pytest.mark.parametrize("n, k", [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)])
def test_kneser_edge_count(n, k):
    # each k-subset is disjoint from C(n-k, k) others
    g = kneser(n, k)
    assert g.n == comb(n, k)
    assert g.m == comb(n, k) * comb(n - k, k) // 2


def test_petersen_is_cubic():
    g = petersen()
    assert (g.n, g.m) == (10, 15)
    assert all(len(a) == 3 for a in g.adj)


@pytest.mark.parametrize("family, params", [
    ("cycle", [2]), ("kneser", [3, 2]), ("complete", [0]), ("complete_bipartite", [0, 1]),
    ("cycle", [3, 4]), ("petersen", [])])
def test_gen_family_rejects(family, params):
    with pytest.raises(ParameterError):
        gen_family(family, params)


def test_gen_family_mycielskian_of():
    base = gen_family("complete", [2])
    assert gen_family("mycielskian_of", [], base=base).n == 5
    twice = gen_family("mycielskian_of", [2], base=base)
    assert (twice.n, twice.m) == (grotzsch().n, grotzsch().m)
    with pytest.raises(ParameterError):
        gen_family("mycielskian_of", [1])


@given(graphs(max_n=7))
def test_mycielskian_counts(g):
    h = mycielskian(g)
    assert h.n == 2 * g.n + 1
    assert h.m == 3 * g.m + g.n


def test_mycielskian_of_k2_is_c5():
    h = mycielskian(complete(2))
    assert h.n == 5 and h.m == 5 and all(len(a) == 2 for a in h.adj)
    assert not is_bipartite(h)


def test_grotzsch_triangle_free():
    g = grotzsch()
    assert (g.n, g.m) == (11, 20)
    assert not any(g.adj[u] & g.adj[v] for u, v in g.edges)


def test_independence_and_cover_examples():
    c5, k3 = cycle(5), complete(3)
    assert is_independent(c5, [0, 2])
    assert not is_independent(c5, [0, 1])
    assert is_independent(petersen(), [])
    assert is_vertex_cover(k3, [0, 1])
    assert not is_vertex_cover(k3, [0])
    assert is_vertex_cover(Graph.from_edges(4, []), [])


def test_bipartite_examples():
    assert is_bipartite(cycle(4))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(Graph.from_edges(3, []))
    assert is_bipartite(complete_bipartite(3, 4))


def test_induced_subgraph_examples():
    h, mapping = induced_subgraph(complete(3), [0, 1])
    assert h.edges == ((0, 1),) and mapping == (0, 1)
    h, _ = induced_subgraph(cycle(5), [0, 1, 2])
    assert h.edges == ((0, 1), (1, 2))
    g = petersen()
    h, mapping = induced_subgraph(g, range(g.n))
    assert h == g and mapping == tuple(range(g.n))


@given(graphs(max_n=8), st.data())
def test_cover_iff_complement_independent(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    rest = set(range(g.n)) - s
    assert is_vertex_cover(g, s) == is_independent(g, rest)


@settings(max_examples=25)
@given(graphs(min_n=6, max_n=8))
def test_induced_independence_exhaustive(g):
    for mask in range(1 << g.n):
        s = [v for v in range(g.n) if mask >> v & 1]
        h, mapping = induced_subgraph(g, s)
        for sub in range(1 << len(s)):
            local = [i for i in range(len(s)) if sub >> i & 1]
            assert is_independent(h, local) == is_independent(g, [mapping[i] for i in local])


@pytest.mark.parametrize("g", [complete(5), cycle(7), complete_bipartite(3, 2), kneser(6, 2),
                               grotzsch(), Graph.from_edges(3, [])])
def test_dimacs_round_trip(g):
    assert parse_dimacs(to_dimacs(g, comment="round trip")) == g


def test_adjacency_text():
    assert to_adjacency_text(cycle(3)) == "0: 1 2\n1: 0 2\n2: 0 1\n"
