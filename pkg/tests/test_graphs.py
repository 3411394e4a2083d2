import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from oneplanar.graphs import (
    CatalogName,
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    complete_multipartite,
    copies,
    cycle,
    disjoint_union,
    edgeless,
    is_subgraph,
    join,
    make_catalog_graph,
    max_degree,
    parse_graph_name,
    path,
    read_graph,
    write_graph,
)


@st.composite
def small_graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_edges_are_normalized_and_sorted():
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)]])
def test_invalid_edges_rejected(bad):
    with pytest.raises(GraphError):
        Graph.from_edges(3, bad)


@pytest.mark.parametrize("edges", [((0, 1), (0, 1)), ((1, 0),), ((1, 2), (0, 1))])
def test_constructor_is_strict(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_from_edges_merges_repeats():
    assert Graph.from_edges(3, [(0, 1), (1, 0)]).edges == ((0, 1),)


def test_basic_families():
    assert path(4).m == 3
    assert cycle(5).m == 5
    assert complete(6).m == 15
    assert complete_bipartite(4, 3).m == 12
    assert complete_multipartite(3, 3, 1).m == 9 + 3 + 3
    assert edgeless(3).m == 0
    assert copies(2, path(2)).edges == ((0, 1), (2, 3))


def test_join_counts():
    g, h = cycle(3), path(3)
    j = join(g, h)
    assert j.n == 6
    assert j.m == g.m + h.m + g.n * h.n
    assert j.has_edge(0, 3) and j.has_edge(3, 4)


def test_disjoint_union_shifts_second():
    u = disjoint_union(cycle(3), path(1))
    assert u.n == 4 and u.edges == ((0, 1), (0, 2), (1, 2))


def test_max_degree():
    assert max_degree(complete_bipartite(1, 4)) == 4
    assert max_degree(edgeless(2)) == 0


@pytest.mark.parametrize(
    "text, expected",
    [
        ("C3uP1", disjoint_union(cycle(3), path(1))),
        ("2P2", copies(2, path(2))),
        ("K4,3", complete_bipartite(4, 3)),
        ("K2,1,1", complete_multipartite(2, 1, 1)),
        ("P4+P3", join(path(4), path(3))),
        ("3P1", edgeless(3)),
        ("C_3 ∪ C_3", copies(2, cycle(3))),
        ("K6", complete(6)),
    ],
)
def test_parse_graph_name(text, expected):
    assert parse_graph_name(text) == expected


@pytest.mark.parametrize("text", ["", "Q3", "P", "K4,a", "C3+"])
def test_parse_graph_name_rejects(text):
    with pytest.raises(GraphError):
        parse_graph_name(text)


def test_catalog():
    assert make_catalog_graph(CatalogName.K_MN, 5, 3) == complete_bipartite(5, 3)
    assert make_catalog_graph("K_{3,3,1}") == complete_multipartite(3, 3, 1)
    assert make_catalog_graph(CatalogName.N_P1, 3) == edgeless(3)
    with pytest.raises(GraphError):
        make_catalog_graph(CatalogName.K_6, 2)
    with pytest.raises(GraphError):
        make_catalog_graph(CatalogName.P_N)


def test_read_write_round_trip():
    g = complete_bipartite(3, 2)
    assert read_graph(write_graph(g)) == g
    text = "# a comment\n3 2\n\n0 1  # first\n1 2\n"
    assert read_graph(text) == path(3)


@pytest.mark.parametrize("text", ["3 2\n0 1\n", "2 1\n1 0\n", "x\n", "2 1\n0 5\n"])
def test_read_graph_rejects(text):
    with pytest.raises(GraphError):
        read_graph(text)


def test_subgraph_examples():
    assert is_subgraph(path(3), cycle(3))
    assert is_subgraph(cycle(4), complete_bipartite(2, 2))
    assert not is_subgraph(cycle(5), complete_multipartite(2, 1, 1))
    assert not is_subgraph(path(5), cycle(4))
    assert is_subgraph(edgeless(4), path(4))


@settings(max_examples=150, deadline=None)
@given(small_graphs(5), small_graphs(6))
def test_subgraph_matches_networkx(g, host):
    expected = g.n <= host.n and GraphMatcher(to_nx(host), to_nx(g)).subgraph_is_monomorphic()
    assert is_subgraph(g, host) == expected


@settings(max_examples=60, deadline=None)
@given(small_graphs(), small_graphs())
def test_join_is_symmetric_up_to_isomorphism(g, h):
    assert nx.is_isomorphic(to_nx(join(g, h)), to_nx(join(h, g)))
