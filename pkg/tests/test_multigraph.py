import json

import pytest
from hypothesis import given, strategies as st

from chipfiring import (
    DisconnectedGraphError,
    FormatError,
    GraphStructureError,
    InvalidVertexError,
    Multigraph,
    graph_to_json,
    graph_to_text,
    parse_graph,
)
from chipfiring.families import (
    cycle_graph,
    path_graph,
    random_connected_multigraph,
    star_graph,
    two_vertex_bundle,
)

K2 = Multigraph(2, [(0, 1, 1)])
C3 = cycle_graph(3)


def test_degree_single_edge():
    assert K2.degree(0) == 1
    assert K2.degree(1) == 1


def test_degree_parallel_bundle():
    g = two_vertex_bundle(4)
    assert g.degree(0) == 4
    assert g.degree(1) == 4


def test_degree_triangle():
    assert all(C3.degree(v) == 2 for v in range(3))


def test_degree_vector():
    assert C3.degree_vector() == (2, 2, 2)
    assert K2.degree_vector() == (1, 1)
    assert star_graph(3).degree_vector() == (3, 1, 1, 1)


def test_degree_vector_sums_to_twice_edges():
    g = star_graph(3)
    assert sum(g.degree_vector()) == 2 * g.edge_count


def test_connectivity():
    assert C3.is_connected()
    assert not Multigraph(2).is_connected()
    assert not Multigraph(3, [(0, 1, 1)]).is_connected()
    assert Multigraph(1).is_connected()


def test_genus():
    assert C3.genus() == 1
    assert path_graph(4).genus() == 0
    assert two_vertex_bundle(4).genus() == 3


def test_genus_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        Multigraph(2).genus()


def test_multiplicity():
    assert K2.multiplicity(0, 1) == 1
    assert K2.multiplicity(0, 0) == 0
    assert two_vertex_bundle(6).multiplicity(0, 1) == 6


def test_out_of_range_vertex():
    with pytest.raises(InvalidVertexError):
        K2.degree(2)
    with pytest.raises(InvalidVertexError):
        K2.multiplicity(0, 5)


def test_self_loop_rejected():
    with pytest.raises(GraphStructureError):
        Multigraph(2, [(0, 0, 1)])


def test_bad_multiplicity_rejected():
    with pytest.raises(GraphStructureError):
        Multigraph(2, [(0, 1, 0)])
    with pytest.raises(GraphStructureError):
        Multigraph(2, [(0, 1, -2)])


def test_repeated_pairs_accumulate():
    g = Multigraph(2, [(0, 1, 1), (1, 0, 2)])
    assert g.multiplicity(0, 1) == 3


def test_equality_and_hash():
    assert Multigraph(2, [(0, 1, 2)]) == Multigraph(2, [(0, 1, 1), (0, 1, 1)])
    assert hash(two_vertex_bundle(2)) == hash(Multigraph(2, [(0, 1, 2)]))


graphs = st.integers(min_value=0, max_value=10_000).map(
    lambda seed: random_connected_multigraph(__import__("random").Random(seed))
)


@given(graphs)
def test_handshake(g):
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count


@given(graphs)
def test_multiplicity_symmetry(g):
    for u in g.vertices():
        for v in g.vertices():
            assert g.multiplicity(u, v) == g.multiplicity(v, u)


@given(graphs)
def test_genus_nonnegative(g):
    assert g.genus() >= 0


@given(graphs)
def test_text_round_trip(g):
    assert parse_graph(graph_to_text(g)) == g


@given(graphs)
def test_json_round_trip(g):
    assert parse_graph(json.dumps(graph_to_json(g))) == g


def test_parse_text_with_comments():
    g = parse_graph("# a triangle\n3\n\n0 1 1\n1 2 1\n0 2 1\n")
    assert g == C3


def test_parse_errors():
    with pytest.raises(FormatError):
        parse_graph("")
    with pytest.raises(FormatError):
        parse_graph("3\n0 1\n")
    with pytest.raises(FormatError):
        parse_graph("2\n0 9 1\n")
    with pytest.raises(FormatError):
        parse_graph('{"n": 2}')
    with pytest.raises(FormatError):
        parse_graph('{"n": 2, "edges": [[0, 0, 1]]}')
