import pytest

from surfcount.errors import ParseError, PreconditionError
from surfcount.graph import (
    Graph,
    add_clique,
    automorphisms,
    complete_graph,
    connected_components,
    contract_edge_simple,
    count_isomorphisms,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    parse_graph,
    path_graph,
    remove_internal_edges,
    serialize_graph,
)


def test_parse_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n0 2")
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_parse_k1():
    g = parse_graph("1 0")
    assert g.n == 1 and not g.edges


def test_parse_comments_and_errors():
    g = parse_graph("# a comment\n2 1\n0 1\n")
    assert g.m == 1
    with pytest.raises(ParseError, match="line 2.*self-loop"):
        parse_graph("2 1\n0 0")
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("3 2\n0 1\n1 0")
    with pytest.raises(ParseError, match="out of range"):
        parse_graph("2 1\n0 5")
    with pytest.raises(ParseError, match="non-integer"):
        parse_graph("2 1\nzero one")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1")  # promised 2 edges


def test_serialize_round_trip():
    g = parse_graph("4 3\n2 3\n0 1\n1 3")
    text = serialize_graph(g)
    assert text == "4 3\n0 1\n1 3\n2 3\n"
    assert parse_graph(text).edges == g.edges


def test_induced_subgraph():
    k4 = complete_graph(4)
    tri = induced_subgraph(k4, [0, 1, 2])
    assert tri.n == 3 and tri.m == 3
    empty = induced_subgraph(k4, [])
    assert empty.n == 0
    p4 = path_graph(4)
    g = induced_subgraph(p4, [0, 2, 3])
    assert g.edges == frozenset({(1, 2)})  # re-indexed: 2->1, 3->2
    assert g.labels == ("0", "2", "3")
    assert induced_subgraph(p4, range(4)).edges == p4.edges


def test_induced_subgraph_errors():
    with pytest.raises(PreconditionError):
        induced_subgraph(complete_graph(3), [0, 7])


def test_connected_components():
    assert connected_components(complete_graph(3)) == [(0, 1, 2)]
    g = disjoint_union(complete_graph(1), complete_graph(2))
    assert connected_components(g) == [(0,), (1, 2)]
    p5_minus_mid = induced_subgraph(path_graph(5), [0, 1, 3, 4])
    assert connected_components(p5_minus_mid) == [(0, 1), (2, 3)]


def test_contract_edge():
    k3 = complete_graph(3)
    assert contract_edge_simple(k3, (0, 1)).edges == frozenset({(0, 1)})
    p4 = path_graph(4)
    p3 = contract_edge_simple(p4, (1, 2))
    assert p3.n == 3 and p3.m == 2
    c4 = cycle_graph(4)
    tri = contract_edge_simple(c4, (0, 1))
    assert tri.n == 3 and tri.m == 3
    with pytest.raises(PreconditionError):
        contract_edge_simple(p4, (0, 3))


def test_contract_labels():
    g = Graph.build(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])
    out = contract_edge_simple(g, (0, 1))
    assert out.labels == ("a+b", "c")


def test_add_remove_clique():
    g = Graph.build(2, [])
    assert add_clique(g, [0, 1]).edges == frozenset({(0, 1)})
    k3 = complete_graph(3)
    assert remove_internal_edges(k3, [0, 1]).edges == frozenset({(0, 2), (1, 2)})
    assert add_clique(k3, [0, 1, 2]).edges == k3.edges
    # add then remove leaves the clique edges gone regardless of the start
    g = add_clique(path_graph(4), [0, 3])
    assert remove_internal_edges(g, [0, 3]).edges == path_graph(4).edges


def test_count_isomorphisms():
    assert count_isomorphisms(complete_graph(3), complete_graph(3)) == 6
    assert count_isomorphisms(path_graph(3), complete_graph(3)) == 0
    assert count_isomorphisms(cycle_graph(4), cycle_graph(4)) == 8
    assert count_isomorphisms(path_graph(2), path_graph(3)) == 0
    assert len(automorphisms(path_graph(5))) == 2
