import random

import pytest

from support import random_connected_graph
from surfcount.errors import PreconditionError
from surfcount.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph
from surfcount.spqrk import (
    REAL,
    VIRTUAL,
    serialize_spqrk,
    spqrk_build,
    spqrk_validate,
)


def kinds(tree):
    return sorted(node.kind for node in tree.nodes)


def test_single_node_cases():
    assert kinds(spqrk_build(cycle_graph(5))) == ["S"]
    assert kinds(spqrk_build(complete_graph(2))) == ["K"]
    assert kinds(spqrk_build(complete_graph(1))) == ["K"]
    assert kinds(spqrk_build(complete_graph(4))) == ["R"]


def test_bowtie_q_node():
    g = Graph.build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    tree = spqrk_build(g)
    assert kinds(tree) == ["Q", "S", "S"]
    q = next(n for n in tree.nodes if n.kind == "Q")
    assert q.vertices == (0,) and q.edges == []
    assert spqrk_validate(tree, g)


def test_diamond_p_node():
    g = Graph.build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    tree = spqrk_build(g)
    assert kinds(tree) == ["P", "S", "S"]
    p = next(n for n in tree.nodes if n.kind == "P")
    flags = sorted(flag for _, _, flag in p.edges)
    assert flags == [REAL, VIRTUAL, VIRTUAL]
    assert spqrk_validate(tree, g)


def test_theta_p_node_no_real():
    theta = Graph.build(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    tree = spqrk_build(theta)
    p = next(n for n in tree.nodes if n.kind == "P")
    assert sorted(flag for _, _, flag in p.edges) == [VIRTUAL] * 3
    assert spqrk_validate(tree, theta)


def test_path_decomposition():
    tree = spqrk_build(path_graph(4))
    assert kinds(tree) == ["K", "K", "K", "Q", "Q"]
    assert spqrk_validate(tree, path_graph(4))


def test_disconnected_rejected():
    with pytest.raises(PreconditionError):
        spqrk_build(disjoint_union(complete_graph(2), complete_graph(2)))


def test_random_build_validate():
    rng = random.Random(90210)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(1, 10),
                                   rng.choice([0.0, 0.15, 0.3, 0.5]))
        tree = spqrk_build(g)
        assert spqrk_validate(tree, g), sorted(g.edges)


def test_validate_detects_tampering():
    g = Graph.build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    tree = spqrk_build(g)
    for node in tree.nodes:
        for j, (u, v, flag) in enumerate(node.edges):
            if flag == REAL:
                node.edges[j] = (u, v, VIRTUAL)
                assert not spqrk_validate(tree, g)
                node.edges[j] = (u, v, flag)
                break
        else:
            continue
        break
    tree = spqrk_build(g)
    tree.nodes[0].edges.append((2, 3, REAL))  # not an edge of g
    assert not spqrk_validate(tree, g)


def test_serialization():
    g = Graph.build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    text = serialize_spqrk(spqrk_build(g))
    lines = text.splitlines()
    assert lines[0].startswith("P {0,1}")
    assert all("[R]" in ln or "[V]" in ln for ln in lines)
    assert lines[1].startswith("  ")  # indented children
