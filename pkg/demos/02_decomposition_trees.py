#!/usr/bin/env python3
"""Decomposition trees with S, P, Q, R and K nodes.

A connected graph decomposes along its cut vertices (Q nodes) and its
2-cutsets with both members of degree at least three (P nodes) into
3-connected pieces (R), cycles (S), and trivial pieces (K). Every input
edge appears as a real edge in exactly one node; the parallel edges a P
node carries, and the copies of split-off edges, are virtual.
"""

from surfcount import Graph, complete_graph, cycle_graph, path_graph, serialize_spqrk, spqrk_build, spqrk_validate

EXAMPLES = {
    "cycle C_6": cycle_graph(6),
    "complete K_4": complete_graph(4),
    "path P_5": path_graph(5),
    "two triangles sharing an edge": Graph.build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    "two triangles sharing a vertex": Graph.build(
        5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]),
    "theta (three parallel paths)": Graph.build(
        5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
    "K_4 with a tail": Graph.build(
        6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]),
}

for name, g in EXAMPLES.items():
    tree = spqrk_build(g)
    assert spqrk_validate(tree, g)
    print(f"=== {name} ===")
    print(serialize_spqrk(tree))
