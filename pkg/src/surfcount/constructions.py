"""Extremal generators: flap pasting, tree blowups, and split growth.

These produce host graphs realizing the lower-bound copy counts: pasting
replicates flap sides at their cut sets, the tree blowup replicates a
maximum low-degree stable set, and split growth extends a triangulation
vertex by vertex while preserving its clique-count excesses.
"""

from __future__ import annotations

from .embedding import EmbeddedGraph, is_triangulation, split_triangle, trace_faces
from .errors import PreconditionError
from .flaps import flap_number, forest_mis, is_tree, maximum_flap_family, tree_beta
from .graph import Graph, induced_subgraph, is_connected
from .planarity import is_planar


def lower_bound_graph(h: Graph, n: int) -> Graph:
    """A graph on at most n vertices with at least q^k copies of h, where
    q = floor(n/|V(h)| - 1) and k is h's flap number.

    Built by pasting q fresh copies of each flap side of a maximum
    independent family at its cut set (adding the cut edge for
    2-separations and removing that flap's original interior). When h has
    flap number 1 but no flap at all (planar with no small separation),
    floor(n/|V(h)|) disjoint copies of h serve instead."""
    if not is_connected(h):
        raise PreconditionError("pasting construction needs a connected graph")
    if n < 4 * h.n:
        raise PreconditionError(f"need n >= 4|V(H)| = {4 * h.n}")
    k = flap_number(h)
    if k == 0:
        raise PreconditionError("strongly non-planar: no flap to paste")
    family = maximum_flap_family(h)
    q = n // h.n - 1
    if not family:
        # planar, no small separation: disjoint copies
        copies = n // h.n
        edges = []
        labels = []
        for c in range(copies):
            base = c * h.n
            edges.extend((base + u, base + v) for u, v in h.edges)
            labels.extend(f"{h.label_of(v)}#{c}" for v in range(h.n))
        return Graph.build(copies * h.n, edges, labels)
    edges = set(h.edges)
    labels = [h.label_of(v) for v in range(h.n)]
    deleted: set[int] = set()
    for sep in family:
        if len(sep.x) == 2:
            # drop the original interior, keep the cut edge
            deleted.update(sep.s)
            edges.add((min(sep.x), max(sep.x)))
    next_vertex = h.n
    for i, sep in enumerate(family):
        side = sorted(set(sep.x) | set(sep.s))
        side_graph = induced_subgraph(h, side)
        place = {v: j for j, v in enumerate(side)}
        if len(sep.x) == 2:
            a, b = place[sep.x[0]], place[sep.x[1]]
            e = (min(a, b), max(a, b))
            side_edges = set(side_graph.edges) | {e}
        else:
            side_edges = set(side_graph.edges)
        for copy in range(q):
            fresh = {}
            for v in side:
                if v in sep.x:
                    fresh[place[v]] = v
                else:
                    fresh[place[v]] = next_vertex
                    labels.append(f"{h.label_of(v)}~{i}.{copy}")
                    next_vertex += 1
            for a, b in side_edges:
                u, v = fresh[a], fresh[b]
                if u != v:
                    edges.add((min(u, v), max(u, v)))
    # remove deleted interiors and compact indices
    keep = [v for v in range(next_vertex) if v not in deleted]
    index = {v: i for i, v in enumerate(keep)}
    out_edges = [(index[u], index[v]) for u, v in edges
                 if u not in deleted and v not in deleted]
    out_labels = [labels[v] for v in keep]
    return Graph.build(len(keep), out_edges, out_labels)


def _maximum_low_degree_stable_set(t: Graph) -> list[int]:
    """Lexicographically-least maximum stable set among the vertices of
    degree at most 2: greedily keep each vertex whose inclusion still
    extends to the full stable-set size."""
    target = tree_beta(t)
    low = [v for v in range(t.n) if t.degree(v) <= 2]
    allowed = set(low)
    chosen: list[int] = []
    removed: set[int] = set()
    for v in low:
        if v in removed:
            continue
        trial = allowed - removed - {v} - set(t.adj[v])
        if len(chosen) + 1 + forest_mis(t, trial) == target:
            chosen.append(v)
            removed |= {v} | set(t.adj[v])
    assert len(chosen) == target
    return chosen


def tree_blowup(t: Graph, n: int) -> Graph:
    """Replace each member of a maximum stable set of low-degree vertices
    by floor((n - |V(T)|)/beta) twins sharing its neighborhood. The result
    is planar with at most n vertices and at least (floor term)^beta
    copies of the tree."""
    if not is_tree(t):
        raise PreconditionError("blowup needs a tree")
    if n < 2 * t.n:
        raise PreconditionError(f"need n >= 2|V(T)| = {2 * t.n}")
    beta = tree_beta(t)
    stable = _maximum_low_degree_stable_set(t)
    q = (n - t.n) // beta
    kept = [v for v in range(t.n) if v not in stable]
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in t.edges
             if u in index and v in index]
    labels = [t.label_of(v) for v in kept]
    nxt = len(kept)
    for v in stable:
        for copy in range(q):
            for w in t.adj[v]:
                edges.append((index[w], nxt))
            labels.append(f"{t.label_of(v)}.{copy}")
            nxt += 1
    out = Graph.build(nxt, edges, labels)
    assert is_planar(out)
    return out


def split_growth(seed: EmbeddedGraph, n: int) -> EmbeddedGraph:
    """Grow a triangulation to exactly n vertices by repeatedly splitting
    the first facial triangle (faces ordered by sorted vertex triple).
    Adds 3 triangles and 1 K4 per step, so both excesses are preserved."""
    if not is_triangulation(seed):
        raise PreconditionError("growth needs a triangulation seed")
    if n < seed.n:
        raise PreconditionError(f"target {n} below seed order {seed.n}")
    eg = seed
    while eg.n < n:
        face = min(tuple(sorted(w.vertex_set())) for w in trace_faces(eg))
        eg = split_triangle(eg, face)
    return eg
