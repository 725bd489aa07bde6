"""Simple undirected graphs: the substrate every other module builds on.

Vertices are the integers 0..n-1. Graphs are immutable values; every
operation returns a new graph. Optional per-vertex string labels carry
provenance through re-indexing operations (induced subgraphs,
contractions, constructions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def as_vertex_set(vertices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Normalize an iterable of vertex indices to a sorted duplicate-free tuple.

    Raises PreconditionError on duplicates or (when n is given) out-of-range
    members.
    """
    vs = tuple(sorted(vertices))
    for i in range(1, len(vs)):
        if vs[i] == vs[i - 1]:
            raise PreconditionError(f"duplicate vertex {vs[i]} in vertex set")
    if vs and (vs[0] < 0 or (n is not None and vs[-1] >= n)):
        raise PreconditionError(f"vertex set {vs} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @staticmethod
    def build(n: int, edges: Iterable[Edge], labels: Sequence[str] | None = None) -> "Graph":
        if n < 0:
            raise PreconditionError("vertex count must be non-negative")
        es = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            es.add(_norm_edge(u, v))
        lab = tuple(labels) if labels is not None else None
        if lab is not None and len(lab) != n:
            raise PreconditionError("label count must equal vertex count")
        return Graph(n, frozenset(es), lab)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Parsing and serialization (the canonical external edge-list format)
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v".

    Lines beginning with '#' are ignored. Duplicate edges and self-loops
    are errors, reported with their line number.
    """
    lines = text.splitlines()
    data: list[tuple[int, str]] = [
        (i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not data:
        raise ParseError("empty graph document")
    lineno, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected header 'n m', got {header!r}", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer header {header!r}", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative counts in header", lineno)
    if len(data) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(data) - 1}")
    seen: set[Edge] = set()
    for lineno, ln in data[1:]:
        ps = ln.split()
        if len(ps) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", lineno)
        try:
            u, v = int(ps[0]), int(ps[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {ln!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge ({u},{v})", lineno)
        e = _norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge ({e[0]},{e[1]})", lineno)
        seen.add(e)
    return Graph(n, frozenset(seen))


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph: vertices implicit, edges sorted lexicographically."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertex set, re-indexed in sorted order.

    Labels of the result record the original vertices.
    """
    vs = as_vertex_set(vertices, g.n)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = tuple(g.label_of(v) for v in vs)
    return Graph.build(len(vs), edges, labels)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def contract_edge_simple(g: Graph, e: Edge) -> Graph:
    """Contract edge e, identifying both endpoints into the smaller index.

    Parallel edges merge and the loop disappears, so the result is a simple
    minor of g with one fewer vertex.
    """
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise PreconditionError(f"edge ({u},{v}) not in graph")
    # v is removed; vertices above v shift down by one.
    remap = [w if w < v else w - 1 for w in range(g.n)]
    remap[v] = remap[u]
    edges = set()
    for a, b in g.edges:
        na, nb = remap[a], remap[b]
        if na != nb:
            edges.add(_norm_edge(na, nb))
    labels = None
    if g.labels is not None:
        lab = list(g.labels)
        lab[u] = f"{lab[u]}+{lab[v]}"
        del lab[v]
        labels = lab
    return Graph.build(g.n - 1, edges, labels)


def add_clique(g: Graph, vertices: Iterable[int]) -> Graph:
    """Insert every missing edge inside the given vertex set."""
    vs = as_vertex_set(vertices, g.n)
    edges = set(g.edges)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            edges.add((u, v))
    return Graph(g.n, frozenset(edges), g.labels)


def remove_internal_edges(g: Graph, vertices: Iterable[int]) -> Graph:
    """Delete every edge with both endpoints inside the given vertex set."""
    vs = set(as_vertex_set(vertices, g.n))
    edges = frozenset(e for e in g.edges if not (e[0] in vs and e[1] in vs))
    return Graph(g.n, edges, g.labels)


# ---------------------------------------------------------------------------
# Isomorphism counting
# ---------------------------------------------------------------------------


def _isomorphism_count(h: Graph, g: Graph, collect: list | None = None) -> int:
    """Count edge-and-non-edge-preserving bijections V(h) -> V(g).

    When ``collect`` is given, each bijection is appended to it as a tuple
    ``phi`` with ``phi[i]`` the image of i.
    """
    if h.n != g.n or h.m != g.m:
        return 0
    if sorted(len(a) for a in h.adj) != sorted(len(a) for a in g.adj):
        return 0
    n = h.n
    # Order h's vertices by degree descending, then index, to prune early.
    order = sorted(range(n), key=lambda v: (-h.degree(v), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    image: list[int] = [-1] * n
    used = [False] * n
    count = 0

    def rec(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            if collect is not None:
                collect.append(tuple(image))
            return
        v = order[i]
        dv = h.degree(v)
        for c in range(n):
            if used[c] or g.degree(c) != dv:
                continue
            ok = True
            for w in range(n):
                if pos[w] < i:
                    if h.has_edge(v, w) != g.has_edge(c, image[w]):
                        ok = False
                        break
            if ok:
                image[v] = c
                used[c] = True
                rec(i + 1)
                used[c] = False
                image[v] = -1

    rec(0)
    return count


def count_isomorphisms(h: Graph, g: Graph) -> int:
    """Number of isomorphisms h -> g; count_isomorphisms(h, h) is |Aut(h)|."""
    return _isomorphism_count(h, g)


def automorphisms(h: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of h as image tuples."""
    maps: list[tuple[int, ...]] = []
    _isomorphism_count(h, h, collect=maps)
    return maps


# ---------------------------------------------------------------------------
# Small constructors used throughout tests, demos and constructions
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    labels = None
    if a.labels is not None or b.labels is not None:
        labels = [a.label_of(v) for v in range(a.n)] + [b.label_of(v) for v in range(b.n)]
    return Graph.build(a.n + b.n, edges, labels)
