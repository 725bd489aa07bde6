"""Decomposition trees with S, P, Q, R and K nodes.

The tree decomposes a connected graph along its cut vertices (Q nodes) and
its 2-cutsets whose members have degree at least 3 (P nodes), bottoming
out at 3-connected pieces (R), cycles (S), and single vertices or edges
(K). Node graphs are multigraphs over original vertex indices; each edge
of the input appears as a real edge in exactly one node, and every other
node edge is virtual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapExceeded, PreconditionError
from .graph import Graph, is_connected

REAL = "R"
VIRTUAL = "V"


@dataclass
class SpqrkNode:
    kind: str  # one of S P Q R K
    vertices: tuple[int, ...]  # original indices
    edges: list[tuple[int, int, str]] = field(default_factory=list)  # (u, v, flag)

    def real_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, f in self.edges if f == REAL]


@dataclass
class SpqrkTree:
    nodes: list[SpqrkNode]
    tree_edges: list[tuple[int, int]]  # indices into nodes

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def _is_three_connected(g: Graph) -> bool:
    if g.n < 4:
        return False
    for r in (1, 2):
        for cut in combinations(range(g.n), r):
            banned = set(cut)
            start = next(v for v in range(g.n) if v not in banned)
            stack, seen = [start], {start} | banned
            while stack:
                v = stack.pop()
                for w in g.adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) < g.n:
                return False
    return True


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def _cut_vertices(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        if g.n <= 2:
            break
        banned = {v}
        start = next(u for u in range(g.n) if u != v)
        stack, seen = [start], {start, v}
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) < g.n:
            out.append(v)
    return out


class _Builder:
    """Recursive construction over subgraphs carrying original indices."""

    def __init__(self):
        self.nodes: list[SpqrkNode] = []
        self.links: list[tuple[int, int]] = []

    def add_node(self, node: SpqrkNode) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def build(self, vertices: tuple[int, ...], edges: frozenset[tuple[int, int]]) -> list[int]:
        """Build the subtree for the sub(multi)graph on ``vertices`` with
        ``edges`` (original indices). Returns the indices of the nodes
        created, in creation order."""
        start = len(self.nodes)
        index = {v: i for i, v in enumerate(vertices)}
        local = Graph.build(len(vertices), [(index[u], index[v]) for u, v in edges])

        def orig(e: tuple[int, int]) -> tuple[int, int]:
            u, v = vertices[e[0]], vertices[e[1]]
            return (u, v) if u < v else (v, u)

        if _is_three_connected(local):
            self.add_node(SpqrkNode("R", vertices, [(*orig(e), REAL) for e in sorted(local.edges)]))
        elif _is_cycle(local):
            self.add_node(SpqrkNode("S", vertices, [(*orig(e), REAL) for e in sorted(local.edges)]))
        elif local.n <= 2:
            self.add_node(SpqrkNode("K", vertices, [(*orig(e), REAL) for e in sorted(local.edges)]))
        elif not _cut_vertices(local) and local.n >= 3:
            self._split_two_cut(vertices, local)
        else:
            self._split_cut_vertex(vertices, local)
        return list(range(start, len(self.nodes)))

    # -- 2-connected with a degree-3 cutset: P node -------------------------

    def _split_two_cut(self, vertices: tuple[int, ...], local: Graph) -> None:
        cut = None
        for x, y in combinations(range(local.n), 2):
            if local.degree(x) < 3 or local.degree(y) < 3:
                continue
            banned = {x, y}
            start = next(v for v in range(local.n) if v not in banned)
            stack, seen = [start], {start} | banned
            while stack:
                v = stack.pop()
                for w in local.adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) < local.n:
                cut = (x, y)
                break
        assert cut is not None, "2-connected non-cycle graph must have a degree-3 cutset"
        x, y = cut
        ox, oy = vertices[x], vertices[y]
        if ox > oy:
            ox, oy = oy, ox
        comps = _components_excluding(local, {x, y})
        has_xy = local.has_edge(x, y)
        p_edges: list[tuple[int, int, str]] = [(ox, oy, VIRTUAL) for _ in comps]
        if has_xy:
            p_edges.append((ox, oy, REAL))
        p_index = self.add_node(SpqrkNode("P", (ox, oy), p_edges))
        for comp in comps:
            comp_orig = tuple(sorted(vertices[v] for v in comp) )
            sub_vertices = tuple(sorted(set(comp_orig) | {ox, oy}))
            sub_edges = set()
            comp_set = set(comp_orig)
            for u, v in _orig_edges(local, vertices):
                if (u in comp_set or v in comp_set) and u in sub_vertices and v in sub_vertices:
                    sub_edges.add((u, v) if u < v else (v, u))
            xy_added = (min(ox, oy), max(ox, oy))
            sub_edges.add(xy_added)
            child_nodes = self.build(sub_vertices, frozenset(sub_edges))
            anchor = self._flip_real_to_virtual(child_nodes, xy_added)
            self.links.append((p_index, anchor))

    # -- has a cut vertex: Q node -------------------------------------------

    def _split_cut_vertex(self, vertices: tuple[int, ...], local: Graph) -> None:
        cuts = _cut_vertices(local)
        assert cuts, "connected, not 2-connected graph must have a cut vertex"
        x = cuts[0]
        ox = vertices[x]
        q_index = self.add_node(SpqrkNode("Q", (ox,), []))
        comps = _components_excluding(local, {x})
        for comp in comps:
            comp_orig = set(vertices[v] for v in comp)
            sub_vertices = tuple(sorted(comp_orig | {ox}))
            sub_edges = frozenset(
                (u, v) for u, v in _orig_edges(local, vertices)
                if u in sub_vertices and v in sub_vertices and (u in comp_orig or v in comp_orig)
            )
            child_nodes = self.build(sub_vertices, sub_edges)
            containing = [i for i in child_nodes if ox in self.nodes[i].vertices]
            if len(containing) == 1:
                anchor = containing[0]
            else:
                p_nodes = [i for i in containing if self.nodes[i].kind == "P"]
                assert p_nodes, "multiplied vertex must lie in some P node"
                anchor = p_nodes[0]  # first in construction order
            self.links.append((q_index, anchor))

    def _flip_real_to_virtual(self, node_ids: list[int], edge: tuple[int, int]) -> int:
        """Within the given nodes, find the unique node holding ``edge`` as a
        real edge, flip that occurrence to virtual, and return the node id."""
        hits = []
        for i in node_ids:
            node = self.nodes[i]
            for j, (u, v, flag) in enumerate(node.edges):
                if flag == REAL and (u, v) == edge:
                    hits.append((i, j))
        assert len(hits) == 1, f"edge {edge} should be real in exactly one node, got {len(hits)}"
        i, j = hits[0]
        u, v, _ = self.nodes[i].edges[j]
        self.nodes[i].edges[j] = (u, v, VIRTUAL)
        return i


def _components_excluding(g: Graph, banned: set[int]) -> list[tuple[int, ...]]:
    """Connected components of g - banned, in g's own indexing."""
    seen = set(banned)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        stack, comp = [start], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def _orig_edges(local: Graph, vertices: tuple[int, ...]) -> list[tuple[int, int]]:
    out = []
    for u, v in local.edges:
        a, b = vertices[u], vertices[v]
        out.append((a, b) if a < b else (b, a))
    return out


def spqrk_build(g: Graph) -> SpqrkTree:
    """Build the decomposition tree of a connected graph."""
    if not is_connected(g):
        raise PreconditionError("decomposition tree needs a connected graph")
    builder = _Builder()
    builder.build(tuple(range(g.n)), frozenset(g.edges))
    return SpqrkTree(builder.nodes, builder.links)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _multigraph_is_minor(node: SpqrkNode, g: Graph, work_cap: int = 2_000_000) -> bool:
    """Is the node's multigraph a minor of g, with each node vertex in its
    own branch set? Branch sets grow from their roots over unused vertices;
    distinct node edges need distinct g-edges between the branch sets."""
    roots = list(node.vertices)
    k = len(roots)
    need = [((roots.index(u) if u in roots else -1),
             (roots.index(v) if v in roots else -1)) for u, v, _ in node.edges]
    if any(a < 0 or b < 0 for a, b in need):
        return False
    owner = [-1] * g.n
    for i, r in enumerate(roots):
        owner[r] = i
    budget = [work_cap]

    def edges_matchable(used: set[tuple[int, int]], idx: int) -> bool:
        if idx == len(need):
            return True
        a, b = need[idx]
        for u in range(g.n):
            if owner[u] != a:
                continue
            for w in g.adj[u]:
                if owner[w] != b:
                    continue
                key = (u, w) if u < w else (w, u)
                if key in used:
                    continue
                used.add(key)
                if edges_matchable(used, idx + 1):
                    used.discard(key)
                    return True
                used.discard(key)
        return False

    def branch_connected(i: int) -> bool:
        members = [v for v in range(g.n) if owner[v] == i]
        seen = {members[0]}
        stack = [members[0]]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if owner[w] == i and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(members)

    free = [v for v in range(g.n) if owner[v] == -1]

    def rec(pos: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise CapExceeded("work_cap", "minor check budget exhausted")
        if all(branch_connected(i) for i in range(k)) and edges_matchable(set(), 0):
            return True
        if pos == len(free):
            return False
        v = free[pos]
        for i in range(-1, k):
            owner[v] = i
            if rec(pos + 1):
                return True
        owner[v] = -1
        return False

    return rec(0)


def spqrk_validate(tree: SpqrkTree, g: Graph, check_minors: bool = True) -> bool:
    """Check the three structural invariants against g: the real edges of
    the nodes partition E(g), every real edge is an edge of g, and each
    node graph is a minor of g."""
    seen_real: dict[tuple[int, int], int] = {}
    for node in tree.nodes:
        if node.kind not in "SPQRK":
            return False
        if any(not (0 <= v < g.n) for v in node.vertices):
            return False
        for u, v in node.real_edges():
            e = (u, v) if u < v else (v, u)
            if e not in g.edges:
                return False
            seen_real[e] = seen_real.get(e, 0) + 1
    if set(seen_real) != set(g.edges) or any(c != 1 for c in seen_real.values()):
        return False
    if len(tree.tree_edges) != len(tree.nodes) - 1:
        return False
    adj = tree.adjacency()
    seen = {0} if tree.nodes else set()
    stack = [0] if tree.nodes else []
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != len(tree.nodes):
        return False
    if check_minors:
        for node in tree.nodes:
            if not _multigraph_is_minor(node, g):
                return False
    return True


# ---------------------------------------------------------------------------
# Serialization: indented tree, node kind + vertex set + flagged edges
# ---------------------------------------------------------------------------


def serialize_spqrk(tree: SpqrkTree) -> str:
    if not tree.nodes:
        return ""
    adj = tree.adjacency()
    lines: list[str] = []
    seen = set()

    def emit(i: int, depth: int) -> None:
        seen.add(i)
        node = tree.nodes[i]
        vs = "{" + ",".join(map(str, node.vertices)) + "}"
        es = " ".join(f"{u}-{v}[{flag}]" for u, v, flag in node.edges)
        lines.append("  " * depth + f"{node.kind} {vs}" + (f" {es}" if es else ""))
        for j in sorted(adj[i]):
            if j not in seen:
                emit(j, depth + 1)

    emit(0, 0)
    return "\n".join(lines) + "\n"
