"""Embedded graphs as signed rotation systems.

An embedding is a cyclic order of neighbors at every vertex plus a sign
per edge; sign -1 marks an orientation-reversing edge, which is how
non-orientable surfaces arise. Face tracing follows the standard signed
rule: while walking edge (u -> v) with accumulated sign s, cross the edge
(s becomes s * sign(uv)) and continue at v with the rotation successor of
u when the accumulated sign is positive, the predecessor when negative;
the face closes when the starting directed edge recurs with the starting
sign. Tracing all (directed edge, sign) states yields each face twice,
once per traversal direction, and the two orbits are paired off.

Vertex switching (reverse the rotation at v, flip the signs of its edges)
preserves the embedding; the surgery operations switch as needed to make
the edges they touch positive, which keeps the splice rules simple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapExceeded, ParseError, PreconditionError
from .graph import Graph, connected_components, is_connected
from .planarity import is_planar

Edge = tuple[int, int]
State = tuple[int, int, int]  # (from, to, sign before crossing)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class FacialWalk:
    """A closed walk as the cyclic sequence of directed edges it traverses."""

    steps: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.steps)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_multiset(self) -> tuple[Edge, ...]:
        return tuple(sorted(_norm(u, v) for u, v in self.steps))

    def is_triangle(self) -> bool:
        return len(self.steps) == 3 and len(self.vertex_set()) == 3


@dataclass(frozen=True)
class EmbeddedGraph:
    graph: Graph
    rotations: tuple[tuple[int, ...], ...]  # neighbors in cyclic order
    negative_edges: frozenset[Edge] = field(default_factory=frozenset)

    @staticmethod
    def build(graph: Graph, rotations, negative_edges=()) -> "EmbeddedGraph":
        rots = tuple(tuple(r) for r in rotations)
        if len(rots) != graph.n:
            raise PreconditionError("one rotation per vertex required")
        for v, rot in enumerate(rots):
            if sorted(rot) != sorted(graph.adj[v]):
                raise PreconditionError(
                    f"rotation at {v} is not a permutation of its neighbors")
        neg = frozenset(_norm(u, v) for u, v in negative_edges)
        bad = neg - graph.edges
        if bad:
            raise PreconditionError(f"negative signs on non-edges: {sorted(bad)}")
        return EmbeddedGraph(graph, rots, neg)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def sign(self, u: int, v: int) -> int:
        return -1 if _norm(u, v) in self.negative_edges else 1

    @cached_property
    def _rotation_index(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(rot)} for rot in self.rotations)

    def next_state(self, state: State) -> State:
        u, v, sign = state
        sign *= self.sign(u, v)
        rot = self.rotations[v]
        i = self._rotation_index[v][u]
        w = rot[(i + 1) % len(rot)] if sign > 0 else rot[(i - 1) % len(rot)]
        return (v, w, sign)


# ---------------------------------------------------------------------------
# Face tracing and the Euler genus
# ---------------------------------------------------------------------------


def trace_faces(eg: EmbeddedGraph) -> list[FacialWalk]:
    """The complete face set. Deterministic: faces sorted by their least
    traversal state."""
    states: set[State] = set()
    for u, v in eg.graph.edges:
        for s in (1, -1):
            states.add((u, v, s))
            states.add((v, u, s))
    orbits: list[list[State]] = []
    orbit_of: dict[State, int] = {}
    remaining = sorted(states)
    for start in remaining:
        if start in orbit_of:
            continue
        orbit = [start]
        orbit_of[start] = len(orbits)
        cur = eg.next_state(start)
        while cur != start:
            orbit.append(cur)
            orbit_of[cur] = len(orbits)
            cur = eg.next_state(cur)
        orbits.append(orbit)

    def mirror(state: State) -> State:
        u, v, sign = state
        return (v, u, -sign * eg.sign(u, v))

    faces: list[FacialWalk] = []
    claimed = [False] * len(orbits)
    for i, orbit in enumerate(orbits):
        if claimed[i]:
            continue
        j = orbit_of[mirror(orbit[0])]
        assert j != i and not claimed[j] and len(orbits[j]) == len(orbit), \
            "face orbits must pair off by traversal direction"
        claimed[i] = claimed[j] = True
        faces.append(FacialWalk(tuple((u, v) for u, v, _ in orbit)))
    return faces


def euler_genus(eg: EmbeddedGraph) -> int:
    """2 - n + m - f for a connected embedding; always non-negative."""
    if not is_connected(eg.graph):
        raise PreconditionError("Euler genus needs a connected graph")
    f = len(trace_faces(eg)) if eg.m > 0 else 1
    g = 2 - eg.n + eg.m - f
    assert g >= 0, "face tracing produced an impossible face count"
    return g


def is_triangulation(eg: EmbeddedGraph) -> bool:
    """Every facial walk has three distinct vertices and three distinct
    edges."""
    if eg.m == 0:
        return False
    return all(w.is_triangle() for w in trace_faces(eg))


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------


def parse_embedding(text: str) -> EmbeddedGraph:
    """Format: first line "n"; then per vertex one line "v: u1 u2- u3 ..."
    listing the neighbors in rotation order, a '-' suffix marking a
    negative edge. Both endpoints must carry the same sign mark."""
    lines = [
        (i + 1, ln) for i, ln in enumerate(text.splitlines())
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty embedding document")
    lineno, header = lines[0]
    try:
        n = int(header.strip())
    except ValueError:
        raise ParseError(f"expected vertex count, got {header!r}", lineno) from None
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rotation lines, found {len(lines) - 1}")
    rotations: list[tuple[int, ...]] = []
    sign_claims: dict[tuple[int, int], int] = {}
    for expect, (lineno, ln) in enumerate(lines[1:]):
        head, _, rest = ln.partition(":")
        try:
            v = int(head.strip())
        except ValueError:
            raise ParseError(f"expected 'v: ...', got {ln!r}", lineno) from None
        if v != expect:
            raise ParseError(f"rotation lines must be in order; expected {expect}", lineno)
        rot = []
        for tok in rest.split():
            negative = tok.endswith("-")
            body = tok[:-1] if negative else tok
            try:
                u = int(body)
            except ValueError:
                raise ParseError(f"bad neighbor token {tok!r}", lineno) from None
            if u == v:
                raise ParseError(f"self-loop at vertex {v}", lineno)
            if not (0 <= u < n):
                raise ParseError(f"neighbor {u} out of range", lineno)
            if u in rot:
                raise ParseError(f"duplicate neighbor {u} at vertex {v}", lineno)
            rot.append(u)
            sign_claims[(v, u)] = -1 if negative else 1
        rotations.append(tuple(rot))
    edges = set()
    negative = set()
    for (v, u), sgn in sign_claims.items():
        if (u, v) not in sign_claims:
            raise ParseError(f"vertex {u} does not list {v} back")
        if sign_claims[(u, v)] != sgn:
            raise ParseError(f"edge {_norm(u, v)} has conflicting signs at its endpoints")
        edges.add(_norm(u, v))
        if sgn < 0:
            negative.add(_norm(u, v))
    graph = Graph.build(n, edges)
    return EmbeddedGraph.build(graph, rotations, negative)


def serialize_embedding(eg: EmbeddedGraph) -> str:
    out = [str(eg.n)]
    for v in range(eg.n):
        toks = []
        for u in eg.rotations[v]:
            toks.append(f"{u}-" if eg.sign(u, v) < 0 else str(u))
        out.append(f"{v}:" + (" " + " ".join(toks) if toks else ""))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Surgery: switching, contraction of reducible edges, splitting
# ---------------------------------------------------------------------------


def switch_vertex(eg: EmbeddedGraph, v: int) -> EmbeddedGraph:
    """Reverse the rotation at v and flip the signs of its edges; the
    embedding is unchanged up to homeomorphism."""
    rots = list(eg.rotations)
    rots[v] = tuple(reversed(rots[v]))
    neg = set(eg.negative_edges)
    for w in eg.graph.adj[v]:
        e = _norm(v, w)
        if e in neg:
            neg.discard(e)
        else:
            neg.add(e)
    return EmbeddedGraph(eg.graph, tuple(rots), frozenset(neg))


def triangles_containing(g: Graph, u: int, v: int) -> list[int]:
    return sorted(set(g.adj[u]) & set(g.adj[v]))


def reducible_edges(eg: EmbeddedGraph) -> list[Edge]:
    """Edges lying in exactly two triangles of the underlying graph (the
    definitional answer; whether both triangles are facial is checked by
    contract_reducible)."""
    if not is_triangulation(eg):
        raise PreconditionError("reducible edges are defined for triangulations")
    g = eg.graph
    return [e for e in g.sorted_edges() if len(triangles_containing(g, *e)) == 2]


def _rotate_to(seq: tuple[int, ...], first: int) -> list[int]:
    i = seq.index(first)
    return list(seq[i:]) + list(seq[:i])


def contract_reducible(eg: EmbeddedGraph, edge: Edge) -> EmbeddedGraph:
    """Contract a reducible edge vw: delete vw and the two face edges wx,
    wy, splice w's remaining neighbors into v's rotation. The two
    triangles through vw must be the two faces at vw, otherwise the
    operation refuses."""
    v, w = edge
    g = eg.graph
    if not g.has_edge(v, w):
        raise PreconditionError(f"edge ({v},{w}) not in graph")
    thirds = triangles_containing(g, v, w)
    if len(thirds) != 2:
        raise PreconditionError(
            f"edge ({v},{w}) lies in {len(thirds)} triangles, need exactly 2")
    if not is_triangulation(eg):
        raise PreconditionError("contraction is defined for triangulations")
    if eg.sign(v, w) < 0:
        eg = switch_vertex(eg, w)
    rot_w = _rotate_to(eg.rotations[w], v)  # (v, x, ..., y)
    if len(rot_w) < 3:
        raise PreconditionError("degenerate contraction site")
    x, y = rot_w[1], rot_w[-1]
    if x == y or {x, y} != set(thirds):
        raise PreconditionError(
            f"the two faces at ({v},{w}) are not the two triangles through it")
    arc = rot_w[2:-1]  # w's neighbors strictly between x and y
    rot_v = _rotate_to(eg.rotations[v], w)  # (w, y, ..., x) cyclically
    assert rot_v[1] == y and rot_v[-1] == x, "face corners disagree at v"
    rest = rot_v[2:-1]  # v's neighbors strictly between y and x
    # v's new rotation, cyclically (x, arc, y, rest)
    merged = list(arc) + [y] + rest + [x]
    rotations = list(eg.rotations)
    negative = set(eg.negative_edges)
    edges = set(g.edges)
    # drop vw, wx, wy
    for gone in ((v, w), (w, x), (w, y)):
        e = _norm(*gone)
        edges.discard(e)
        negative.discard(e)
    # w's arc edges move to v
    for a in arc:
        old = _norm(w, a)
        e = _norm(v, a)
        edges.discard(old)
        edges.add(e)
        if old in negative:
            negative.discard(old)
            negative.add(e)
        rot_a = list(rotations[a])
        rot_a[rot_a.index(w)] = v
        rotations[a] = tuple(rot_a)
    rotations[v] = tuple(merged)
    for z in (x, y):
        rot_z = list(rotations[z])
        rot_z.remove(w)
        rotations[z] = tuple(rot_z)
    labels = None
    if g.labels is not None:
        labels = list(g.labels)
        labels[v] = f"{labels[v]}+{labels[w]}"
    # remove w and reindex
    remap = [u if u < w else u - 1 for u in range(g.n)]
    new_edges = {(min(remap[a], remap[b]), max(remap[a], remap[b])) for a, b in edges}
    new_neg = {(min(remap[a], remap[b]), max(remap[a], remap[b])) for a, b in negative}
    new_rots = [tuple(remap[u] for u in rotations[z]) for z in range(g.n) if z != w]
    if labels is not None:
        del labels[w]
    new_graph = Graph.build(g.n - 1, new_edges, labels)
    return EmbeddedGraph.build(new_graph, new_rots, new_neg)


def split_path(eg: EmbeddedGraph, x: int, v: int, y: int) -> EmbeddedGraph:
    """Split at v between neighbors x and y: a new vertex w takes over the
    rotation arc of v that runs from x to y (successor direction),
    becoming adjacent to x, that arc, y, and v. Inverse of
    contract_reducible at the same site. The result of splitting a
    triangulation is a triangulation of the same surface."""
    g = eg.graph
    if x == y or not (g.has_edge(x, v) and g.has_edge(y, v)):
        raise PreconditionError(f"({x},{v},{y}) is not a valid split site")
    if eg.sign(x, v) < 0:
        eg = switch_vertex(eg, x)
    if eg.sign(y, v) < 0:
        eg = switch_vertex(eg, y)
    rot_v = _rotate_to(eg.rotations[v], x)  # (x, arc..., y, rest...)
    iy = rot_v.index(y)
    arc = rot_v[1:iy]
    rest = rot_v[iy + 1:]
    w = g.n
    rotations = [list(r) for r in eg.rotations]
    edges = set(g.edges)
    negative = set(eg.negative_edges)
    for a in arc:
        old = _norm(v, a)
        new = _norm(w, a)
        edges.discard(old)
        edges.add(new)
        if old in negative:
            negative.discard(old)
            negative.add(new)
        rot_a = rotations[a]
        rot_a[rot_a.index(v)] = w
    rotations[v] = [x, w, y] + rest
    rot_w = [v, x] + list(arc) + [y]
    # x: w immediately before v (successor of w is v)
    rot_x = rotations[x]
    rot_x.insert(rot_x.index(v), w)
    # y: w immediately after v
    rot_y = rotations[y]
    rot_y.insert(rot_y.index(v) + 1, w)
    rotations.append(rot_w)
    edges.update({_norm(v, w), _norm(x, w), _norm(y, w)})
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [f"{g.labels[v]}'"]
    new_graph = Graph.build(g.n + 1, edges, labels)
    return EmbeddedGraph.build(new_graph, [tuple(r) for r in rotations], negative)


def split_triangle(eg: EmbeddedGraph, face: tuple[int, int, int]) -> EmbeddedGraph:
    """Split a facial triangle: add a new vertex inside the face adjacent
    to its three vertices. Raises unless the triple is a face of the
    embedding."""
    fs = frozenset(face)
    if len(fs) != 3:
        raise PreconditionError("face must have three distinct vertices")
    hit = None
    for walk in trace_faces(eg):
        if walk.is_triangle() and walk.vertex_set() == fs:
            hit = walk
            break
    if hit is None:
        raise PreconditionError(f"{tuple(sorted(fs))} is not a facial triangle")
    # normalize the three face edges to positive signs; a facial walk
    # always has positive total sign, so switches at the face vertices
    # suffice
    a, b, c = hit.vertices
    for _ in range(3):
        changed = False
        for (p, q) in ((a, b), (b, c), (c, a)):
            if eg.sign(p, q) < 0:
                other = next(z for z in (a, b, c) if z not in (p, q))
                if eg.sign(p, other) < 0:
                    eg = switch_vertex(eg, p)
                else:
                    eg = switch_vertex(eg, q)
                changed = True
                break
        if not changed:
            break
    if any(eg.sign(p, q) < 0 for p, q in ((a, b), (b, c), (c, a))):
        raise PreconditionError("could not normalize face signs")
    # find the corner orientation at one vertex: v with successor x -> y
    for (x, v, y) in ((a, b, c), (b, c, a), (c, a, b)):
        rot = eg.rotations[v]
        i = rot.index(x)
        if rot[(i + 1) % len(rot)] == y:
            return split_path(eg, x, v, y)
    # the face may run the other way around
    for (x, v, y) in ((c, b, a), (b, a, c), (a, c, b)):
        rot = eg.rotations[v]
        i = rot.index(x)
        if rot[(i + 1) % len(rot)] == y:
            return split_path(eg, x, v, y)
    raise PreconditionError("no corner of the face is rotation-consecutive")


# ---------------------------------------------------------------------------
# Building an embedding from a triangular face list
# ---------------------------------------------------------------------------


def embedding_from_faces(n: int, faces: list[tuple[int, int, int]]) -> EmbeddedGraph:
    """Reconstruct a signed rotation system whose face set is the given
    list of triangles. Each edge must lie in exactly two faces (counting
    multiplicity) and each vertex link must be a single cycle."""
    edge_faces: dict[Edge, list[int]] = {}
    for i, f in enumerate(faces):
        if len(set(f)) != 3:
            raise PreconditionError(f"face {f} is not a triangle")
        for a, b in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
            edge_faces.setdefault(_norm(a, b), []).append(i)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise PreconditionError(f"edge {e} lies in {len(fs)} faces, need 2")
    graph = Graph.build(n, edge_faces.keys())
    # vertex links: each neighbor's partners around v
    rotations = []
    for v in range(n):
        partners: dict[int, list[int]] = {}
        for f in faces:
            if v in f:
                rest = [u for u in f if u != v]
                partners.setdefault(rest[0], []).append(rest[1])
                partners.setdefault(rest[1], []).append(rest[0])
        nbrs = sorted(graph.adj[v])
        if not nbrs:
            raise PreconditionError(f"vertex {v} is isolated")
        if sorted(partners) != nbrs or any(len(p) != 2 for p in partners.values()):
            raise PreconditionError(f"link of vertex {v} is not a single cycle")
        start = nbrs[0]
        second = min(partners[start])
        cycle = [start, second]
        while True:
            prev, cur = cycle[-2], cycle[-1]
            nxts = [u for u in partners[cur] if u != prev]
            nxt = nxts[0] if nxts else prev  # doubled link edge (degree 2)
            if nxt == cycle[0] and len(cycle) == len(nbrs):
                break
            cycle.append(nxt)
            if len(cycle) > len(nbrs):
                raise PreconditionError(f"link of vertex {v} is not a single cycle")
        if sorted(cycle) != nbrs:
            raise PreconditionError(f"link of vertex {v} is not a single cycle")
        rotations.append(tuple(cycle))
    # derive edge signs from corner orientations: walking a face, the sign
    # of each step edge is the product of the corner senses at its ends
    def corner_sense(v: int, come: int, go: int) -> int:
        rot = rotations[v]
        i = rot.index(come)
        if rot[(i + 1) % len(rot)] == go:
            return 1
        if rot[(i - 1) % len(rot)] == go:
            return -1
        raise PreconditionError(
            f"face corner at {v} ({come}->{go}) not rotation-consecutive")

    signs: dict[Edge, int] = {}
    for f in faces:
        walk = list(f)
        eps = []
        for t in range(3):
            come = walk[(t - 1) % 3]
            v = walk[t]
            go = walk[(t + 1) % 3]
            eps.append(corner_sense(v, come, go))
        for t in range(3):
            e = _norm(walk[t], walk[(t + 1) % 3])
            lam = eps[t] * eps[(t + 1) % 3]
            if signs.setdefault(e, lam) != lam:
                raise PreconditionError(f"inconsistent sign derivation at edge {e}")
    negative = {e for e, s in signs.items() if s < 0}
    eg = EmbeddedGraph.build(graph, rotations, negative)
    want = sorted(tuple(sorted(f)) for f in faces)
    got = sorted(tuple(sorted(w.vertex_set())) for w in trace_faces(eg))
    if want != got:
        raise PreconditionError("face reconstruction failed to reproduce the face list")
    return eg


# ---------------------------------------------------------------------------
# Minimum-genus search over signed rotation systems (small graphs)
# ---------------------------------------------------------------------------

MIN_GENUS_VERTEX_CAP = 8
MIN_GENUS_EDGE_CAP = 18
DEFAULT_EMBEDDING_TRIES = 5_000_000


def _spanning_tree_edges(g: Graph) -> set[Edge]:
    seen = {0} if g.n else set()
    tree: set[Edge] = set()
    stack = [0] if g.n else []
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                tree.add(_norm(v, w))
                stack.append(w)
    return tree


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def min_genus_search(g: Graph, cap: int = MIN_GENUS_VERTEX_CAP,
                     tries: int = DEFAULT_EMBEDDING_TRIES) -> tuple[int, EmbeddedGraph]:
    """Minimum Euler genus over all signed rotation systems, with one
    witness embedding. Backtracks over rotations and cotree edge signs
    (spanning-tree edges can be fixed positive up to switching), pruning
    with the Euler-formula face-count target; the candidate genus starts
    at the edge-count lower bound and the search stops at the first hit.

    Hard caps: 8 vertices, 18 edges. ``tries`` caps the number of
    embeddings traced."""
    if g.n > cap or g.n > MIN_GENUS_VERTEX_CAP:
        raise CapExceeded("size_cap", f"min_genus_search vertex cap is {MIN_GENUS_VERTEX_CAP}")
    if g.m > MIN_GENUS_EDGE_CAP:
        raise CapExceeded("size_cap", f"min_genus_search edge cap is {MIN_GENUS_EDGE_CAP}")
    comps = connected_components(g)
    if len(comps) > 1:
        # Euler genus is additive over components
        total = 0
        rotations: list[tuple[int, ...]] = [()] * g.n
        negatives: set[Edge] = set()
        for comp in comps:
            index = {v: i for i, v in enumerate(comp)}
            sub = Graph.build(len(comp), [(index[u], index[v]) for u, v in g.edges
                                          if u in index and v in index])
            genus, emb = min_genus_search(sub, cap=cap, tries=tries)
            total += genus
            for i, v in enumerate(comp):
                rotations[v] = tuple(comp[u] for u in emb.rotations[i])
            negatives.update(_norm(comp[u], comp[v]) for u, v in emb.negative_edges)
        return total, EmbeddedGraph.build(g, rotations, negatives)

    if g.n == 0:
        raise PreconditionError("empty graph has no embedding")
    if g.m == 0:
        return 0, EmbeddedGraph.build(g, [()] * g.n, ())
    lower = 0
    if g.n >= 3:
        bound = 2 if _is_bipartite(g) else 3
        lower = max(0, math.ceil(g.m / bound - g.n + 2))
    if lower == 0 and not is_planar(g):
        lower = 1
    tree = _spanning_tree_edges(g)
    cotree = [e for e in g.sorted_edges() if e not in tree]
    budget = [tries]
    genus = lower
    while True:
        target_f = 2 - genus - g.n + g.m
        if target_f >= 1:
            witness = _search_embedding(g, cotree, target_f, budget)
            if witness is not None:
                return genus, witness
        genus += 1
        if genus > 2 * g.m + 2:
            raise PreconditionError("no embedding found; impossible for a connected graph")


def _search_embedding(g: Graph, cotree: list[Edge], target_f: int,
                      budget: list[int]) -> EmbeddedGraph | None:
    """Enumerate rotation systems (first vertex's rotation fixed up to
    reflection) and cotree sign patterns by increasing number of negative
    edges; return the first embedding with the target face count."""
    from itertools import combinations, permutations

    rot_choices: list[list[tuple[int, ...]]] = []
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        if len(nbrs) <= 2:
            rot_choices.append([tuple(nbrs)])
        else:
            first = nbrs[0]
            perms = [
                (first,) + p
                for p in permutations(nbrs[1:])
            ]
            if v == 0:
                # drop mirror images: fix the orientation at the first vertex
                perms = [p for p in perms if p[1] < p[-1]]
            rot_choices.append(perms)

    sign_patterns: list[frozenset[Edge]] = []
    for k in range(len(cotree) + 1):
        for combo in combinations(cotree, k):
            sign_patterns.append(frozenset(combo))

    def rec(v: int, rots: list[tuple[int, ...]]) -> EmbeddedGraph | None:
        if v == g.n:
            for neg in sign_patterns:
                budget[0] -= 1
                if budget[0] < 0:
                    raise CapExceeded(
                        "work_cap", "embedding search budget exhausted; raise tries")
                eg = EmbeddedGraph(g, tuple(rots), neg)
                if len(trace_faces(eg)) == target_f:
                    return eg
            return None
        for rot in rot_choices[v]:
            rots.append(rot)
            hit = rec(v + 1, rots)
            if hit is not None:
                return hit
            rots.pop()
        return None

    return rec(0, [])
