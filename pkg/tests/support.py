"""Shared test helpers: independent brute-force oracles and random generators.

Everything here is deliberately written from the definitions, without
reusing the production shortcuts, so tests cross-check two routes.
"""

from __future__ import annotations

import itertools
import random

from surfcount.graph import Graph, add_clique, induced_subgraph
from surfcount.planarity import is_planar


# ---------------------------------------------------------------------------
# Random generators (always seeded by the caller)
# ---------------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.build(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree from a random Pruefer sequence."""
    if n <= 1:
        return Graph.build(n, [])
    if n == 2:
        return Graph.build(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.build(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_p: float) -> Graph:
    tree = random_tree(rng, n)
    edges = set(tree.edges)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < extra_p:
                edges.add((i, j))
    return Graph.build(n, edges)


# ---------------------------------------------------------------------------
# Brute-force minor detection and the planarity oracle
# ---------------------------------------------------------------------------


def _connected_mask(adj_masks: list[int], mask: int) -> bool:
    lowest = mask & -mask
    seen = lowest
    frontier = lowest
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            nxt |= adj_masks[v] & mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff h is a minor of g. Exhaustive over partitions of vertex
    subsets of g into |V(h)| unlabeled connected parts, then all bijections
    parts -> V(h). Use only for small graphs (say n <= 8)."""
    if h.n > g.n or h.m > g.m:
        return False
    adj_masks = [0] * g.n
    for u, v in g.edges:
        adj_masks[u] |= 1 << v
        adj_masks[v] |= 1 << u
    k = h.n
    h_adj = [set(h.adj[v]) for v in range(h.n)]

    def contact_contains_h(masks: list[int]) -> bool:
        contact = [[False] * k for _ in range(k)]
        for a in range(k):
            for b in range(a + 1, k):
                touch = False
                m = masks[a]
                while m and not touch:
                    bit = m & -m
                    m ^= bit
                    v = bit.bit_length() - 1
                    if adj_masks[v] & masks[b]:
                        touch = True
                contact[a][b] = contact[b][a] = touch
        # bijection parts -> V(h) preserving h's edges
        image = [-1] * k  # image[part] = h-vertex
        used = [False] * k

        def assign(part: int) -> bool:
            if part == k:
                return True
            for hv in range(k):
                if used[hv]:
                    continue
                ok = True
                for earlier in range(part):
                    if image[earlier] in h_adj[hv] and not contact[part][earlier]:
                        ok = False
                        break
                if ok:
                    image[part] = hv
                    used[hv] = True
                    if assign(part + 1):
                        return True
                    used[hv] = False
                    image[part] = -1
            return False

        return assign(0)

    assignment = [-1] * g.n

    def rec(v: int, started: int) -> bool:
        if started + (g.n - v) < k:
            return False  # not enough vertices left to start all parts
        if v == g.n:
            if started < k:
                return False
            masks = [0] * k
            for vv, b in enumerate(assignment):
                if b >= 0:
                    masks[b] |= 1 << vv
            if any(not _connected_mask(adj_masks, bm) for bm in masks):
                return False
            return contact_contains_h(masks)
        # canonical: part indices appear in order of first use
        for b in range(-1, min(started + 1, k)):
            assignment[v] = b
            if rec(v + 1, started + (1 if b == started else 0)):
                return True
        assignment[v] = -1
        return False

    return rec(0, 0)


_K5 = Graph.build(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
_K33 = Graph.build(6, [(i, j) for i in range(3) for j in range(3, 6)])


def planar_oracle(g: Graph) -> bool:
    """Planarity by Kuratowski/Wagner minor search. Small graphs only."""
    if g.n <= 4:
        return True
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return not (has_minor(g, _K5) or has_minor(g, _K33))


# ---------------------------------------------------------------------------
# Literal separation / flap oracle, straight from the definitions
# ---------------------------------------------------------------------------


def _subsets_le2(n: int):
    yield ()
    for i in range(n):
        yield (i,)
    for i in range(n):
        for j in range(i + 1, n):
            yield (i, j)


def _components_without(g: Graph, removed: tuple[int, ...]) -> list[frozenset[int]]:
    removed_set = set(removed)
    seen = set(removed_set)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        comp = {s}
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.add(w)
        comps.append(frozenset(comp))
    return comps


def literal_flap_interiors(g: Graph) -> tuple[bool, set[frozenset[int]]]:
    """(some separation exists, set of interiors S that are flap sides for
    some cut set X), enumerating unions of components and every X of size
    at most 2 as in the raw definition."""
    any_separation = False
    interiors: set[frozenset[int]] = set()
    for x in _subsets_le2(g.n):
        comps = _components_without(g, x)
        if len(comps) < 2:
            continue
        any_separation = True
        for r in range(1, len(comps)):
            for chosen in itertools.combinations(comps, r):
                s = frozenset().union(*chosen)
                if s in interiors:
                    continue
                verts = sorted(s | set(x))
                index = {v: i for i, v in enumerate(verts)}
                side = add_clique(induced_subgraph(g, verts), [index[v] for v in x])
                if is_planar(side):
                    interiors.add(s)
    return any_separation, interiors


def literal_flap_number(g: Graph) -> int:
    """Flap number straight from the definition: maximum pairwise independent
    family of flaps, over separations with arbitrary component unions."""
    any_sep, interiors = literal_flap_interiors(g)
    if not any_sep:
        return 1 if is_planar(g) else 0
    if not interiors:
        return 0
    # pairwise independence depends only on interiors: disjoint and no edge
    # between them. Max packing by DP over vertex masks.
    cands = []
    for s in interiors:
        smask = 0
        for v in s:
            smask |= 1 << v
        block = smask
        for v in s:
            for w in g.adj[v]:
                block |= 1 << w
        cands.append((smask, block))
    by_vertex: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for smask, block in cands:
        low = (smask & -smask).bit_length() - 1
        by_vertex[low].append((smask, block))

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = (mask & -mask).bit_length() - 1
        result = best(mask & (mask - 1))  # low vertex not a lowest member
        for smask, block in by_vertex[low]:
            if smask & ~mask:
                continue
            result = max(result, 1 + best(mask & ~block))
        return result

    full = (1 << g.n) - 1
    return best(full)


def literal_strongly_non_planar(g: Graph) -> bool:
    if is_planar(g):
        return False
    _, interiors = literal_flap_interiors(g)
    return not interiors
