"""Exact counting of copies, homomorphisms, and cliques, plus the
homomorphism inequalities and the empirical scaling-exponent fit.

All counts are Python integers (arbitrary precision). The expensive
searches honor a work cap measured in backtracking nodes and abort with a
partial-progress report when it is exceeded. Counting may fan the
top-level branch set out over a thread pool; per-branch counts combine by
addition, so results do not depend on the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import PreconditionError, CapExceeded
from .graph import Graph, automorphisms, connected_components

DEFAULT_WORK_CAP = 10**9


def _search_order(h: Graph) -> list[int]:
    """Vertex order for backtracking: degree-descending seed per component,
    then neighbors-first so every later vertex has a mapped anchor when one
    exists."""
    order: list[int] = []
    placed = [False] * h.n
    for comp in sorted(connected_components(h), key=lambda c: (-len(c), c)):
        seed = max(comp, key=lambda v: (h.degree(v), -v))
        frontier = [seed]
        placed[seed] = True
        order.append(seed)
        while frontier:
            candidates = [
                v for v in comp
                if not placed[v] and any(placed[w] for w in h.adj[v])
            ]
            if not candidates:
                break
            nxt = max(candidates, key=lambda v: (h.degree(v), -v))
            placed[nxt] = True
            order.append(nxt)
            frontier = [nxt]
        for v in comp:  # isolated-in-component leftovers
            if not placed[v]:
                placed[v] = True
                order.append(v)
    return order


class _Budget:
    __slots__ = ("left", "cap")

    def __init__(self, cap: int):
        self.cap = cap
        self.left = cap

    def spend(self, amount: int, partial: int) -> None:
        self.left -= amount
        if self.left < 0:
            raise CapExceeded(
                "work_cap",
                f"counting aborted after {self.cap} backtracking nodes"
                f" (partial count {partial})",
                progress=partial,
            )


def _count_maps(
    h: Graph,
    g: Graph,
    injective: bool,
    work_cap: int,
    leaf_filter=None,
    first_candidates: list[int] | None = None,
) -> int:
    """Core backtracking over adjacency-preserving maps V(h) -> V(g).

    ``leaf_filter(image)`` may veto leaves (used for copy counting).
    ``first_candidates`` restricts the image of the first ordered vertex
    (used to partition work across threads).
    """
    order = _search_order(h)
    pos = [0] * h.n
    for i, v in enumerate(order):
        pos[v] = i
    # earlier-mapped neighbors of each ordered vertex
    anchors: list[list[int]] = []
    for i, v in enumerate(order):
        anchors.append([w for w in h.adj[v] if pos[w] < i])
    image = [-1] * h.n
    used = [False] * g.n
    budget = _Budget(work_cap)
    count = 0
    all_vertices = list(range(g.n))

    def rec(i: int) -> None:
        nonlocal count
        if i == h.n:
            if leaf_filter is None or leaf_filter(image):
                count += 1
            return
        v = order[i]
        anc = anchors[i]
        if anc:
            base = g.adj[image[anc[0]]]
            cands = [c for c in base if all(c in g.adj[image[w]] for w in anc[1:])]
        else:
            cands = first_candidates if (i == 0 and first_candidates is not None) else all_vertices
        budget.spend(len(cands) if cands else 1, count)
        for c in cands:
            if injective and used[c]:
                continue
            image[v] = c
            if injective:
                used[c] = True
            rec(i + 1)
            if injective:
                used[c] = False
            image[v] = -1

    rec(0)
    return count


def _threaded_total(h: Graph, g: Graph, threads: int, one_chunk) -> int:
    chunks: list[list[int]] = [[] for _ in range(threads)]
    for c in range(g.n):
        chunks[c % threads].append(c)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(one_chunk, [ch for ch in chunks if ch]))


def count_injective_hom(h: Graph, g: Graph, work_cap: int = DEFAULT_WORK_CAP,
                        threads: int = 1) -> int:
    """Number of injective adjacency-preserving maps V(h) -> V(g)."""
    if h.n > g.n:
        return 0
    if threads > 1:
        return _threaded_total(
            h, g, threads,
            lambda ch: _count_maps(h, g, True, work_cap, first_candidates=ch))
    return _count_maps(h, g, injective=True, work_cap=work_cap)


def count_hom(h: Graph, g: Graph, work_cap: int = DEFAULT_WORK_CAP,
              threads: int = 1) -> int:
    """Number of adjacency-preserving maps V(h) -> V(g)."""
    if g.n == 0:
        return 1 if h.n == 0 else 0
    if threads > 1:
        return _threaded_total(
            h, g, threads,
            lambda ch: _count_maps(h, g, False, work_cap, first_candidates=ch))
    return _count_maps(h, g, injective=False, work_cap=work_cap)


def count_copies(h: Graph, g: Graph, work_cap: int = DEFAULT_WORK_CAP,
                 threads: int = 1) -> int:
    """Number of subgraphs of g isomorphic to h (vertex-and-edge subsets).

    Counted by enumerating injective embeddings and keeping exactly one
    representative per automorphism orbit (the lexicographically least
    image tuple), so each subgraph is counted once.
    """
    if h.n > g.n:
        return 0
    auts = automorphisms(h)
    nontrivial = [a for a in auts if any(a[i] != i for i in range(h.n))]

    def leaf_filter(image: list[int]) -> bool:
        if not nontrivial:
            return True
        for a in nontrivial:
            for i in range(h.n):
                x, y = image[a[i]], image[i]
                if x != y:
                    if x < y:
                        return False  # a permuted tuple is lexicographically less
                    break
        return True

    if threads > 1:
        return _threaded_total(
            h, g, threads,
            lambda ch: _count_maps(h, g, True, work_cap, leaf_filter, first_candidates=ch))
    return _count_maps(h, g, injective=True, work_cap=work_cap, leaf_filter=leaf_filter)


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-vertex cliques; s=0 counts the empty clique once."""
    if s < 0:
        raise PreconditionError("clique size must be non-negative")
    if s == 0:
        return 1
    if s == 1:
        return g.n
    if s == 2:
        return g.m
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    later = [frozenset(w for w in g.adj[v] if rank[w] > rank[v]) for v in range(g.n)]

    def rec(cands: frozenset[int], chosen: int) -> int:
        if chosen == s:
            return 1
        if len(cands) < s - chosen:
            return 0
        return sum(rec(cands & later[v], chosen + 1) for v in cands)

    return sum(rec(later[v], 1) for v in order)


def total_cliques(g: Graph) -> int:
    """Total number of complete subgraphs, the empty one included."""
    total = 1 + g.n
    s = 2
    while True:
        c = count_cliques(g, s)
        if c == 0:
            return total
        total += c
        s += 1


def max_clique_size(g: Graph) -> int:
    s = 1 if g.n else 0
    while count_cliques(g, s + 1) > 0:
        s += 1
    return s


# ---------------------------------------------------------------------------
# Homomorphism inequalities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityReport:
    lhs: int
    rhs: int
    holds: bool

    def as_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


_K1 = Graph.build(1, [])
_K2 = Graph.build(2, [(0, 1)])
_K3 = Graph.build(3, [(0, 1), (1, 2), (0, 2)])


def check_goodman(g: Graph) -> InequalityReport:
    """Goodman's triangle bound as a homomorphism inequality:
    hom(K1)hom(K3) >= hom(K2)(2 hom(K2) - hom(K1)^2)."""
    h1 = count_hom(_K1, g)
    h2 = count_hom(_K2, g)
    h3 = count_hom(_K3, g)
    lhs = h1 * h3
    rhs = h2 * (2 * h2 - h1 * h1)
    return InequalityReport(lhs, rhs, lhs >= rhs)


@dataclass(frozen=True)
class GenusTriangleReport:
    lhs: int
    rhs: int
    holds: bool
    hom_lhs: int
    hom_rhs: int

    def as_dict(self) -> dict:
        return {
            "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds,
            "hom_lhs": self.hom_lhs, "hom_rhs": self.hom_rhs,
        }


def check_genus_triangle_bound(g: Graph, genus: int) -> GenusTriangleReport:
    """Euler-formula triangle bound for a graph of Euler genus ``genus``:
    triangles >= 2m - 4n + 4 + 4c - 4genus (c = component count).

    The homomorphism form (6x the triangle form, with c=1) is evaluated
    alongside and asserted consistent with a separately computed hom count.
    """
    if genus < 0:
        raise PreconditionError("Euler genus must be non-negative")
    t = count_cliques(g, 3)
    c = len(connected_components(g))
    rhs = 2 * g.m - 4 * g.n + 4 + 4 * c - 4 * genus
    hom3 = count_hom(_K3, g)
    assert hom3 == 6 * t, "triangle count and hom(K3) routes disagree"
    hom_rhs = 6 * count_hom(_K2, g) - 24 * count_hom(_K1, g) + 48 - 24 * genus
    # the hom form is six times the connected (c=1) triangle form
    assert hom_rhs == 6 * (2 * g.m - 4 * g.n + 8 - 4 * genus)
    return GenusTriangleReport(t, rhs, t >= rhs, hom3, hom_rhs)


# ---------------------------------------------------------------------------
# Empirical scaling exponent
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalingReport:
    sizes: tuple[int, ...]
    host_orders: tuple[int, ...]
    counts: tuple[int, ...]
    slope: float

    def as_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "host_orders": list(self.host_orders),
            "counts": [str(c) for c in self.counts],
            "slope": self.slope,
        }


def scaling_exponent(h: Graph, sizes, generator, work_cap: int = DEFAULT_WORK_CAP,
                     threads: int = 1) -> ScalingReport:
    """Least-squares slope of log(copy count) against log(host order).

    ``generator(n)`` must return a host graph with at most n vertices; the
    fit uses the actual host orders since generators may undershoot the
    requested size. Sizes must be strictly increasing with at least three
    points. Zero counts make the log undefined and are reported per size.
    """
    sizes = tuple(sizes)
    if len(sizes) < 3 or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise PreconditionError("need at least 3 strictly increasing sizes")
    hosts = [generator(n) for n in sizes]
    counts = [count_copies(h, host, work_cap=work_cap, threads=threads) for host in hosts]
    zero_at = [n for n, c in zip(sizes, counts) if c == 0]
    if zero_at:
        raise PreconditionError(
            f"zero copy count at sizes {zero_at}: log-log slope undefined")
    xs = [math.log(host.n) for host in hosts]
    ys = [math.log(c) for c in counts]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return ScalingReport(sizes, tuple(host.n for host in hosts), tuple(counts), slope)
