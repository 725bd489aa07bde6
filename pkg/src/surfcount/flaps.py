"""Separations, flaps, the flap number, and the strongly-non-planar test.

A separation is stored canonically as a pair (X, S): the cut set X with
|X| <= 2 and the interior S, a union of connected components of H - X with
a non-empty complement. Whether a side is a flap (its graph plus a clique
on X is planar) and whether two separations are independent both depend
only on (X, S), never on how edges inside X are assigned to sides, so the
canonical form loses nothing. The brute-force oracle in the test suite
re-derives everything from the raw definition and confirms the collapse.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceeded, PreconditionError
from .graph import Graph, add_clique, as_vertex_set, induced_subgraph, is_connected
from .planarity import is_planar

DEFAULT_FLAP_SIZE_CAP = 16


@dataclass(frozen=True, order=True)
class Separation:
    """Canonical (X, S) pair: cut set X, interior S (the A-side private
    vertices). Edge assignment inside X is intentionally not stored."""

    x: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(sorted(self.x)))
        object.__setattr__(self, "s", tuple(sorted(self.s)))

    def serialize(self) -> str:
        return f"X=[{','.join(map(str, self.x))}] S=[{','.join(map(str, self.s))}]"


def validate_separation(h: Graph, sep: Separation) -> None:
    """Raise PreconditionError unless sep satisfies the structural
    invariants: |X| <= 2, S nonempty and disjoint from X, S a union of
    components of H - X, complement nonempty."""
    x = as_vertex_set(sep.x, h.n)
    s = as_vertex_set(sep.s, h.n)
    if len(x) > 2:
        raise PreconditionError(f"cut set {x} larger than 2")
    if not s:
        raise PreconditionError("empty interior")
    if set(x) & set(s):
        raise PreconditionError("cut set and interior overlap")
    if len(x) + len(s) >= h.n:
        raise PreconditionError("separation has empty far side")
    sset = set(s)
    xset = set(x)
    for v in s:
        for w in h.adj[v]:
            if w not in sset and w not in xset:
                raise PreconditionError(
                    f"interior is not a union of components: edge {v}-{w} escapes")


def _side_plus(h: Graph, x: tuple[int, ...], s: tuple[int, ...]) -> Graph:
    """A+ for the side (X, S): the induced graph on X union S with every
    edge inside X added."""
    verts = sorted(set(x) | set(s))
    index = {v: i for i, v in enumerate(verts)}
    return add_clique(induced_subgraph(h, verts), [index[v] for v in x])


def is_flap(h: Graph, sep: Separation) -> bool:
    """True iff the side graph plus a clique on the cut set is planar."""
    validate_separation(h, sep)
    return is_planar(_side_plus(h, sep.x, sep.s))


def has_any_separation(h: Graph) -> bool:
    """Does H admit any separation of order at most 2?"""
    for x in _cut_sets(h):
        if len(_components_without(h, x)) >= 2:
            return True
    return False


def _cut_sets(h: Graph):
    yield ()
    for i in range(h.n):
        yield (i,)
    for pair in combinations(range(h.n), 2):
        yield pair


def _components_without(h: Graph, removed: tuple[int, ...]) -> list[tuple[int, ...]]:
    banned = set(removed)
    seen = set(banned)
    comps = []
    for start in range(h.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = [start]
        while stack:
            v = stack.pop()
            for w in h.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def enumerate_candidate_flaps(h: Graph) -> list[Separation]:
    """All canonical flap candidates: (X, S) with S a single component of
    H - X, non-empty complement, and planar clique-completed side. Ordered
    by X lexicographically (size first), then by S's smallest member."""
    if h.n < 2:
        raise PreconditionError("need at least 2 vertices")
    out: list[Separation] = []
    for x in _cut_sets(h):
        comps = _components_without(h, x)
        if len(comps) < 2:
            continue
        for s in comps:
            if is_planar(_side_plus(h, x, s)):
                out.append(Separation(x, s))
    return out


def _interior_candidates(cands: list[Separation], h: Graph) -> list[tuple[int, int]]:
    """Project candidates to distinct interiors as (vertex mask, blocked
    mask) pairs in first-appearance order. Independence of two flaps
    depends only on their interiors: disjoint, with no edge between."""
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, int]] = []
    for cand in cands:
        if cand.s in seen:
            continue
        seen.add(cand.s)
        smask = 0
        for v in cand.s:
            smask |= 1 << v
        block = smask
        for v in cand.s:
            for w in h.adj[v]:
                block |= 1 << w
        out.append((smask, block))
    return out


def _max_packing(items: list[tuple[int, int]], forced: int | None = None) -> list[int]:
    """Maximum set of mutually compatible items (i compatible with j iff
    mask_i & block_j == 0). Branch and bound in item order with a greedy
    incumbent, so ties resolve to the lexicographically first maximum.
    ``forced`` restricts the search to items compatible with that item and
    includes it."""
    if forced is not None:
        fmask, fblock = items[forced]
        live = [i for i, (m, b) in enumerate(items)
                if i != forced and not (m & fblock) and not (b & fmask)]
        sub = _max_packing_core([items[i] for i in live])
        return [forced] + [live[i] for i in sub]
    return _max_packing_core(items)


def _max_packing_core(items: list[tuple[int, int]]) -> list[int]:
    n = len(items)
    # inclusion-minimal interiors suffice for the value and give a valid
    # packing: any family member with a larger interior can be swapped for
    # a contained one without disturbing the rest
    keep = []
    for i, (mi, _) in enumerate(items):
        if not any(j != i and items[j][0] & ~mi == 0 and
                   (items[j][0] != mi or j < i) for j in range(n)):
            keep.append(i)
    pruned = [items[i] for i in keep]
    k = len(pruned)
    best: list[int] = []
    chosen: list[int] = []

    def rec(i: int, blocked: int) -> None:
        nonlocal best
        if len(chosen) + (k - i) <= len(best):
            return
        if i == k:
            best = chosen.copy()
            return
        mask, block = pruned[i]
        if not (mask & blocked):
            chosen.append(i)
            rec(i + 1, blocked | block)
            chosen.pop()
        rec(i + 1, blocked)

    rec(0, 0)
    return [keep[i] for i in best]


def flap_number(h: Graph, size_cap: int = DEFAULT_FLAP_SIZE_CAP) -> int:
    """The maximum number of pairwise independent flaps; 1 for a planar
    graph with no small separation at all; 0 exactly for the strongly
    non-planar graphs."""
    if h.n == 0:
        raise PreconditionError("flap number needs a non-empty graph")
    if h.n > size_cap:
        raise CapExceeded("size_cap", f"flap_number cap is {size_cap} vertices, got {h.n}")
    if h.n == 1:
        return 1
    cands = enumerate_candidate_flaps(h)
    if not cands:
        if has_any_separation(h):
            # every small separation has both clique-completed sides
            # non-planar, which forces the graph itself non-planar
            assert not is_planar(h)
            return 0
        return 1 if is_planar(h) else 0
    return len(_max_packing(_interior_candidates(cands, h)))


def is_strongly_non_planar(h: Graph) -> bool:
    """Non-planar, and every small separation has both sides non-planar
    after completing the cut set to a clique. Single-component sides decide
    this: every side contains one, and planarity is subgraph-closed."""
    if h.n <= 4 or is_planar(h):
        return False
    return len(enumerate_candidate_flaps(h)) == 0


def are_independent(h: Graph, a: Separation, b: Separation) -> bool:
    """Independence of two separations: disjoint interiors and no edge of
    H joining the interiors (the edge sets of the clique-stripped sides
    are then disjoint)."""
    validate_separation(h, a)
    validate_separation(h, b)
    sa, sb = set(a.s), set(b.s)
    if sa & sb:
        return False
    return not any(w in sb for v in sa for w in h.adj[v])


def _family_context(h: Graph):
    """(candidates, interior items, interior index lookup, flap count,
    valid-first candidate pool). A candidate is a valid first member when
    its interior extends to some maximum independent family; extension
    behavior depends only on the interior."""
    cands = enumerate_candidate_flaps(h)
    items = _interior_candidates(cands, h)
    interior_index: dict[tuple[int, ...], int] = {}
    for cand in cands:
        if cand.s not in interior_index:
            interior_index[cand.s] = len(interior_index)
    k = len(_max_packing(items)) if items else 0
    valid_interiors = {
        s for s, i in interior_index.items()
        if len(_max_packing(items, forced=i)) == k
    }
    pool = [c for c in cands if c.s in valid_interiors]
    return cands, items, interior_index, k, pool


def maximum_flap_family(h: Graph, size_cap: int = DEFAULT_FLAP_SIZE_CAP) -> list[Separation]:
    """A maximum pairwise-independent family of flaps whose first member is
    maximal (by side inclusion, the side being X union S) among candidates
    that extend to some maximum family. Deterministic: ties resolve by
    candidate enumeration order. Empty when the graph has no flap at all
    (possible with flap number 1: planar with no small separation)."""
    if h.n > size_cap:
        raise CapExceeded("size_cap", f"flap family cap is {size_cap} vertices, got {h.n}")
    if h.n < 2:
        return []
    cands, items, interior_index, k, pool = _family_context(h)
    if not cands:
        return []
    sides = [set(c.x) | set(c.s) for c in pool]
    first = None
    for pos, cand in enumerate(pool):
        if not any(q != pos and sides[pos] < sides[q] for q in range(len(pool))):
            first = cand
            break
    assert first is not None
    packing = _max_packing(items, forced=interior_index[first.s])
    by_interior: dict[int, Separation] = {}
    for cand in cands:
        by_interior.setdefault(interior_index[cand.s], cand)
    rest = [by_interior[i] for i in packing if i != interior_index[first.s]]
    return [first] + rest


def flap_reduction(h: Graph, family: list[Separation],
                   size_cap: int = DEFAULT_FLAP_SIZE_CAP) -> Graph:
    """Remove the first flap's interior and complete its cut set to a
    clique. With a maximum independent family whose first member is
    maximal, the result's flap number drops by at least one."""
    if not family:
        raise PreconditionError("empty flap family")
    for sep in family:
        if not is_flap(h, sep):
            raise PreconditionError(f"{sep.serialize()} is not a flap")
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not are_independent(h, family[i], family[j]):
                raise PreconditionError("family not independent")
    k = flap_number(h, size_cap=size_cap)
    if len(family) != k:
        raise PreconditionError(
            f"family of {len(family)} is not maximum (flap number {k})")
    _, _, _, _, pool = _family_context(h)
    first_side = set(family[0].x) | set(family[0].s)
    for cand in pool:
        if first_side < (set(cand.x) | set(cand.s)):
            raise PreconditionError("first member not maximal")
    remaining = sorted(set(range(h.n)) - set(family[0].s))
    index = {v: i for i, v in enumerate(remaining)}
    reduced = induced_subgraph(h, remaining)
    return add_clique(reduced, [index[v] for v in family[0].x])


# ---------------------------------------------------------------------------
# Trees: the low-degree stable-set invariant
# ---------------------------------------------------------------------------


def is_tree(t: Graph) -> bool:
    return t.n >= 1 and t.m == t.n - 1 and is_connected(t)


def forest_mis(t: Graph, allowed: set[int]) -> int:
    """Maximum stable set size in the subforest of t induced by
    ``allowed``, by post-order dynamic programming per component. The
    induced subgraph must be a forest (true whenever t is)."""
    seen: set[int] = set()
    total = 0
    for root in sorted(allowed):
        if root in seen:
            continue
        take: dict[int, int] = {}
        skip: dict[int, int] = {}
        stack = [(root, -1, False)]
        seen.add(root)
        while stack:
            v, parent, done = stack.pop()
            if not done:
                stack.append((v, parent, True))
                for w in t.adj[v]:
                    if w in allowed and w != parent and w not in seen:
                        seen.add(w)
                        stack.append((w, v, False))
            else:
                t_v, s_v = 1, 0
                for w in t.adj[v]:
                    if w in allowed and w != parent and w in take:
                        t_v += skip[w]
                        s_v += max(take[w], skip[w])
                take[v], skip[v] = t_v, s_v
        total += max(take[root], skip[root])
    return total


def tree_beta(t: Graph) -> int:
    """Maximum stable set in the subforest induced by the vertices of
    degree at most 2."""
    if not is_tree(t):
        raise PreconditionError("input is not a tree")
    return forest_mis(t, {v for v in range(t.n) if t.degree(v) <= 2})
