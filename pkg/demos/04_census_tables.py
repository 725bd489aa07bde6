#!/usr/bin/env python3
"""The extremal clique census of a surface.

Each surface row lists, per clique size s, the maximum number of
s-cliques over all n-vertex graphs embeddable there: constants for s=0
and large s, linear forms in n for s in {2,3,4}. The linear forms come
from the maximum excesses of the surface's irreducible triangulations,
which splitting growth preserves, and the bundled data makes the sphere
row complete out of the box. The projective-plane row becomes complete
after ingesting the second irreducible triangulation (the complete graph
on seven vertices minus a triangle, shipped as a test fixture here).
"""

from pathlib import Path

from surfcount import (
    bounds,
    count_cliques,
    extremal_count,
    parse_embedding,
    projective_k6,
    render_table,
    sphere_irreducible,
    split_growth,
    surface_table,
)

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "data" / "projective_irreducible_7.emb"

print("=== sphere ===")
sphere = surface_table("S0", 0, [sphere_irreducible()], complete=True)
print(render_table(sphere))

print("growth attains the row exactly:")
for n in (5, 10, 20, 30):
    grown = split_growth(sphere_irreducible(), n)
    print(f"  n={n:>2}: triangles {count_cliques(grown.graph, 3)}"
          f" (row says {extremal_count(sphere, 3, n)}),"
          f" K4s {count_cliques(grown.graph, 4)}"
          f" (row says {extremal_count(sphere, 4, n)})")

print("\n=== projective plane ===")
members = [projective_k6(), parse_embedding(FIXTURE.read_text())]
projective = surface_table("N1", 1, members, complete=True)
print(render_table(projective))
partial = surface_table("N1", 1, [projective_k6()], complete=False)
print("with only the bundled K6 the same numbers stand as lower bounds:")
print(render_table(partial))

print("=== explicit bounds in the genus ===")
print("maximum triangle count at genus g on 100 vertices, versus the bounds:")
for g in (1, 4, 9, 25):
    b = bounds(g, 3, 100)
    print(f"  g={g:>2}: lower {b.lower:6.0f}  upper {b.upper:8.0f}")
b = bounds(1, 5)
print(f"K_5 copies at genus 1: between {b.lower:.4f} and {b.upper:.0f}"
      f" (the census pins the truth at 6)")
