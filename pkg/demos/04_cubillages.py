"""Cubillages: building, validating, and reading off their structure.

Run: python3 demos/04_cubillages.py
"""

from zonosep.cubillage import (
    apex_vertices,
    bead_thread_graph,
    cube_vertices,
    gamma_is_acyclic,
    precedence_digraph,
    s_membranes,
    standard_cubillage,
    validate_cubillage,
)
from zonosep.ground import set_notation
from zonosep.systems import s_formula

n, d = 4, 3
q = standard_cubillage(n, d)
print(f"The standard cubillage of Z({n},{d}) tiles the zonotope with")
print(f"C({n},{d}) = {len(q.cubes)} parallelotopes, each named (root | type):")
print()
for cube in q.cubes:
    t, h = apex_vertices(cube)
    verts = cube_vertices(cube, n)
    print(f"  {cube.label():<14} inner front apex {set_notation(t):<8} "
          f"inner rear apex {set_notation(h):<8} {len(verts)} vertices")
print()

report = validate_cubillage(q)
print(f"validator: {'ok' if report.ok else report.problems}")
print(f"vertex system size: {len(q.vertex_set())} = C({n},<= {d}) = {s_formula(n, d - 1)}")
print()

cubes = q.cubes
succs = precedence_digraph(cubes)
print("A cube precedes another when a rear facet of the first is a front")
print("facet of the second; the relation is acyclic and orders the tiling")
print("from the front boundary to the rear:")
for i, out in enumerate(succs):
    if out:
        targets = ", ".join(cubes[j].label() for j in out)
        print(f"  {cubes[i].label()} -> {targets}")
print(f"acyclic on all cubes of [{n}] at d={d}: {gamma_is_acyclic(n, d)}")
print()

threads = bead_thread_graph(q)
print("Apex arcs t_C -> h_C chain into bead threads, one vertex-disjoint")
print("path per front-side inner vertex:")
for i, thread in enumerate(threads.threads):
    print(f"  thread {i}: {' -> '.join(set_notation(v) for v in thread)}")
print()

count = sum(1 for _ in s_membranes(q))
print(f"Ideals of the precedence order are membranes: {count} of them here,")
print("from the front boundary (empty ideal) to the rear (all cubes).")
