"""Even dimension: middle sections, double combs, and center-avoiding membranes.

Run: python3 demos/07_even_dimension.py
"""

from zonosep.cubillage import apex_vertices, standard_cubillage
from zonosep.ground import set_notation
from zonosep.membranes import (
    double_comb_scan,
    e_membranes,
    enlarged_fragmentation,
    is_e_membrane,
    membrane_vertices,
    property_P_scan,
    w_membranes,
)
from zonosep.systems import s_formula

n, d = 4, 4
q = standard_cubillage(n, d)
print(f"In even dimension the membrane count theorem fails: Z({n},{d})")
print("has membranes of different vertex-system sizes.")
sizes = sorted(len(membrane_vertices(m)) for m in w_membranes(q))
print(f"  sizes: {sizes}")
print()

big = next(m for m in w_membranes(q) if len(membrane_vertices(m)) == max(sizes))
combs = double_comb_scan(membrane_vertices(big), d - 2)
print("The oversized membrane passes through both middle slabs of a cube")
print("and so picks up a double comb:")
for a, b in combs:
    print(f"  comb pair {set_notation(a)}, {set_notation(b)}")
cube = q.cubes[0]
t, h = apex_vertices(cube)
print(f"  (the apexes of {cube.label()} are {set_notation(t)} and {set_notation(h)})")
print()

enlarged = enlarged_fragmentation(q)
centers = [delta for delta in enlarged if delta.is_center]
print("Merging each cube's two middle slabs into a center fragment removes")
print(f"exactly those paths: {len(enlarged)} enlarged fragments, "
      f"{len(centers)} centers.")
members = e_membranes(q)
print(f"Center-avoiding membranes: {len(members)}, all of them middle-free:")
for m in members:
    verts = membrane_vertices(m)
    print(f"  size {len(verts)}, center-avoiding {is_e_membrane(q, m)}")
print()

print("Scanning them for double combs and separation on ground sets 4")
print("and 5:")
for nn in (4, 5):
    report = property_P_scan(standard_cubillage(nn, 4))
    print(f"  Z({nn},4): {report.membrane_count} membranes, sizes "
          f"{sorted(report.sizes_seen)} (closed form {s_formula(nn, 2)}), "
          f"comb-free {report.comb_free}")
