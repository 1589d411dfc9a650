"""
Graph inverse semigroups
========================

Elements are pairs of paths x y^-1.  The bicyclic monoid comes from a single
loop; two loops at one vertex give the polycyclic monoid.
"""

from collections import Counter

from conjcalc.graph_inverse import (ball, element_label, gis_sim_p_key, gis_sim_s_key, multiply, polycyclic,
                                    standard_graphs, vertex_class)

bicyclic = polycyclic(1)
elems = ball(bicyclic, 4, with_zero=False)
print("bicyclic elements with |x|+|y| <= 4:", len(elems))
a, b = elems[3], elems[5]
print(f"({element_label(bicyclic, a)}) * ({element_label(bicyclic, b)}) =",
      element_label(bicyclic, multiply(bicyclic, a, b)))

# the congruence only remembers the exponent difference
by_key = Counter(gis_sim_s_key(bicyclic, x) for x in elems)
print("congruence classes met in the ball:", sorted(k[2] for k in by_key))

# conjugacy classes by rotation of the closed middle path
P2 = polycyclic(2)
keys = Counter(gis_sim_p_key(P2, x) for x in ball(P2, 3))
print("\npolycyclic(2): primary classes in the radius 3 ball:", len(keys))
print("everything lands in one congruence class:", {gis_sim_s_key(P2, x) for x in ball(P2, 3)})

for name, E in standard_graphs().items():
    kinds = [vertex_class(E, v)[0].value for v in range(len(E.vertices))]
    print(f"{name:>12}: vertex classes {kinds}")
