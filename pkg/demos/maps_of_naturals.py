"""
Maps of the natural numbers that are eventually a shift
=======================================================

Injections are sorted by how many numbers they miss; surjections by how many
points they collapse.  Both counts add under composition.
"""

import random

from conjcalc.natmaps import (EventuallyShiftMap, compose, cycle_census, defect, ncm_invariants, power,
                              random_injection, random_surjection, surj_invariant)

up = EventuallyShiftMap.shift_by(1)
swap = EventuallyShiftMap([1, 0], 0)
down = EventuallyShiftMap([0], -1)

print("shift up misses", defect(up), "number; twice misses", defect(power(up, 2)))
print("swap then shift:", compose(up, swap), "census", cycle_census(compose(up, swap)))
print("down after up is the identity:", compose(down, up) == EventuallyShiftMap.identity())
print("up after down:", compose(up, down))

inv = ncm_invariants(power(down, 2))
print("\ndown twice collapses", sorted(inv.collapsed), "onto", sorted(inv.multi_image),
      "with invariant", surj_invariant(power(down, 2)))

rng = random.Random(1)
for _ in range(3):
    s, t = random_surjection(rng), random_surjection(rng)
    print(f"{surj_invariant(s)} + {surj_invariant(t)} = {surj_invariant(compose(s, t))}")
for _ in range(3):
    s, t = random_injection(rng), random_injection(rng)
    print(f"defects {defect(s)} + {defect(t)} = {defect(compose(s, t))}")
