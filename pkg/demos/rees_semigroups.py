"""
Rees matrix semigroups over S3
==============================

Compares the closed-form classifiers with the generic table-based engines,
and looks at what normalizing the sandwich matrix does.
"""

import numpy as np

from conjcalc.groups import derived_subgroup, symmetric
from conjcalc.rees import (classifier_partition, example_rees, rees_construct, rees_normalize, rees_sim_p,
                           rees_sim_s, sandwich_subgroup)
from conjcalc.relations import sim_p, sim_s, sim_s1_bounded

G = symmetric(3)
e, swap, rot = G.identity, G.index("(12)"), G.index("(123)")

# anti-diagonal sandwich matrix: products inside the same row and column vanish
eg = example_rees()
S = eg.export()
print("anti-diagonal example has", len(S), "elements")
a, b = (0, swap, 0), (0, e, 0)
print("(0,(12),0) * (0,e,0) =", eg.label(eg.multiply(a, b)))
print("primary related:", rees_sim_p(eg, a, b))
print("related by rearranging at most 6 factors:", (eg.index(a), eg.index(b)) in sim_s1_bounded(S, 6))
print("least commutative congruence classes:", sim_s(S).num_classes())

# zero-free sandwich: the congruence is the coset partition of the subgroup
# generated by commutators and the entries of a normalized matrix
plain = rees_construct(G, 2, 2, [[rot, e], [e, swap]])
print("\nnormalized?", plain.is_normalized())
iso = rees_normalize(plain)
print("after rescaling:", [[G.elements[x] for x in row] for row in iso.target.sandwich])
print("rescaling is a homomorphism:", iso.verify())
H = sandwich_subgroup(iso.target)
print("commutator subgroup", sorted(G.elements[x] for x in derived_subgroup(G)),
      "grows to", sorted(G.elements[x] for x in H))

fast = classifier_partition(plain, lambda m, x, y: rees_sim_s(m, x, y, normalize=True))
slow = sim_s(plain.export()).to_relation().matrix
print("classifier agrees with the table engine:", np.array_equal(fast, slow))
fast = classifier_partition(plain, rees_sim_p)
print("primary classifier agrees too:", np.array_equal(fast, sim_p(plain.export()).to_relation().matrix))
