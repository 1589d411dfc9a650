"""
Conjugacy relations on a few small semigroups
=============================================

Builds the 2x2 matrix units, the symmetric group S3 and the full
transformation monoid T(3), and prints how the relations compare.
"""

from conjcalc.corpus import by_name
from conjcalc.groups import symmetric
from conjcalc.relations import containment_matrix, sim_n, sim_o, sim_p, sim_p1, sim_s
from conjcalc.semigroup import matrix_unit_semigroup


def show(S, part):
    return ["{" + ", ".join(str(S.elements[a]) for a in block) + "}" for block in part.classes()]


# matrix units: 0, e11, e12, e21, e22
mu = matrix_unit_semigroup(2)
print("matrix units:", list(mu.elements))
print("  pr ~ rp pairs:", [(mu.elements[a], mu.elements[b]) for a, b in sim_p1(mu) if a < b])
print("  transitive closure:", show(mu, sim_p(mu)))
print("  least commutative congruence:", show(mu, sim_s(mu)))

# in a group every relation collapses to conjugacy, except the congruence,
# which is the coset partition of the commutator subgroup
S3 = symmetric(3).semigroup
print("\nS3 conjugacy classes:", show(S3, sim_p(S3)))
print("S3 commutative quotient classes:", show(S3, sim_s(S3)))
print("natural and other relations equal conjugacy:",
      sim_n(S3) == sim_p1(S3) == sim_o(S3))

# containment on T(3): a 'y' means the row relation sits inside the column relation
T3 = by_name("T(3)").semigroup
report = containment_matrix(T3, 4)
print("\nT(3), order", len(T3))
print("    " + "".join(f"{k:>4}" for k in report.keys))
for a in report.keys:
    marks = ["y" if report.subset.get((a, b)) else "." for b in report.keys]
    print(f"{a:>4}" + "".join(f"{m:>4}" for m in marks))
