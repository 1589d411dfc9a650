"""
Traces on integer semigroup rings
=================================

The span of all ab - ba is stored in Hermite normal form; two elements have
the same universal trace when their difference lies in it.
"""

from conjcalc.relations import sim_p
from conjcalc.semigroup import matrix_unit_semigroup
from conjcalc.trace import RingBasis, check_tr_prim, commutator_lattice, smith_invariants, trace_partition

for n in (2, 3):
    S = matrix_unit_semigroup(n)
    lattice = commutator_lattice(S)
    print(f"{n}x{n} matrix units: ring dimension {RingBasis.of(S).dim}, commutator rank {lattice.rank}")
    for row in lattice.basis:
        print("   ", row)
    classes = [[S.elements[a] for a in block] for block in trace_partition(S).classes()]
    print("  trace classes:", classes)
    print("  same as primary classes:", trace_partition(S) == sim_p(S), check_tr_prim(S).ok)

try:
    print("Smith invariants for n = 2:", smith_invariants(commutator_lattice(matrix_unit_semigroup(2))))
except ImportError:
    print("sympy not installed; skipping Smith invariants")
