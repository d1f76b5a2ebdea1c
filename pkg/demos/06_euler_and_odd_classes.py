"""Euler fields from gradings, and why odd classes force nilpotents.

Two stories in one demo.

First: from a bihomogeneous basis with bidegrees (p_a, q_a), two affine
Euler fields E1 and E2 are built.  They always commute; they are
proportional exactly when the grading is diagonal.  A grading with an
off-diagonal class therefore carries two commuting non-proportional
Euler fields, which is impossible for a generically semisimple algebra.

Second: any nonzero odd class D squares to zero by supercommutativity.
Pairing it against a dual partner D' gives an even element N = D o D'
with g(N, e) = 1, so N is nonzero, yet N o N = 0.  A nonzero square-zero
even element means the even part is not reduced: odd cohomology rules
out generic semisimplicity directly.
"""

import _bootstrap  # noqa: F401

from fmanifolds import (
    euler_fields,
    exterior_two_odd,
    frobenius_invariance_check,
    grading_data,
    odd_nilpotent_witness,
)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"

print("Diagonal grading (a surface-like basis, all p = q):")
gr = grading_data([(0, 0), (1, 1), (1, 1), (2, 2)], [0, 3, 1, 0])
report = euler_fields(gr)
print(f"  E1 = {report.e1}")
print(f"  E2 = {report.e2}")
print(f"  [E1, E2] = {report.commutator}")
print(f"  proportional: {report.proportional}")

print("\nGrading with a (2, 0) class:")
gr = grading_data([(0, 0), (1, 1), (2, 0), (0, 2)], [0, 2, 0, 0])
report = euler_fields(gr)
print(f"  E1 = {report.e1}")
print(f"  E2 = {report.e2}")
print(f"  [E1, E2] = {report.commutator}")
print(f"  proportional: {report.proportional}")
print("  Two commuting, non-proportional weight-one Euler fields.")

print("\nThe odd-class obstruction on the exterior algebra of two odd")
print("generators (basis 1, a, b, ab; pairing g(1, ab) = g(a, b) = 1):")
algebra = exterior_two_odd()
print(f"  pairing invariance: {frobenius_invariance_check(algebra).ok}")
witness = odd_nilpotent_witness(algebra, (0, 1, 0, 0))
print(f"  D  = a (odd), D' = {fmt(witness.delta_prime)}")
print(f"  N  = D o D' = {fmt(witness.n)}")
print(f"  g(N, e) = {algebra.pair(witness.n, algebra.unit)}")
print(f"  N o N = {fmt(algebra.mul(witness.n, witness.n))}")
print("  N is a nonzero even nilpotent: the even part cannot be reduced.")
