"""The square-zero family: stable ideal, unstable radical.

J = (y1 - 1, (y_i - rho_i)(y_j - rho_j)) for 2 <= i <= j <= n, with
t-polynomial shifts rho_i independent of t1.  The ideal is always closed
under the Poisson bracket, but its radical

    sqrt(J) = (y1 - 1, y2 - rho_2, ..., yn - rho_n)

is not whenever some d_i rho_j != d_j rho_i.  The reduced spectral cover
of an F-manifold therefore need not be coisotropic, which is the
surprise this family exists to exhibit.
"""

import _bootstrap  # noqa: F401

from fmanifolds import (
    VariableSet,
    buchberger,
    fiber_algebra,
    family1,
    family1_radical,
    ideal_contains,
    ideal_poisson_stable,
    is_f_manifold,
    multiplication_from_ideal,
    nilpotency_profile,
    nilradical,
    radical_contains,
)

vars = VariableSet(3)
rho = [vars.one(), vars.t(3), vars.zero()]
J = family1(vars, rho)
R = family1_radical(vars, rho)

print("Generators of J (n = 3, rho2 = t3, rho3 = 0):")
for g in J.generators:
    print(f"  {g}")

print(f"\nJ is Poisson stable: {ideal_poisson_stable(J).stable}")

print("\nEach y_i - rho_i lies in sqrt(J) but not in J:")
gb = buchberger(J)
for i in (2, 3):
    gen = vars.y(i) - rho[i - 1]
    print(
        f"  {gen}: in radical {radical_contains(gen, J)}, "
        f"in ideal {ideal_contains(gen, gb)}"
    )

result = ideal_poisson_stable(R)
print(f"\nsqrt(J) is Poisson stable: {result.stable}")
print(f"witness: {result.witness.describe(R)}")
print("The bracket of two radical generators is a nonzero constant,")
print("so no power of it can fall into the proper ideal sqrt(J).")

m = multiplication_from_ideal(J, 3, check_rank=False)
print("\nStructure constants reconstructed from J:")
for a in range(2, 4):
    for b in range(a, 4):
        print(f"  d{a} o d{b} = {m.basis_product(a, b)}")
print(f"F-manifold by both routes: {is_f_manifold(m, 'both').is_f}")

algebra = fiber_algebra(J, [1, 2, 3])
print(
    f"\nTangent algebra at (1, 2, 3): dimension {algebra.dim}, "
    f"nilradical dimension {nilradical(algebra).dim}, "
    f"nilpotency profile {nilpotency_profile(algebra)}"
)
print("All products of nilradical elements vanish: the maximal ideal squares to zero.")
