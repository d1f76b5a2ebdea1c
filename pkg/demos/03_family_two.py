"""The chain family: a stability computation worth automating.

For n >= 3 the ideal

    J = (y1 - 1, (y2 - rho)^2, (y2 - rho) y3, y3^(n-1),
         y4 - y3^2, ..., yn - y3^(n-2)),
    rho = t3 y1 + sum_{k=3}^{n-1} (k-1) t_{k+1} y_k,

is Poisson stable; checking that by hand means expanding a page of
brackets, so the engine does it here for n = 3, 4, 5.  The radical is
again unstable, with the bracket {y2 - t3 y1, y3} = y1 as the witness.
"""

import _bootstrap  # noqa: F401

from fmanifolds import (
    VariableSet,
    family2,
    family2_radical,
    fiber_algebra,
    ideal_poisson_stable,
    nilpotency_profile,
    sample_points,
    verify_radical_presentation,
)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"

for n in (3, 4, 5):
    vars = VariableSet(n)
    J = family2(vars)
    R = family2_radical(vars)
    print(f"n = {n}: {len(J.generators)} generators")
    for g in J.generators:
        print(f"  {g}")
    stability = ideal_poisson_stable(J)
    print(f"  J Poisson stable: {stability.stable}")
    print(f"  stated radical verified: {verify_radical_presentation(J, R)}")
    radical_result = ideal_poisson_stable(R)
    print(
        f"  radical stable: {radical_result.stable}; "
        f"witness {radical_result.witness.describe(R)}"
    )
    point = sample_points(vars, 1, seed=2)[0]
    algebra = fiber_algebra(J, point)
    print(
        f"  tangent algebra at {fmt(point)}: dim {algebra.dim}, "
        f"nilpotency profile {nilpotency_profile(algebra)}"
    )
    print()

print("The nilpotency profiles match the chain pattern: one square-zero")
print("generator and one generator whose powers survive to order n - 2.")
