"""A first look at spectral covers.

A multiplication on the tangent sheaf turns every vector field into a
function on the cotangent space: the field sum a_i(t) d/dt_i becomes the
fiberwise-linear polynomial sum a_i(t) y_i.  The cover ideal collects the
relations symbol(e) - 1 and symbol(d_a o d_b) - y_a*y_b; its zero set is
the spectral cover of the multiplication.

This demo walks through the constant semisimple model, where everything
is explicit: the cover is n disjoint sheets and the ideal is generated by
idempotent relations.
"""

import _bootstrap  # noqa: F401

from fmanifolds import (
    VariableSet,
    buchberger,
    fiber_algebra,
    ideal_poisson_stable,
    semisimple_model,
    spectral_cover_ideal,
    spectral_cover_rank_check,
)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"

vars = VariableSet(2)
model = semisimple_model(vars)

print("The constant semisimple model at n = 2:")
for a in range(1, 3):
    for b in range(a, 3):
        print(f"  d{a} o d{b} = {model.basis_product(a, b)}")
print(f"  e = {model.e}")

cover = spectral_cover_ideal(model)
print("\nCover ideal generators:")
for g in cover.generators:
    print(f"  {g}")

gb = buchberger(cover)
print("\nReduced Groebner basis:")
for g in gb.basis:
    print(f"  {g}")

print("\nThe cover is flat of degree n with tangent classes a basis:")
rank = spectral_cover_rank_check(cover, 2, count=3, seed=1)
for point in rank.points:
    print(f"  at {point.point}: dimension {point.dim}")

stability = ideal_poisson_stable(cover)
print(f"\nPoisson stable: {stability.stable}")
print("Stability of the cover ideal is exactly the F-manifold condition.")

algebra = fiber_algebra(model, [0, 0])
print(f"\nFiber algebra at the origin: dimension {algebra.dim},")
print("a product of fields; each coordinate field is an idempotent:")
for i in range(2):
    e_i = algebra.basis_vector(i)
    print(f"  e{i + 1} * e{i + 1} = {fmt(algebra.mul(e_i, e_i))}")
