"""Semisimplicity of fiber algebras through the trace form.

In characteristic zero the kernel of the trace form G(a, b) =
tr(multiplication by a*b) is exactly the nilradical, so one exact
determinant decides semisimplicity, and a kernel basis exhibits the
nilpotents.  Orthogonal idempotents are produced whenever a splitting
element with a rational-split squarefree minimal polynomial exists; over
the rationals that can genuinely fail while the factor count stays
available, as Q[x]/(x^2 - 2) shows.
"""

import _bootstrap  # noqa: F401

from fractions import Fraction

from fmanifolds import (
    PointAlgebra,
    VariableSet,
    fiber_algebra,
    is_semisimple,
    linalg,
    nilradical,
    orthogonal_idempotents,
    semisimple_model,
    trace_form,
)


def quadratic(q):
    return PointAlgebra([[[1, 0], [0, 1]], [[0, 1], [q, 0]]], [1, 0])


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


print("Q[x]/(x^2 - q): the trace form is [[2, 0], [0, 2q]], det = 4q")
for q in (Fraction(1), Fraction(2), Fraction(0), Fraction(-1)):
    algebra = quadratic(q)
    det = linalg.det(trace_form(algebra))
    report = orthogonal_idempotents(algebra)
    idems = (
        f"{len(report.idempotents)} explicit idempotents"
        if report.idempotents is not None
        else f"count-only: {report.local_factor_count} factors"
    )
    print(
        f"  q = {q}: det = {det}, semisimple = {is_semisimple(algebra)}, {idems}"
    )

print("\nq = 1 splits rationally:")
for e in orthogonal_idempotents(quadratic(1)).idempotents:
    print(f"  idempotent {fmt(e)}")
print("q = 2 is semisimple but splits only over Q(sqrt(2)),")
print("so the count-only outcome is the correct answer, not a failure.")

print("\nThe constant semisimple model recovers its coordinate idempotents:")
vars = VariableSet(3)
algebra = fiber_algebra(semisimple_model(vars), [0, 0, 0])
for e in orthogonal_idempotents(algebra).idempotents:
    print(f"  {fmt(e)}")

print("\nA local fiber has no idempotents besides the unit:")
from fmanifolds import family2

local = fiber_algebra(family2(vars), [1, 1, 1])
report = orthogonal_idempotents(local)
print(f"  idempotents: {[fmt(e) for e in report.idempotents]}")
print(f"  nilradical dimension: {nilradical(local).dim}")
