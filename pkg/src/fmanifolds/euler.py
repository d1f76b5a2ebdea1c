"""Euler vector fields built from Hodge bidegrees of a graded basis.

Given a basis of classes with bidegrees (p_a, q_a) and anticanonical
coefficients r_b supported on the (1,1) classes, two weight-one affine
fields are formed in the dual flat coordinates x_a:

    E1 = sum_a (1 - p_a) x_a D_a + sum_{p_b=q_b=1} r_b D_b
    E2 = sum_a (1 - q_a) x_a D_a + sum_{p_b=q_b=1} r_b D_b

They always commute; they are proportional exactly when the grading is
diagonal (every p_a = q_a), provided the basis contains the unit class
of bidegree (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg


@dataclass(frozen=True)
class GradingData:
    """Bihomogeneous basis data: bidegrees plus (1,1)-supported coefficients."""

    bidegrees: tuple[tuple[int, int], ...]
    r: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.bidegrees:
            raise ValueError("grading data needs at least one basis class")
        for p, q in self.bidegrees:
            if p < 0 or q < 0:
                raise ValueError(f"bidegrees must be non-negative, got ({p}, {q})")
        if len(self.r) != len(self.bidegrees):
            raise ValueError("r must assign one coefficient per basis class")
        for (p, q), coeff in zip(self.bidegrees, self.r):
            if coeff != 0 and (p, q) != (1, 1):
                raise ValueError("r may only be supported on (1,1) classes")

    @property
    def dim(self) -> int:
        return len(self.bidegrees)


def grading_data(
    bidegrees: Sequence[tuple[int, int]], r: Sequence | None = None
) -> GradingData:
    degrees = tuple((int(p), int(q)) for p, q in bidegrees)
    if r is None:
        coeffs = tuple(Fraction(0) for _ in degrees)
    else:
        coeffs = tuple(Fraction(v) for v in r)
    return GradingData(degrees, coeffs)


@dataclass(frozen=True)
class EulerField:
    """Affine vector field sum_a (sum_b L_ab x_b + c_a) D_a of a given weight."""

    linear: tuple[tuple[Fraction, ...], ...]
    constant: tuple[Fraction, ...]
    weight: Fraction

    @property
    def dim(self) -> int:
        return len(self.constant)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.linear for x in row) and all(
            x == 0 for x in self.constant
        )

    def __str__(self) -> str:
        pieces = []
        for a in range(self.dim):
            terms = []
            for b in range(self.dim):
                coeff = self.linear[a][b]
                if coeff == 0:
                    continue
                terms.append(f"x{b + 1}" if coeff == 1 else f"{coeff}*x{b + 1}")
            if self.constant[a] != 0:
                terms.append(str(self.constant[a]))
            if terms:
                pieces.append(f"({' + '.join(terms)})*D{a + 1}")
        return " + ".join(pieces) if pieces else "0"


def _diagonal_field(gr: GradingData, use_q: bool) -> EulerField:
    d = gr.dim
    linear = [[Fraction(0)] * d for _ in range(d)]
    for a, (p, q) in enumerate(gr.bidegrees):
        linear[a][a] = Fraction(1 - (q if use_q else p))
    return EulerField(
        tuple(tuple(row) for row in linear), tuple(gr.r), Fraction(1)
    )


def field_commutator(x: EulerField, y: EulerField) -> EulerField:
    """[X, Y] of affine fields X = Ax + a, Y = Bx + b: (BA - AB)x + Ba - Ab."""
    d = x.dim
    if y.dim != d:
        raise ValueError("fields have different dimensions")
    a_mat, b_mat = x.linear, y.linear
    lin = [
        [
            sum(b_mat[i][k] * a_mat[k][j] for k in range(d))
            - sum(a_mat[i][k] * b_mat[k][j] for k in range(d))
            for j in range(d)
        ]
        for i in range(d)
    ]
    const = [
        sum(b_mat[i][k] * x.constant[k] for k in range(d))
        - sum(a_mat[i][k] * y.constant[k] for k in range(d))
        for i in range(d)
    ]
    return EulerField(
        tuple(tuple(row) for row in lin), tuple(const), Fraction(0)
    )


def fields_proportional(x: EulerField, y: EulerField) -> bool:
    """Rank test on the 2 x (d^2 + d) matrix of flattened coefficients."""
    row_x = [c for row in x.linear for c in row] + list(x.constant)
    row_y = [c for row in y.linear for c in row] + list(y.constant)
    return linalg.rank([row_x, row_y]) <= 1


@dataclass(frozen=True)
class EulerFieldsReport:
    e1: EulerField
    e2: EulerField
    commutator: EulerField
    proportional: bool


def euler_fields(gr: GradingData) -> EulerFieldsReport:
    """Build E1 and E2, their commutator, and the proportionality verdict."""
    e1 = _diagonal_field(gr, use_q=False)
    e2 = _diagonal_field(gr, use_q=True)
    return EulerFieldsReport(
        e1=e1,
        e2=e2,
        commutator=field_commutator(e1, e2),
        proportional=fields_proportional(e1, e2),
    )
