"""Seeded corpus of multiplications for the two-route equivalence suite.

Naive perturbation of individual structure constants almost always
destroys associativity, so the randomized instances are drawn from two
associativity-preserving shapes instead:

* dimension 2, e = d1, d2 o d2 = f(t) d1 + g(t) d2: every choice of
  polynomials f, g yields a commutative associative unital algebra; it
  satisfies the structure identity exactly when f and g are independent
  of t1.

* dimension 3, the square-zero shape d_i o d_j = rho_j d_i + rho_i d_j
  - rho_i rho_j d1 (i, j >= 2) with arbitrary t-polynomial shifts rho:
  always a valid algebra; an F-manifold exactly when the shifts do not
  depend on t1.

Mixing in the constant semisimple models and the two built-in families
gives a corpus with guaranteed positives and negatives at both
dimensions, all of it deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .fstructure import (
    FMultiplication,
    VectorField,
    family1,
    family2,
    multiplication_from_ideal,
    semisimple_model,
)
from .poly import Polynomial, VariableSet


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    multiplication: FMultiplication
    expected_f: bool | None = None  # None when only route agreement is asserted


def random_t_poly(
    rng: random.Random,
    vars: VariableSet,
    max_degree: int = 2,
    max_terms: int = 2,
    allow_t1: bool = True,
) -> Polynomial:
    """Sparse random polynomial in the t-variables with small coefficients."""
    n = vars.n
    out = vars.zero()
    for _ in range(rng.randint(0, max_terms)):
        mono = [0] * vars.nvars
        for _ in range(rng.randint(0, max_degree)):
            lo = 0 if allow_t1 else 1
            mono[rng.randint(lo, n - 1)] += 1
        coeff = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 1, 2]))
        out = out + Polynomial(vars, {tuple(mono): coeff})
    return out


def dim2_multiplication(vars: VariableSet, f: Polynomial, g: Polynomial) -> FMultiplication:
    """e = d1, d2 o d2 = f d1 + g d2 (always commutative, associative, unital)."""
    if vars.n != 2:
        raise ValueError("dim2_multiplication needs a 2-dimensional variable set")
    d1 = VectorField.basis(vars, 1)
    d2 = VectorField.basis(vars, 2)
    table = [
        [d1, d2],
        [d2, VectorField(vars, [f, g])],
    ]
    return FMultiplication(vars, table, d1)


def square_zero_multiplication(
    vars: VariableSet, shifts: list[Polynomial]
) -> FMultiplication:
    """d_i o d_j = rho_j d_i + rho_i d_j - rho_i rho_j d1 for i, j >= 2, e = d1.

    shifts lists rho_2..rho_n; with u_i = d_i - rho_i d1 the products
    u_i o u_j vanish, so the algebra axioms hold for every choice.
    """
    n = vars.n
    if len(shifts) != n - 1:
        raise ValueError(f"expected {n - 1} shifts, got {len(shifts)}")
    rho = [vars.one()] + list(shifts)
    table = [[VectorField.zero(vars) for _ in range(n)] for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == 1:
                field = VectorField.basis(vars, b)
            elif b == 1:
                field = VectorField.basis(vars, a)
            else:
                coeffs = [vars.zero()] * n
                coeffs[a - 1] = coeffs[a - 1] + rho[b - 1]
                coeffs[b - 1] = coeffs[b - 1] + rho[a - 1]
                coeffs[0] = coeffs[0] - rho[a - 1] * rho[b - 1]
                field = VectorField(vars, coeffs)
            table[a - 1][b - 1] = field
    return FMultiplication(vars, table, VectorField.basis(vars, 1))


def build_corpus(seed: int = 0, random_dim2: int = 26, random_dim3: int = 18) -> list[CorpusEntry]:
    """Deterministic corpus of valid multiplications at dimensions 2 and 3."""
    rng = random.Random(seed)
    entries: list[CorpusEntry] = []

    v2 = VariableSet(2)
    v3 = VariableSet(3)

    entries.append(CorpusEntry("semisimple-n2", semisimple_model(v2), True))
    entries.append(CorpusEntry("semisimple-n3", semisimple_model(v3), True))
    # generically semisimple dimension-2 model: y2^2 = t2
    entries.append(
        CorpusEntry("dim2-t2-model", dim2_multiplication(v2, v2.t(2), v2.zero()), True)
    )
    # t1-dependence breaks the identity even though the algebra is fine
    entries.append(
        CorpusEntry("dim2-t1-model", dim2_multiplication(v2, v2.t(1), v2.zero()), False)
    )

    fam1 = multiplication_from_ideal(
        family1(v3, [v3.one(), v3.t(3), v3.zero()]), 3
    )
    entries.append(CorpusEntry("family1-n3", fam1, True))
    fam1_const = multiplication_from_ideal(
        family1(v3, [v3.one(), v3.const(2), v3.t(2) * v3.t(3)]), 3
    )
    entries.append(CorpusEntry("family1-n3-alt", fam1_const, True))
    fam2 = multiplication_from_ideal(family2(v3), 3)
    entries.append(CorpusEntry("family2-n3", fam2, True))

    for k in range(random_dim2):
        allow_t1 = k % 2 == 0
        f = random_t_poly(rng, v2, allow_t1=allow_t1)
        g = random_t_poly(rng, v2, allow_t1=allow_t1)
        if allow_t1 and f.diff_t(1).is_zero() and g.diff_t(1).is_zero():
            # force a genuine negative: inject a t1-linear term
            f = f + v2.t(1)
        expected = None if allow_t1 else True
        if allow_t1:
            expected = f.diff_t(1).is_zero() and g.diff_t(1).is_zero()
        entries.append(
            CorpusEntry(f"dim2-random-{k}", dim2_multiplication(v2, f, g), expected)
        )

    for k in range(random_dim3):
        allow_t1 = k % 2 == 0
        shifts = [
            random_t_poly(rng, v3, allow_t1=allow_t1),
            random_t_poly(rng, v3, allow_t1=allow_t1),
        ]
        if allow_t1 and all(s.diff_t(1).is_zero() for s in shifts):
            shifts[0] = shifts[0] + v3.t(1)
        expected = all(s.diff_t(1).is_zero() for s in shifts)
        entries.append(
            CorpusEntry(
                f"dim3-random-{k}", square_zero_multiplication(v3, shifts), expected
            )
        )

    return entries
