"""Shared random generators for the property suites (all seeded)."""

from __future__ import annotations

import random
from fractions import Fraction

from fmanifolds import Polynomial, VariableSet
from fmanifolds.super_frobenius import SuperFrobeniusAlgebra


def random_poly(
    rng: random.Random,
    vars: VariableSet,
    max_terms: int = 4,
    max_degree: int = 3,
    t_only: bool = False,
    allow_z: bool = False,
) -> Polynomial:
    out = vars.zero()
    top = vars.n - 1 if t_only else (vars.nvars - 1 if allow_z else 2 * vars.n - 1)
    for _ in range(rng.randint(0, max_terms)):
        mono = [0] * vars.nvars
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randint(0, top)] += 1
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        out = out + Polynomial(vars, {tuple(mono): coeff})
    return out


def random_nonzero_poly(rng, vars, **kwargs) -> Polynomial:
    while True:
        p = random_poly(rng, vars, **kwargs)
        if not p.is_zero():
            return p


def random_symmetric_invertible(rng: random.Random, d: int) -> list[list[Fraction]]:
    while True:
        m = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                value = Fraction(rng.randint(-2, 2))
                m[i][j] = value
                m[j][i] = value
            if m[i][i] == 0:
                m[i][i] = Fraction(1)
        from fmanifolds import linalg

        if linalg.det(m) != 0:
            return m


def random_skew_invertible(rng: random.Random, d: int) -> list[list[Fraction]]:
    """Nondegenerate antisymmetric d x d matrix; d must be even."""
    assert d % 2 == 0
    from fmanifolds import linalg

    while True:
        m = [[Fraction(0)] * d for _ in range(d)]
        for k in range(0, d, 2):
            m[k][k + 1] = Fraction(1)
            m[k + 1][k] = Fraction(-1)
        for i in range(d):
            for j in range(i + 1, d):
                bump = Fraction(rng.randint(-1, 1))
                m[i][j] += bump
                m[j][i] -= bump
        if linalg.det(m) != 0:
            return m


def random_super_algebra(rng: random.Random, dim: int) -> SuperFrobeniusAlgebra:
    """Random constructor-valid superalgebra: basis 0 is the (even) unit.

    The table is supercommutative and parity-additive by construction;
    the pairing is block supersymmetric and nondegenerate.  Invariance of
    the pairing is deliberately not arranged; only the structural
    invariants the constructor enforces are guaranteed.
    """
    assert dim >= 2
    parity = [0] + [rng.choice([0, 1]) for _ in range(dim - 1)]
    if sum(parity) % 2 == 1:
        flip = next(i for i in range(dim - 1, 0, -1) if parity[i] == 1)
        parity[flip] = 0

    zero = [Fraction(0)] * dim

    def unit_vec(i):
        v = list(zero)
        v[i] = Fraction(1)
        return v

    table = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        table[0][i] = unit_vec(i)
        table[i][0] = unit_vec(i)
    for a in range(1, dim):
        for b in range(a, dim):
            want = (parity[a] + parity[b]) % 2
            entry = [
                Fraction(rng.randint(-2, 2)) if parity[c] == want else Fraction(0)
                for c in range(dim)
            ]
            if a == b and parity[a] == 1:
                entry = list(zero)
            table[a][b] = entry
            sign = -1 if parity[a] and parity[b] else 1
            table[b][a] = [sign * x for x in entry]

    even_idx = [i for i in range(dim) if parity[i] == 0]
    odd_idx = [i for i in range(dim) if parity[i] == 1]
    even_block = random_symmetric_invertible(rng, len(even_idx))
    odd_block = random_skew_invertible(rng, len(odd_idx)) if odd_idx else []
    pairing = [[Fraction(0)] * dim for _ in range(dim)]
    for i, gi in enumerate(even_idx):
        for j, gj in enumerate(even_idx):
            pairing[gi][gj] = even_block[i][j]
    for i, gi in enumerate(odd_idx):
        for j, gj in enumerate(odd_idx):
            pairing[gi][gj] = odd_block[i][j]
    return SuperFrobeniusAlgebra(parity, table, pairing, unit_vec(0))
