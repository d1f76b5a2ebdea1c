"""Parity-graded multiplication tables with an invariant pairing.

The constructor enforces the structural invariants (supercommutativity
with Koszul signs, parity additivity of products, parity blocks and
supersymmetry of the pairing, nondegeneracy, unit axiom).  Invariance of
the pairing against the product, g(a*b, c) = g(a, b*c), is checked by a
dedicated operation so that deliberately perturbed tables remain
constructible and the violation is reported with a witness triple.

The central consequence exercised here: any odd class squares to zero,
and pairing a square-zero odd class against a dual partner manufactures
a nonzero even element with zero square, so the even part of the algebra
cannot be reduced while odd classes exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg

Vector = tuple[Fraction, ...]

EVEN = 0
ODD = 1


class SuperFrobeniusAlgebra:
    """Finite-dimensional supercommutative algebra with an odd/even pairing."""

    __slots__ = ("dim", "parity", "table", "pairing", "unit")

    def __init__(
        self,
        parity: Sequence[int],
        table: Sequence[Sequence[Sequence[Fraction]]],
        pairing: Sequence[Sequence[Fraction]],
        unit: Sequence[Fraction],
    ):
        d = len(parity)
        if d == 0:
            raise ValueError("algebra must have positive dimension")
        if any(p not in (EVEN, ODD) for p in parity):
            raise ValueError("parity entries must be 0 (even) or 1 (odd)")
        self.dim = d
        self.parity = tuple(int(p) for p in parity)
        self.table = tuple(
            tuple(tuple(Fraction(x) for x in entry) for entry in row) for row in table
        )
        self.pairing = tuple(tuple(Fraction(x) for x in row) for row in pairing)
        self.unit = tuple(Fraction(x) for x in unit)
        if len(self.table) != d or any(len(row) != d for row in self.table):
            raise ValueError("table must be dim x dim x dim")
        if any(len(entry) != d for row in self.table for entry in row):
            raise ValueError("table must be dim x dim x dim")
        if len(self.pairing) != d or any(len(row) != d for row in self.pairing):
            raise ValueError("pairing must be dim x dim")
        if len(self.unit) != d:
            raise ValueError("unit vector has wrong length")
        self._validate()

    def _validate(self) -> None:
        d = self.dim
        for a in range(d):
            for b in range(d):
                sign = -1 if self.parity[a] and self.parity[b] else 1
                flipped = tuple(sign * x for x in self.table[b][a])
                if self.table[a][b] != flipped:
                    raise ValueError(f"supercommutativity fails at ({a}, {b})")
                want = (self.parity[a] + self.parity[b]) % 2
                for c in range(d):
                    if self.table[a][b][c] != 0 and self.parity[c] != want:
                        raise ValueError(f"parity additivity fails at ({a}, {b})")
                if self.parity[a] != self.parity[b] and self.pairing[a][b] != 0:
                    raise ValueError(f"pairing mixes parities at ({a}, {b})")
                gsign = -1 if self.parity[a] and self.parity[b] else 1
                if self.pairing[a][b] != gsign * self.pairing[b][a]:
                    raise ValueError(f"pairing supersymmetry fails at ({a}, {b})")
        if linalg.det(self.pairing) == 0:
            raise ValueError("pairing is degenerate")
        for c in range(d):
            if self.parity[c] and self.unit[c] != 0:
                raise ValueError("unit must be even")
        for b in range(d):
            if self.mul(self.unit, self.basis_vector(b)) != self.basis_vector(b):
                raise ValueError(f"unit does not act as identity on basis {b}")

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if k == i else Fraction(0) for k in range(self.dim))

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        d = self.dim
        out = [Fraction(0)] * d
        for a in range(d):
            if u[a] == 0:
                continue
            for b in range(d):
                if v[b] == 0:
                    continue
                coef = u[a] * v[b]
                entry = self.table[a][b]
                for c in range(d):
                    if entry[c]:
                        out[c] += coef * entry[c]
        return tuple(out)

    def pair(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for a in range(self.dim):
            if u[a] == 0:
                continue
            for b in range(self.dim):
                if self.pairing[a][b] and v[b]:
                    total += u[a] * self.pairing[a][b] * v[b]
        return total

    def parity_of(self, v: Sequence[Fraction]) -> Optional[int]:
        """EVEN/ODD for homogeneous vectors, None for mixed or zero."""
        present = {self.parity[i] for i, x in enumerate(v) if x != 0}
        if len(present) == 1:
            return present.pop()
        return None

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == ODD]


@dataclass(frozen=True)
class InvarianceReport:
    ok: bool
    witness: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def frobenius_invariance_check(algebra: SuperFrobeniusAlgebra) -> InvarianceReport:
    """Verify g(a*b, c) = g(a, b*c) over all basis triples."""
    d = algebra.dim
    for a in range(d):
        va = algebra.basis_vector(a)
        for b in range(d):
            vb = algebra.basis_vector(b)
            ab = algebra.mul(va, vb)
            for c in range(d):
                vc = algebra.basis_vector(c)
                left = algebra.pair(ab, vc)
                right = algebra.pair(va, algebra.mul(vb, vc))
                if left != right:
                    return InvarianceReport(False, (a, b, c))
    return InvarianceReport(True)


@dataclass(frozen=True)
class OddNilpotentWitness:
    delta_prime: Vector
    n: Vector


def odd_nilpotent_witness(
    algebra: SuperFrobeniusAlgebra, delta: Sequence[Fraction]
) -> OddNilpotentWitness:
    """From a nonzero odd class, produce a nonzero even element with zero square.

    Verifies delta*delta = 0, solves g(delta, delta') = 1 over the odd
    part, and returns (delta', N = delta*delta') after checking that N is
    even, g(N, unit) = 1, and N*N = 0.
    """
    delta = tuple(Fraction(x) for x in delta)
    if all(x == 0 for x in delta):
        raise ValueError("delta must be nonzero")
    if algebra.parity_of(delta) != ODD:
        raise ValueError("delta must be a nonzero odd element")
    zero = tuple(Fraction(0) for _ in range(algebra.dim))
    if algebra.mul(delta, delta) != zero:
        raise ArithmeticError(
            "odd element with nonzero square: the table violates supercommutativity"
        )
    odd = algebra.odd_indices()
    row = [algebra.pair(delta, algebra.basis_vector(j)) for j in odd]
    pivot = next((k for k, x in enumerate(row) if x != 0), None)
    if pivot is None:
        raise ArithmeticError("pairing is degenerate on the odd part")
    delta_prime = [Fraction(0)] * algebra.dim
    delta_prime[odd[pivot]] = Fraction(1) / row[pivot]
    delta_prime_t = tuple(delta_prime)
    assert algebra.pair(delta, delta_prime_t) == 1
    n = algebra.mul(delta, delta_prime_t)
    if algebra.parity_of(n) != EVEN:
        raise ArithmeticError("delta * delta' is not even; parity bookkeeping broken")
    if algebra.pair(n, algebra.unit) != 1:
        raise ArithmeticError("g(N, unit) != 1; pairing is not invariant for this table")
    if algebra.mul(n, n) != zero:
        raise ArithmeticError("N * N != 0; the table is not associative")
    return OddNilpotentWitness(delta_prime_t, n)


def exterior_two_odd(scale: Fraction | int = 1) -> SuperFrobeniusAlgebra:
    """Exterior algebra on two odd generators with g(1, ab) = g(a, b) = scale.

    Basis order: (1, a, b, ab) with parities (even, odd, odd, even).
    """
    s = Fraction(scale)
    if s == 0:
        raise ValueError("scale must be nonzero")
    d = 4
    zero = [Fraction(0)] * d

    def vec(**entries) -> list[Fraction]:
        out = list(zero)
        for key, value in entries.items():
            out[int(key[1:])] = Fraction(value)
        return out

    table = [[list(zero) for _ in range(d)] for _ in range(d)]
    # 1 * x = x
    for i in range(d):
        table[0][i] = vec(**{f"i{i}": 1})
        table[i][0] = vec(**{f"i{i}": 1})
    table[1][2] = vec(i3=1)
    table[2][1] = vec(i3=-1)
    pairing = [list(zero) for _ in range(d)]
    pairing[0][3] = s
    pairing[3][0] = s
    pairing[1][2] = s
    pairing[2][1] = -s
    unit = vec(i0=1)
    return SuperFrobeniusAlgebra((EVEN, ODD, ODD, EVEN), table, pairing, unit)
