"""Finite-dimensional commutative algebras at a point.

Semisimplicity and the nilradical are decided through the trace form:
in characteristic zero its kernel is exactly the nilradical, so one
exact linear-algebra step settles both.  Orthogonal idempotents are
produced when a splitting element with a squarefree rational-split
minimal polynomial can be found; otherwise the geometric local-factor
count (dimension minus nilradical dimension) is still reported, and
that count is always correct.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .fstructure import FMultiplication, _fiber_basis_data
from .groebner import DEFAULT_BUDGET, IdealPresentation, normal_form

Vector = tuple[Fraction, ...]


class PointAlgebra:
    """Commutative associative unital algebra over Q via its multiplication table.

    table[a][b] is the coordinate vector of basis_a * basis_b; all three
    defining axioms are checked exhaustively on construction.
    """

    __slots__ = ("dim", "table", "unit")

    def __init__(
        self,
        table: Sequence[Sequence[Sequence[Fraction]]],
        unit: Sequence[Fraction],
    ):
        d = len(table)
        if d == 0:
            raise ValueError("algebra must have positive dimension")
        tbl = tuple(
            tuple(tuple(Fraction(x) for x in entry) for entry in row) for row in table
        )
        if any(len(row) != d for row in tbl) or any(
            len(entry) != d for row in tbl for entry in row
        ):
            raise ValueError("multiplication table must be dim x dim x dim")
        self.dim = d
        self.table = tbl
        self.unit: Vector = tuple(Fraction(x) for x in unit)
        if len(self.unit) != d:
            raise ValueError("unit vector has wrong length")
        self._validate()

    def _validate(self) -> None:
        d = self.dim
        for a in range(d):
            for b in range(a + 1, d):
                if self.table[a][b] != self.table[b][a]:
                    raise ValueError(f"table is not commutative at ({a}, {b})")
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    left = self.mul(self.table[a][b], self.basis_vector(c))
                    right = self.mul(self.basis_vector(a), self.table[b][c])
                    if left != right:
                        raise ValueError(f"table is not associative at ({a}, {b}, {c})")
        for b in range(d):
            if self.mul(self.unit, self.basis_vector(b)) != self.basis_vector(b):
                raise ValueError(f"unit does not act as identity on basis {b}")

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if k == i else Fraction(0) for k in range(self.dim))

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        d = self.dim
        out = [Fraction(0)] * d
        for a in range(d):
            ua = u[a]
            if ua == 0:
                continue
            for b in range(d):
                vb = v[b]
                if vb == 0:
                    continue
                entry = self.table[a][b]
                coef = ua * vb
                for c in range(d):
                    if entry[c]:
                        out[c] += coef * entry[c]
        return tuple(out)

    def power(self, v: Sequence[Fraction], k: int) -> Vector:
        out = self.unit
        base = tuple(v)
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def multiplication_operator(self, v: Sequence[Fraction]) -> list[list[Fraction]]:
        """Matrix of w -> v*w in the basis (columns are images of basis vectors)."""
        cols = [self.mul(v, self.basis_vector(b)) for b in range(self.dim)]
        return [[cols[b][a] for b in range(self.dim)] for a in range(self.dim)]


def trace_form(algebra: PointAlgebra) -> list[list[Fraction]]:
    """Gram matrix G_ab = trace of multiplication by basis_a * basis_b."""
    d = algebra.dim
    basis_traces = []
    for c in range(d):
        op = algebra.multiplication_operator(algebra.basis_vector(c))
        basis_traces.append(sum(op[i][i] for i in range(d)))
    gram = [[Fraction(0)] * d for _ in range(d)]
    for a in range(d):
        for b in range(a, d):
            value = sum(
                algebra.table[a][b][c] * basis_traces[c] for c in range(d)
            )
            gram[a][b] = value
            gram[b][a] = value
    return gram


def is_semisimple(algebra: PointAlgebra) -> bool:
    """Characteristic-zero criterion: nondegenerate trace form."""
    return linalg.det(trace_form(algebra)) != 0


@dataclass(frozen=True)
class NilradicalReport:
    basis: tuple[Vector, ...]
    local_factor_count: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def nilradical(algebra: PointAlgebra) -> NilradicalReport:
    """Kernel of the trace form, verified nilpotent element by element."""
    kernel = linalg.kernel_basis(trace_form(algebra))
    basis = tuple(tuple(v) for v in kernel)
    steps = max(1, (algebra.dim - 1).bit_length() + 1)
    zero = tuple(Fraction(0) for _ in range(algebra.dim))
    for v in basis:
        w = v
        for _ in range(steps):
            if w == zero:
                break
            w = algebra.mul(w, w)
        if w != zero:
            raise ArithmeticError(
                "trace-form kernel contains a non-nilpotent element; "
                "the input table violates the constructor axioms"
            )
    return NilradicalReport(basis, algebra.dim - len(basis))


def nilpotency_profile(algebra: PointAlgebra) -> list[int]:
    """Dimensions [dim N, dim N^2, ...] of nilradical powers until zero."""
    rad = nilradical(algebra)
    profile: list[int] = []
    current = [list(v) for v in rad.basis]
    first = [list(v) for v in rad.basis]
    while current:
        dim = linalg.rank(current)
        if dim == 0:
            break
        profile.append(dim)
        nxt = [list(algebra.mul(u, v)) for u in first for v in current]
        span = [v for v in nxt if any(x != 0 for x in v)]
        if not span:
            break
        # reduce the spanning set to an independent one
        reduced, _ = linalg.rref(span)
        current = [row for row in reduced if any(x != 0 for x in row)]
    return profile


@dataclass(frozen=True)
class IdempotentReport:
    """Either the full orthogonal idempotent list or a count-only outcome."""

    idempotents: Optional[tuple[Vector, ...]]
    local_factor_count: int

    @property
    def count_only(self) -> bool:
        return self.idempotents is None


def _minimal_polynomial(algebra: PointAlgebra, v: Vector) -> list[Fraction]:
    """Monic minimal polynomial of v, little-endian coefficients."""
    rows: list[list[Fraction]] = []
    power = algebra.unit
    while True:
        candidate = rows + [list(power)]
        if linalg.rank(candidate) < len(candidate):
            sol = linalg.solve(
                [[rows[r][c] for r in range(len(rows))] for c in range(algebra.dim)],
                list(power),
            )
            assert sol is not None
            return [-c for c in sol] + [Fraction(1)]
        rows.append(list(power))
        power = algebra.mul(power, v)


def orthogonal_idempotents(
    algebra: PointAlgebra, max_random_trials: int = 20, seed: int = 0
) -> IdempotentReport:
    """Complete orthogonal idempotent decomposition when it exists over Q.

    Searches basis elements and a bounded number of seeded small random
    combinations for a splitting element whose minimal polynomial has
    distinct rational roots, as many as there are local factors.  When no
    such element is found the count-only report is returned; that is a
    successful outcome (the factors may simply not be rational).
    """
    m = nilradical(algebra).local_factor_count
    if m == 1:
        return IdempotentReport((algebra.unit,), 1)

    d = algebra.dim
    rng = random.Random(seed)
    candidates: list[Vector] = [algebra.basis_vector(i) for i in range(d)]
    for _ in range(max_random_trials):
        candidates.append(
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(d))
        )
    for x in candidates:
        p = _minimal_polynomial(algebra, x)
        if linalg.uv_degree(p) != m or not linalg.uv_is_squarefree(p):
            continue
        roots = linalg.uv_rational_roots(p)
        if roots is None or len(set(roots)) != m:
            continue
        idems = []
        for lam in roots:
            e = algebra.unit
            for mu in roots:
                if mu == lam:
                    continue
                shifted = tuple(
                    xi - mu * ui for xi, ui in zip(x, algebra.unit)
                )
                scale = Fraction(1) / (lam - mu)
                e = algebra.mul(e, tuple(c * scale for c in shifted))
            idems.append(e)
        zero = tuple(Fraction(0) for _ in range(d))
        total = zero
        ok = True
        for i, ei in enumerate(idems):
            total = tuple(a + b for a, b in zip(total, ei))
            for j, ej in enumerate(idems):
                prod = algebra.mul(ei, ej)
                expected = ei if i == j else zero
                if prod != expected:
                    ok = False
                    break
            if not ok:
                break
        if ok and total == algebra.unit:
            idems.sort()
            return IdempotentReport(tuple(idems), m)
    return IdempotentReport(None, m)


# ---------------------------------------------------------------------------
# Fiber algebras
# ---------------------------------------------------------------------------


def fiber_algebra(
    source: FMultiplication | IdealPresentation,
    point: Sequence,
    max_pairs: int = DEFAULT_BUDGET,
) -> PointAlgebra:
    """The tangent algebra at a rational point.

    For structure constants this evaluates the table; for a cover ideal
    it builds Q[y]/J(t0) by Groebner reduction and expresses products in
    the basis of tangent-field classes y_1..y_n (a rank error is raised
    when those classes do not form a basis).
    """
    t0 = tuple(Fraction(v) for v in point)
    if isinstance(source, FMultiplication):
        return _fiber_from_multiplication(source, t0)
    if isinstance(source, IdealPresentation):
        return _fiber_from_ideal(source, t0, max_pairs)
    raise TypeError(f"unsupported source {type(source).__name__}")


def _fiber_from_multiplication(m: FMultiplication, t0: Vector) -> PointAlgebra:
    n = m.n
    if len(t0) != n:
        raise ValueError(f"expected a point of length {n}")
    table = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            field = m.basis_product(a, b)
            row.append([c.evaluate_base(t0).constant_value() for c in field.coeffs])
        table.append(row)
    unit = [c.evaluate_base(t0).constant_value() for c in m.e.coeffs]
    return PointAlgebra(table, unit)


def _fiber_from_ideal(
    gens: IdealPresentation, t0: Vector, max_pairs: int
) -> PointAlgebra:
    vars = gens.vars
    n = vars.n
    if len(t0) != n:
        raise ValueError(f"expected a point of length {n}")
    gb, standard = _fiber_basis_data(gens, t0, max_pairs)
    if gb is None or standard is None:
        raise ValueError(f"fiber dimension at {t0} is infinite, expected {n}")
    if len(standard) != n:
        raise ValueError(f"fiber dimension at {t0} is {len(standard)}, expected {n}")
    index = {mono: k for k, mono in enumerate(standard)}

    def coords(p) -> list[Fraction]:
        nf = normal_form(p, gb)
        col = [Fraction(0)] * n
        for mono, c in nf.terms.items():
            if mono not in index:
                raise ValueError("normal form escapes the standard monomial basis")
            col[index[mono]] = c
        return col

    basis_matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        col = coords(vars.y(i))
        for r in range(n):
            basis_matrix[r][i - 1] = col[r]
    if linalg.rank(basis_matrix) != n:
        raise ValueError(f"classes of y1..yn are dependent at {t0}")

    table = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            rhs = coords(vars.y(a) * vars.y(b))
            sol = linalg.solve(basis_matrix, rhs)
            if sol is None:
                raise ValueError("product class escapes the tangent-field classes")
            row.append(sol)
        table.append(row)
    unit_sol = linalg.solve(basis_matrix, coords(vars.one()))
    if unit_sol is None:
        raise ValueError("unit class escapes the tangent-field classes")
    return PointAlgebra(table, unit_sol)
