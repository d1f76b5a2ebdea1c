"""Exact rational linear algebra and small univariate helpers.

Everything here works over ``fractions.Fraction``; determinant sign and
zero decisions are exact.  Determinants use fraction-free (Bareiss)
elimination after clearing denominators; kernels and solves use exact
Gauss-Jordan reduction.  Matrices are lists of row lists and are never
mutated in place by the public functions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]
Vector = Sequence[Fraction]


def _copy(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def det(m: Matrix) -> Fraction:
    """Exact determinant via Bareiss elimination on a denominator-cleared copy."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    scale = Fraction(1)
    rows: list[list[int]] = []
    for row in m:
        lcm = 1
        for x in row:
            f = Fraction(x)
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        scale *= lcm
        rows.append([int(Fraction(x) * lcm) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return Fraction(sign * rows[n - 1][n - 1], 1) / scale


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = _copy(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right null space of m (vectors of length ncols)."""
    if not m:
        return []
    ncols = len(m[0])
    a, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Vector) -> list[Fraction] | None:
    """One exact solution of m x = b, or None if the system is inconsistent."""
    nrows = len(m)
    if nrows == 0:
        return []
    ncols = len(m[0])
    aug = [list(row) + [Fraction(b[i])] for i, row in enumerate(m)]
    a, pivots = rref(aug)
    for row in a:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = a[r][-1]
    return x


# ---------------------------------------------------------------------------
# Univariate polynomials over Q, little-endian coefficient lists.
# Used for minimal polynomials of algebra elements: squarefree detection
# and rational-root splitting, nothing heavier.
# ---------------------------------------------------------------------------


def uv_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def uv_degree(p: list[Fraction]) -> int:
    return len(uv_trim(p)) - 1


def uv_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def uv_derivative(p: list[Fraction]) -> list[Fraction]:
    return uv_trim([c * k for k, c in enumerate(p)][1:])


def uv_monic(p: list[Fraction]) -> list[Fraction]:
    p = uv_trim(p)
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def uv_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = uv_trim(list(a))
    b = uv_trim(list(b))
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    while a and len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = uv_trim(a)
    return a


def uv_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = uv_trim(list(a)), uv_trim(list(b))
    while b:
        a, b = b, uv_mod(a, b)
    return uv_monic(a)


def uv_is_squarefree(p: list[Fraction]) -> bool:
    p = uv_trim(p)
    if uv_degree(p) <= 1:
        return True
    return uv_degree(uv_gcd(p, uv_derivative(p))) == 0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def uv_rational_roots(p: list[Fraction]) -> list[Fraction] | None:
    """All roots of p if p splits into linear factors over Q, else None.

    Only rational-root search plus synthetic division; an irreducible
    factor of degree >= 2 makes the whole search return None.
    """
    p = uv_trim(list(p))
    if not p:
        raise ValueError("zero polynomial")
    roots: list[Fraction] = []
    while p[0] == 0 and len(p) > 1:
        roots.append(Fraction(0))
        p = p[1:]
    while uv_degree(p) >= 1:
        lcm = 1
        for c in p:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in p]
        content = 0
        for c in ints:
            content = gcd(content, c)
        if content > 1:
            ints = [c // content for c in ints]
        found = None
        for q in _divisors(ints[-1]):
            for num in _divisors(ints[0]):
                for sign in (1, -1):
                    cand = Fraction(sign * num, q)
                    if uv_eval(p, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division: p = (x - found) * q
        q = [Fraction(0)] * (len(p) - 1)
        acc = Fraction(0)
        for k in range(len(p) - 1, 0, -1):
            acc = p[k] + acc * found
            q[k - 1] = acc
        p = uv_trim(q)
        if not p:
            break
    return roots
