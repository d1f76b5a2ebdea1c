"""Multiplications on the tangent sheaf and the two F-manifold tests.

A multiplication is given by structure constants C_ab^c in Q[t] with
d_a o d_b = sum_c C_ab^c d_c and a designated identity field e.  Two
independent decision procedures are provided:

* the identity route evaluates the nine-term expansion of the structure
  identity on all basis quadruples (the expression is a tensor, so basis
  quadruples suffice) together with the identity-field compatibility
  [e, X o Y] = X o [e, Y] + [e, X] o Y;

* the spectral route forms the cover ideal generated by symbol(e) - 1
  and symbol(d_a o d_b) - y_a*y_b and asks whether it is closed under
  the canonical Poisson bracket.

The two verdicts must agree for every commutative associative unital
multiplication; a disagreement is an internal error, never a result.
Both example families of cover ideals with Poisson-stable J but
unstable radical are provided as constructors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .groebner import (
    DEFAULT_BUDGET,
    IdealPresentation,
    buchberger,
    degrevlex,
    ideal_contains,
    normal_form,
    y_block,
)
from .poisson import StabilityResult, ideal_poisson_stable
from .poly import Monomial, Polynomial, VariableSet


class ReconstructionError(ValueError):
    """The ideal is not presented so that tangent-field classes are a basis."""


class VectorField:
    """Polynomial vector field sum_i a_i(t) d/dt_i; coefficients free of y, z."""

    __slots__ = ("vars", "coeffs")

    def __init__(self, vars: VariableSet, coeffs: Sequence[Polynomial]):
        if len(coeffs) != vars.n:
            raise ValueError(f"expected {vars.n} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.vars != vars:
                raise ValueError("coefficient belongs to a different variable set")
            if c.uses_y() or c.uses_z():
                raise ValueError("vector-field coefficients must involve only t-variables")
        self.vars = vars
        self.coeffs: tuple[Polynomial, ...] = tuple(coeffs)

    @classmethod
    def zero(cls, vars: VariableSet) -> "VectorField":
        return cls(vars, [vars.zero()] * vars.n)

    @classmethod
    def basis(cls, vars: VariableSet, i: int) -> "VectorField":
        """The coordinate field d/dt_i (1-based)."""
        coeffs = [vars.zero()] * vars.n
        coeffs[i - 1] = vars.one()
        return cls(vars, coeffs)

    @classmethod
    def from_symbol(cls, vars: VariableSet, symbol: Polynomial) -> "VectorField":
        """Inverse of symbol(): requires a y-linear homogeneous polynomial."""
        coeffs = [vars.zero()] * vars.n
        for mono, c in symbol.terms.items():
            ydeg = sum(mono[vars.n : 2 * vars.n])
            if ydeg != 1 or mono[vars.z_index] != 0:
                raise ValueError(f"not the symbol of a vector field: {symbol}")
            i = next(
                k for k in range(vars.n) if mono[vars.n + k] == 1
            )
            tpart = list(mono)
            tpart[vars.n + i] = 0
            coeffs[i] = coeffs[i] + Polynomial(vars, {tuple(tpart): c})
        return cls(vars, coeffs)

    def symbol(self) -> Polynomial:
        """The fiberwise-linear function sum_i a_i(t) y_i on the cotangent space."""
        out = self.vars.zero()
        for i, c in enumerate(self.coeffs, start=1):
            out = out + c * self.vars.y(i)
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.vars, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.vars, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "VectorField":
        return VectorField(self.vars, [-a for a in self.coeffs])

    def scale(self, f: Polynomial | int | Fraction) -> "VectorField":
        return VectorField(self.vars, [c * f for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorField)
            and other.vars == self.vars
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.coeffs))

    def __str__(self) -> str:
        pieces = [
            f"({c})*d/dt{i}" for i, c in enumerate(self.coeffs, start=1) if not c.is_zero()
        ]
        return " + ".join(pieces) if pieces else "0"

    __repr__ = __str__


def lie_bracket(x: VectorField, y: VectorField) -> VectorField:
    """[X, Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k)."""
    if x.vars != y.vars:
        raise ValueError("vector fields on different variable sets")
    vars = x.vars
    out = []
    for k in range(vars.n):
        acc = vars.zero()
        for i in range(1, vars.n + 1):
            acc = acc + x.coeffs[i - 1] * y.coeffs[k].diff_t(i)
            acc = acc - y.coeffs[i - 1] * x.coeffs[k].diff_t(i)
        out.append(acc)
    return VectorField(vars, out)


class FMultiplication:
    """Structure constants of a multiplication on the tangent sheaf.

    table[a-1][b-1] is the field d_a o d_b as a VectorField; e is the
    designated identity field.  Construction does not reject violated
    algebra axioms (corrupted inputs must remain analyzable); use
    axiom_failures() or let is_f_manifold report them.
    """

    __slots__ = ("vars", "table", "e")

    def __init__(
        self,
        vars: VariableSet,
        table: Sequence[Sequence[VectorField]],
        e: VectorField,
    ):
        n = vars.n
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"structure-constant table must be {n}x{n}")
        self.vars = vars
        self.table: tuple[tuple[VectorField, ...], ...] = tuple(
            tuple(row) for row in table
        )
        self.e = e

    @property
    def n(self) -> int:
        return self.vars.n

    def basis_product(self, a: int, b: int) -> VectorField:
        """d_a o d_b for 1-based basis indices."""
        return self.table[a - 1][b - 1]

    def multiply(self, x: VectorField, y: VectorField) -> VectorField:
        """O_M-bilinear extension of the structure constants."""
        out = VectorField.zero(self.vars)
        for a in range(self.n):
            xa = x.coeffs[a]
            if xa.is_zero():
                continue
            for b in range(self.n):
                yb = y.coeffs[b]
                if yb.is_zero():
                    continue
                out = out + self.table[a][b].scale(xa * yb)
        return out

    def axiom_failures(self) -> list[str]:
        """Violations of commutativity, associativity, and the unit axiom."""
        failures: list[str] = []
        n = self.n
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if self.basis_product(a, b) != self.basis_product(b, a):
                    failures.append(f"commutativity fails at (d{a}, d{b})")
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                for c in range(b, n + 1):
                    left = self.multiply(self.basis_product(a, b), VectorField.basis(self.vars, c))
                    right = self.multiply(VectorField.basis(self.vars, a), self.basis_product(b, c))
                    if left != right:
                        failures.append(f"associativity fails at (d{a}, d{b}, d{c})")
        for b in range(1, n + 1):
            basis_b = VectorField.basis(self.vars, b)
            if self.multiply(self.e, basis_b) != basis_b:
                failures.append(f"identity fails at d{b}")
        return failures

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FMultiplication)
            and other.vars == self.vars
            and other.table == self.table
            and other.e == self.e
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.table, self.e))


def multiply_fields(m: FMultiplication, x: VectorField, y: VectorField) -> VectorField:
    return m.multiply(x, y)


def semisimple_model(vars: VariableSet) -> FMultiplication:
    """Constant orthogonal-idempotent model d_a o d_b = delta_ab d_a, e = sum d_a."""
    n = vars.n
    table = [
        [
            VectorField.basis(vars, a + 1) if a == b else VectorField.zero(vars)
            for b in range(n)
        ]
        for a in range(n)
    ]
    e = VectorField(vars, [vars.one()] * n)
    return FMultiplication(vars, table, e)


def identity_defect(
    m: FMultiplication,
    x: VectorField,
    y: VectorField,
    z: VectorField,
    w: VectorField,
) -> VectorField:
    """Nine-term expansion of the structure identity on four fields.

    The expression is O_M-polylinear, so vanishing on all basis quadruples
    is equivalent to the identity for arbitrary fields.  Multiple products
    associate left to right; for the valid (associative) inputs the
    grouping is immaterial.
    """
    mul = m.multiply
    xy = mul(x, y)
    zw = mul(z, w)
    out = lie_bracket(xy, zw)
    out = out - mul(lie_bracket(xy, z), w)
    out = out - mul(z, lie_bracket(xy, w))
    out = out - mul(x, lie_bracket(y, zw))
    out = out - mul(y, lie_bracket(x, zw))
    out = out + mul(mul(x, lie_bracket(y, z)), w)
    out = out + mul(mul(x, z), lie_bracket(y, w))
    out = out + mul(mul(y, lie_bracket(x, z)), w)
    out = out + mul(mul(y, z), lie_bracket(x, w))
    return out


def structure_identity_defect(
    m: FMultiplication, a: int, b: int, c: int, d: int
) -> VectorField:
    """identity_defect on the basis quadruple (d_a, d_b, d_c, d_d), 1-based."""
    vars = m.vars
    return identity_defect(
        m,
        VectorField.basis(vars, a),
        VectorField.basis(vars, b),
        VectorField.basis(vars, c),
        VectorField.basis(vars, d),
    )


def e_compatibility_defect(m: FMultiplication, a: int, b: int) -> VectorField:
    """[e, X o Y] - X o [e, Y] - [e, X] o Y on the basis pair (d_a, d_b)."""
    x = VectorField.basis(m.vars, a)
    y = VectorField.basis(m.vars, b)
    return (
        lie_bracket(m.e, m.multiply(x, y))
        - m.multiply(x, lie_bracket(m.e, y))
        - m.multiply(lie_bracket(m.e, x), y)
    )


def spectral_cover_ideal(
    m: FMultiplication, order=None
) -> IdealPresentation:
    """Cover ideal: symbol(e) - 1 and symbol(d_a o d_b) - y_a*y_b for a <= b."""
    vars = m.vars
    if order is None:
        order = degrevlex(vars)
    gens = [m.e.symbol() - vars.one()]
    for a in range(1, vars.n + 1):
        for b in range(a, vars.n + 1):
            g = m.basis_product(a, b).symbol() - vars.y(a) * vars.y(b)
            if not g.is_zero():
                gens.append(g)
    return IdealPresentation(tuple(gens), order)


@dataclass(frozen=True)
class FVerdict:
    """Outcome of is_f_manifold, with the evidence each route produced."""

    is_f: bool
    axioms_ok: bool
    axiom_failures: tuple[str, ...]
    identity_ok: Optional[bool] = None
    identity_witness: Optional[tuple] = None  # ("defect", a,b,c,d, field) or ("e-compat", a,b, field)
    spectral_ok: Optional[bool] = None
    spectral: Optional[StabilityResult] = None

    def __bool__(self) -> bool:
        return self.is_f


def is_f_manifold(
    m: FMultiplication, route: str = "both", max_pairs: int = DEFAULT_BUDGET
) -> FVerdict:
    """Decide the F-manifold property along the requested route(s).

    route is one of "identity", "spectral", "both".  When both routes run
    on a multiplication satisfying the algebra axioms, their verdicts must
    coincide; any disagreement raises RuntimeError because it can only be
    an implementation bug, never a mathematical outcome.
    """
    if route not in ("identity", "spectral", "both"):
        raise ValueError(f"unknown route {route!r}")
    failures = tuple(m.axiom_failures())
    axioms_ok = not failures

    identity_ok: Optional[bool] = None
    identity_witness = None
    if route in ("identity", "both"):
        identity_ok = True
        n = m.n
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                for c in range(1, n + 1):
                    for d in range(1, n + 1):
                        defect = structure_identity_defect(m, a, b, c, d)
                        if not defect.is_zero():
                            identity_ok = False
                            identity_witness = ("defect", a, b, c, d, defect)
                            break
                    if identity_witness:
                        break
                if identity_witness:
                    break
            if identity_witness:
                break
        if identity_ok:
            # vanishing on all quadruples already forces e-compatibility by
            # polylinearity; this scan stays as an independent cross-check
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    defect = e_compatibility_defect(m, a, b)
                    if not defect.is_zero():
                        identity_ok = False
                        identity_witness = ("e-compat", a, b, defect)
                        break
                if identity_witness:
                    break

    spectral_ok: Optional[bool] = None
    spectral_result: Optional[StabilityResult] = None
    if route in ("spectral", "both"):
        spectral_result = ideal_poisson_stable(spectral_cover_ideal(m), max_pairs=max_pairs)
        spectral_ok = spectral_result.stable

    if route == "both" and axioms_ok and identity_ok != spectral_ok:
        raise RuntimeError(
            "internal inconsistency: identity and spectral routes disagree "
            f"(identity={identity_ok}, spectral={spectral_ok})"
        )

    routes_ok = identity_ok if identity_ok is not None else spectral_ok
    return FVerdict(
        is_f=bool(axioms_ok and routes_ok),
        axioms_ok=axioms_ok,
        axiom_failures=failures,
        identity_ok=identity_ok,
        identity_witness=identity_witness,
        spectral_ok=spectral_ok,
        spectral=spectral_result,
    )


# ---------------------------------------------------------------------------
# Reconstruction of the multiplication from a cover ideal
# ---------------------------------------------------------------------------


def multiplication_from_ideal(
    gens: IdealPresentation,
    n: int,
    check_rank: bool = True,
    samples: Sequence[Sequence[Fraction]] | None = None,
    seed: int = 0,
    max_pairs: int = DEFAULT_BUDGET,
) -> FMultiplication:
    """Read structure constants off normal forms of y_a*y_b.

    Requires the class of y_1 to be 1 (so e = d/dt1) and every normal
    form under the y-block order to be literally linear in y; otherwise
    the tangent-field classes are not presented as a monomial basis and
    a ReconstructionError is raised.  The pointwise rank check runs
    first unless the caller has already performed it.
    """
    vars = gens.vars
    if vars.n != n:
        raise ValueError(f"ideal lives at dimension {vars.n}, expected {n}")
    if check_rank:
        rank = spectral_cover_rank_check(
            gens, n, samples=samples, seed=seed, max_pairs=max_pairs
        )
        if not rank.ok:
            bad = next(p for p in rank.points if not p.ok)
            raise ReconstructionError(
                f"rank check failed at point {bad.point}: {bad.reason}"
            )
    gb = buchberger(IdealPresentation(gens.generators, y_block(vars)), max_pairs=max_pairs)
    if not ideal_contains(vars.y(1) - vars.one(), gb):
        raise ReconstructionError("y1 - 1 is not in the ideal; identity class missing")
    table = [[VectorField.zero(vars) for _ in range(n)] for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            nf = normal_form(vars.y(a) * vars.y(b), gb)
            field = _field_from_linear(nf, vars)
            table[a - 1][b - 1] = field
            table[b - 1][a - 1] = field
    return FMultiplication(vars, table, VectorField.basis(vars, 1))


def _field_from_linear(nf: Polynomial, vars: VariableSet) -> VectorField:
    coeffs = [vars.zero()] * vars.n
    constant = vars.zero()
    for mono, c in nf.terms.items():
        if mono[vars.z_index] != 0:
            raise ReconstructionError("normal form involves the reserved variable z")
        ydeg = sum(mono[vars.n : 2 * vars.n])
        if ydeg == 0:
            constant = constant + Polynomial(vars, {mono: c})
        elif ydeg == 1:
            i = next(k for k in range(vars.n) if mono[vars.n + k] >= 1)
            tpart = list(mono)
            tpart[vars.n + i] = 0
            coeffs[i] = coeffs[i] + Polynomial(vars, {tuple(tpart): c})
        else:
            raise ReconstructionError(
                f"normal form {nf} is not linear in y; tangent-field classes "
                "are not a monomial basis under this presentation"
            )
    # the class of 1 is the class of y1, so t-constant parts ride on d/dt1
    coeffs[0] = coeffs[0] + constant
    return VectorField(vars, coeffs)


# ---------------------------------------------------------------------------
# Pointwise rank check of the cover
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointRank:
    point: tuple[Fraction, ...]
    ok: bool
    dim: Optional[int]
    reason: str = ""


@dataclass(frozen=True)
class RankCheckResult:
    ok: bool
    points: tuple[PointRank, ...]

    def __bool__(self) -> bool:
        return self.ok


def sample_points(vars: VariableSet, count: int, seed: int) -> list[tuple[Fraction, ...]]:
    """Deterministic small-rational sample points for flatness surrogates."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        points.append(
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(vars.n))
        )
    return points


def fiber_generators(
    gens: IdealPresentation, point: Sequence[Fraction]
) -> list[Polynomial]:
    evaluated = (g.evaluate_base(point) for g in gens.generators)
    return [g for g in evaluated if not g.is_zero()]


def _fiber_basis_data(
    gens: IdealPresentation, point: Sequence[Fraction], max_pairs: int
):
    """Groebner data of the fiber ideal at a point: (gb, standard y-monomials).

    Returns None in place of the monomial list when the fiber algebra is
    infinite dimensional.
    """
    vars = gens.vars
    fiber = fiber_generators(gens, point)
    if not fiber:
        return None, None
    gb = buchberger(
        IdealPresentation(tuple(fiber), degrevlex(vars)), max_pairs=max_pairs
    )
    leads = gb.leading_monomials()
    n = vars.n
    for lm in leads:
        if sum(lm[:n]) > 0 or lm[vars.z_index] > 0:
            raise ValueError("fiber ideal unexpectedly involves base variables or z")
    if any(g.is_constant() for g in gb.basis):
        return gb, []
    bounds = []
    for i in range(n):
        pure = [
            lm[n + i]
            for lm in leads
            if lm[n + i] > 0 and sum(lm[n : 2 * n]) == lm[n + i]
        ]
        if not pure:
            return gb, None
        bounds.append(min(pure))
    standard: list[Monomial] = []

    def walk(prefix: list[int], i: int):
        if i == n:
            mono = [0] * vars.nvars
            for k in range(n):
                mono[n + k] = prefix[k]
            mono_t = tuple(mono)
            if not any(
                all(lm[idx] <= mono_t[idx] for idx in range(vars.nvars)) for lm in leads
            ):
                standard.append(mono_t)
            return
        for e in range(bounds[i]):
            walk(prefix + [e], i + 1)

    walk([], 0)
    standard.sort(key=vars.degrevlex_key())
    return gb, standard


def spectral_cover_rank_check(
    gens: IdealPresentation,
    n: int,
    samples: Sequence[Sequence[Fraction]] | None = None,
    seed: int = 0,
    count: int = 5,
    require_unit_class: bool = True,
    max_pairs: int = DEFAULT_BUDGET,
) -> RankCheckResult:
    """Pointwise surrogate for flatness of degree n with tangent classes a basis.

    At each sample point the fiber algebra Q[y]/J(t0) must have dimension
    n and the classes of y_1..y_n must form a basis.  By default the
    class of y_1 must equal 1, the e = d/dt1 normalization that the
    reconstruction step relies on; pass require_unit_class=False for
    covers of multiplications whose identity field is not d/dt1 (their
    unit-class relation symbol(e) = 1 is a generator already).
    """
    vars = gens.vars
    if vars.n != n:
        raise ValueError(f"ideal lives at dimension {vars.n}, expected {n}")
    if samples is None:
        samples = sample_points(vars, count, seed)
    reports: list[PointRank] = []
    all_ok = True
    for raw in samples:
        point = tuple(Fraction(v) for v in raw)
        gb, standard = _fiber_basis_data(gens, point, max_pairs)
        if gb is None:
            reports.append(PointRank(point, False, None, "fiber ideal is zero"))
            all_ok = False
            continue
        if standard is None:
            reports.append(PointRank(point, False, None, "fiber algebra is infinite dimensional"))
            all_ok = False
            continue
        dim = len(standard)
        if dim != n:
            reports.append(PointRank(point, False, dim, f"dimension {dim} != {n}"))
            all_ok = False
            continue
        if require_unit_class and not ideal_contains(vars.y(1) - vars.one(), gb):
            reports.append(PointRank(point, False, dim, "class of y1 is not 1"))
            all_ok = False
            continue
        index = {mono: k for k, mono in enumerate(standard)}
        columns = []
        consistent = True
        for i in range(1, n + 1):
            nf = normal_form(vars.y(i), gb)
            col = [Fraction(0)] * dim
            for mono, c in nf.terms.items():
                if mono not in index:
                    consistent = False
                    break
                col[index[mono]] = c
            if not consistent:
                break
            columns.append(col)
        if not consistent:
            reports.append(PointRank(point, False, dim, "normal form outside standard monomials"))
            all_ok = False
            continue
        matrix = [[columns[j][i] for j in range(n)] for i in range(dim)]
        if linalg.rank(matrix) != n:
            reports.append(PointRank(point, False, dim, "classes of y1..yn are dependent"))
            all_ok = False
            continue
        reports.append(PointRank(point, True, dim))
    return RankCheckResult(all_ok, tuple(reports))


# ---------------------------------------------------------------------------
# The two example families of cover ideals
# ---------------------------------------------------------------------------


def family1(vars: VariableSet, rho: Sequence[Polynomial]) -> IdealPresentation:
    """Square-zero family: J = (y1 - 1, (y_i - rho_i)(y_j - rho_j), 2 <= i <= j <= n).

    rho is the full list rho_1..rho_n with rho_1 = 1; each rho_i must be a
    t-polynomial independent of t1.  The index range includes i = j.
    """
    n = vars.n
    if len(rho) != n:
        raise ValueError(f"expected {n} shift polynomials, got {len(rho)}")
    if rho[0] != vars.one():
        raise ValueError("rho_1 must be 1")
    for k, r in enumerate(rho[1:], start=2):
        if r.vars != vars:
            raise ValueError("shift polynomial in a different variable set")
        if r.uses_y() or r.uses_z():
            raise ValueError(f"rho_{k} must involve only t-variables")
        if not r.diff_t(1).is_zero():
            raise ValueError(f"rho_{k} must not depend on t1")
    gens = [vars.y(1) - vars.one()]
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            gens.append((vars.y(i) - rho[i - 1]) * (vars.y(j) - rho[j - 1]))
    return IdealPresentation(tuple(gens), degrevlex(vars))


def family1_radical(vars: VariableSet, rho: Sequence[Polynomial]) -> IdealPresentation:
    """Stated radical of family1: (y1 - 1, y2 - rho_2, ..., yn - rho_n)."""
    n = vars.n
    if len(rho) != n:
        raise ValueError(f"expected {n} shift polynomials, got {len(rho)}")
    gens = [vars.y(1) - vars.one()]
    gens += [vars.y(i) - rho[i - 1] for i in range(2, n + 1)]
    return IdealPresentation(tuple(gens), degrevlex(vars))


def family2_rho(vars: VariableSet) -> Polynomial:
    """The y-dependent shift t3*y1 + sum_{k=3}^{n-1} (k-1) t_{k+1} y_k."""
    n = vars.n
    rho = vars.t(3) * vars.y(1)
    for k in range(3, n):
        rho = rho + vars.const(k - 1) * vars.t(k + 1) * vars.y(k)
    return rho


def family2(vars: VariableSet) -> IdealPresentation:
    """Chain family, n >= 3:

    J = (y1 - 1, (y2 - rho)^2, (y2 - rho)*y3, y3^(n-1),
         y4 - y3^2, ..., yn - y3^(n-2))

    with rho = t3*y1 + sum_{k=3}^{n-1} (k-1) t_{k+1} y_k.  The shift
    depends on fiber coordinates; generators are expanded to honest
    polynomials in (t, y), which is all the downstream machinery needs.
    """
    n = vars.n
    if n < 3:
        raise ValueError(f"the chain family needs dimension >= 3, got {n}")
    rho = family2_rho(vars)
    u = vars.y(2) - rho
    gens = [vars.y(1) - vars.one(), u * u, u * vars.y(3), vars.y(3) ** (n - 1)]
    for k in range(4, n + 1):
        gens.append(vars.y(k) - vars.y(3) ** (k - 2))
    return IdealPresentation(tuple(gens), degrevlex(vars))


def family2_radical(vars: VariableSet) -> IdealPresentation:
    """Stated radical of family2: (y1 - 1, y2 - t3*y1, y3, ..., yn)."""
    n = vars.n
    if n < 3:
        raise ValueError(f"the chain family needs dimension >= 3, got {n}")
    gens = [vars.y(1) - vars.one(), vars.y(2) - vars.t(3) * vars.y(1)]
    gens += [vars.y(k) for k in range(3, n + 1)]
    return IdealPresentation(tuple(gens), degrevlex(vars))
