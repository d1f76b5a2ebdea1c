"""Buchberger-style Groebner basis engine over the exact polynomial ring.

Provides reduced Groebner bases, normal forms, ideal membership, ideal
equality, and per-element radical membership (Rabinowitsch trick, using
the reserved variable z of every VariableSet).

The engine is a plain Buchberger loop with the two classical pair-discard
criteria (coprime leading monomials, chain criterion).  Desk-scale ideals
do not need more, and the simple loop is easy to audit.  A hard pair
budget turns runaway computations into an explicit failure instead of a
wrong or truncated answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .poly import (
    Monomial,
    Polynomial,
    VariableSet,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_BUDGET = 20_000


class BudgetExceededError(RuntimeError):
    """Raised when a basis computation exceeds its configured pair budget."""


@dataclass(frozen=True)
class MonomialOrder:
    """A total well-order on monomials, compatible with multiplication.

    kind is one of "degrevlex", "lex", "block" (y-block above t-block,
    degrevlex within blocks).  z is always the least significant variable.
    """

    kind: str
    vars: VariableSet
    key: Callable[[Monomial], tuple] = field(compare=False, repr=False)


def degrevlex(vars: VariableSet) -> MonomialOrder:
    return MonomialOrder("degrevlex", vars, vars.degrevlex_key())


def lex(vars: VariableSet) -> MonomialOrder:
    return MonomialOrder("lex", vars, vars.lex_key())


def y_block(vars: VariableSet) -> MonomialOrder:
    return MonomialOrder("block", vars, vars.y_block_key())


@dataclass(frozen=True)
class IdealPresentation:
    """A finite generator list for an ideal, with its monomial order."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder

    def __post_init__(self):
        if not self.generators:
            raise ValueError("ideal presentation needs at least one generator")
        vars = self.order.vars
        for g in self.generators:
            if g.vars != vars:
                raise ValueError("generator belongs to a different variable set")
            if g.is_zero():
                raise ValueError("zero generator in ideal presentation")

    @property
    def vars(self) -> VariableSet:
        return self.order.vars

    def with_generators(self, gens: Iterable[Polynomial]) -> "IdealPresentation":
        return IdealPresentation(tuple(gens), self.order)


def ideal(gens: Iterable[Polynomial], order: MonomialOrder | None = None) -> IdealPresentation:
    """Convenience constructor; defaults to degrevlex on the generators' ring."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("ideal needs at least one generator")
    if order is None:
        order = degrevlex(gens[0].vars)
    return IdealPresentation(gens, order)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, autoreduced, canonically sorted.

    The reduced basis is unique for (ideal, order), so equality of bases
    is equality of ideals under the same order.  pairs_processed is
    bookkeeping for reports and budget accounting; it does not take part
    in equality.
    """

    basis: tuple[Polynomial, ...]
    order: MonomialOrder
    pairs_processed: int = field(default=0, compare=False)

    @property
    def vars(self) -> VariableSet:
        return self.order.vars

    def leading_monomials(self) -> list[Monomial]:
        key = self.order.key
        return [g.leading_term(key)[0] for g in self.basis]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: cancel leading terms via the lcm of leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_polynomial requires nonzero inputs")
    key = order.key
    mf, cf = f.leading_term(key)
    mg, cg = g.leading_term(key)
    lcm = monomial_lcm(mf, mg)
    left = _mono_times(f, monomial_div(lcm, mf), Fraction(1) / cf)
    right = _mono_times(g, monomial_div(lcm, mg), Fraction(1) / cg)
    return left - right


def _mono_times(p: Polynomial, mono: Monomial, coeff: Fraction) -> Polynomial:
    return Polynomial(
        p.vars, {monomial_mul(m, mono): c * coeff for m, c in p.terms.items()}
    )


def _reduce(f: Polynomial, reducers: Sequence[Polynomial], key) -> Polynomial:
    """Multivariate division remainder of f against the reducer list."""
    lead = [(g.leading_term(key)) for g in reducers]
    work = dict(f.terms)
    remainder: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for idx, (lm, lc) in enumerate(lead):
            if monomial_divides(lm, m):
                hit = (idx, lm, lc)
                break
        if hit is None:
            remainder[m] = c
            continue
        idx, lm, lc = hit
        shift = monomial_div(m, lm)
        factor = c / lc
        for gm, gc in reducers[idx].terms.items():
            key_m = monomial_mul(gm, shift)
            if key_m == m:
                continue
            s = work.get(key_m, Fraction(0)) - factor * gc
            if s:
                work[key_m] = s
            else:
                work.pop(key_m, None)
    return Polynomial(f.vars, remainder)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo the basis; idempotent, and f - nf lies in the ideal."""
    if f.vars != gb.vars:
        raise ValueError("polynomial and basis belong to different variable sets")
    if f.is_zero() or not gb.basis:
        return f
    return _reduce(f, gb.basis, gb.order.key)


def buchberger(gens: IdealPresentation, max_pairs: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Unique reduced Groebner basis of the presented ideal.

    Raises BudgetExceededError once more than max_pairs critical pairs
    have been examined; a partial basis is never returned.
    """
    order = gens.order
    key = order.key
    basis: list[Polynomial] = []
    for g in gens.generators:
        r = _reduce(g, basis, key) if basis else g
        if not r.is_zero():
            basis.append(_make_monic(r, key))
    if not basis:
        raise ValueError("ideal presentation reduced to the zero ideal")

    pairs: set[tuple[int, int]] = {
        (i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
    }
    done: set[tuple[int, int]] = set()
    processed = 0

    def lead(i: int) -> Monomial:
        return basis[i].leading_term(key)[0]

    while pairs:
        # normal selection strategy: smallest lcm in the order
        i, j = min(pairs, key=lambda p: key(monomial_lcm(lead(p[0]), lead(p[1]))))
        pairs.discard((i, j))
        done.add((i, j))
        processed += 1
        if processed > max_pairs:
            raise BudgetExceededError(
                f"pair budget {max_pairs} exceeded while computing a Groebner basis"
            )
        lm_i, lm_j = lead(i), lead(j)
        lcm = monomial_lcm(lm_i, lm_j)
        # product criterion: coprime leading monomials
        if lcm == monomial_mul(lm_i, lm_j):
            continue
        # chain criterion
        if _chain_criterion(i, j, lcm, basis, key, done):
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = _reduce(s, basis, key)
        if r.is_zero():
            continue
        basis.append(_make_monic(r, key))
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))

    return GroebnerBasis(_reduce_basis(basis, key), order, pairs_processed=processed)


def _chain_criterion(i, j, lcm, basis, key, done) -> bool:
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if not monomial_divides(basis[k].leading_term(key)[0], lcm):
            continue
        pik = (min(i, k), max(i, k))
        pjk = (min(j, k), max(j, k))
        if pik in done and pjk in done:
            return True
    return False


def _make_monic(p: Polynomial, key) -> Polynomial:
    _, c = p.leading_term(key)
    if c == 1:
        return p
    inv = Fraction(1) / c
    return Polynomial(p.vars, {m: coeff * inv for m, coeff in p.terms.items()})


def _reduce_basis(basis: list[Polynomial], key) -> tuple[Polynomial, ...]:
    # minimalize: drop elements whose leading monomial another one divides
    keep: list[Polynomial] = []
    leads = [g.leading_term(key)[0] for g in basis]
    for idx, g in enumerate(basis):
        lm = leads[idx]
        redundant = any(
            other != idx
            and monomial_divides(leads[other], lm)
            and (leads[other] != lm or other < idx)
            for other in range(len(basis))
        )
        if not redundant:
            keep.append(g)
    # autoreduce: each element in normal form against the others
    reduced: list[Polynomial] = list(keep)
    changed = True
    while changed:
        changed = False
        for idx in range(len(reduced)):
            others = reduced[:idx] + reduced[idx + 1 :]
            r = _reduce(reduced[idx], others, key) if others else reduced[idx]
            if r.is_zero():
                reduced.pop(idx)
                changed = True
                break
            r = _make_monic(r, key)
            if r != reduced[idx]:
                reduced[idx] = r
                changed = True
    reduced.sort(key=lambda g: key(g.leading_term(key)[0]), reverse=True)
    return tuple(reduced)


def ideal_contains(f: Polynomial, gb: GroebnerBasis) -> bool:
    """True iff f lies in the ideal presented by the basis."""
    return normal_form(f, gb).is_zero()


def radical_contains(
    f: Polynomial, gens: IdealPresentation, max_pairs: int = DEFAULT_BUDGET
) -> bool:
    """Rabinowitsch test: f is in the radical iff 1 lies in (gens, 1 - z*f).

    The query must not itself involve z; the reserved variable exists in
    every ring precisely so this extension never rebuilds the ring.
    """
    if f.uses_z():
        raise ValueError("radical membership query must not involve z")
    for g in gens.generators:
        if g.uses_z():
            raise ValueError("ideal generators must not involve z")
    if f.is_zero():
        return True
    vars = gens.vars
    extended = gens.with_generators(
        tuple(gens.generators) + (vars.one() - vars.z() * f,)
    )
    gb = buchberger(extended, max_pairs=max_pairs)
    return is_unit_ideal(gb)


def is_unit_ideal(gb: GroebnerBasis) -> bool:
    return len(gb.basis) == 1 and gb.basis[0].is_constant()


def ideal_equals(
    a: IdealPresentation, b: IdealPresentation, max_pairs: int = DEFAULT_BUDGET
) -> bool:
    """True iff the two presentations generate the same ideal.

    Both reduced bases are computed under a's order; reduced bases are
    unique per (ideal, order), so this is a complete test.
    """
    if a.vars != b.vars:
        raise ValueError("ideals live in different variable sets")
    gb_a = buchberger(a, max_pairs=max_pairs)
    gb_b = buchberger(IdealPresentation(b.generators, a.order), max_pairs=max_pairs)
    return gb_a.basis == gb_b.basis


def verify_radical_presentation(
    gens: IdealPresentation,
    radical_gens: IdealPresentation,
    max_pairs: int = DEFAULT_BUDGET,
) -> bool:
    """Check that a claimed radical presentation R satisfies J <= R <= sqrt(J).

    Together the two inclusions force R and sqrt(J) to have equal radicals,
    which is the strongest statement element-level radical membership can
    certify without a full radical computation.
    """
    gb_radical = buchberger(
        IdealPresentation(radical_gens.generators, gens.order), max_pairs=max_pairs
    )
    for g in gens.generators:
        if not ideal_contains(g, gb_radical):
            return False
    for r in radical_gens.generators:
        if not radical_contains(r, gens, max_pairs=max_pairs):
            return False
    return True


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Exhaustive S-polynomial test; used by the self-consistency suite."""
    for i in range(len(gb.basis)):
        for j in range(i + 1, len(gb.basis)):
            s = s_polynomial(gb.basis[i], gb.basis[j], gb.order)
            if not normal_form(s, gb).is_zero():
                return False
    return True
