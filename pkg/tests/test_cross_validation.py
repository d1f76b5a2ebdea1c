"""Optional cross-validation of the Groebner engine against sympy.

These tests run only when sympy happens to be installed; the package
itself has no dependency on it.  They compare reduced bases in the
engine's own representation after monic normalization under the same
monomial order, for the built-in families and a batch of random ideals.
"""

import random
from fractions import Fraction

import pytest

sp = pytest.importorskip("sympy")

from fmanifolds import VariableSet, family1, family2, family2_radical
from fmanifolds.groebner import IdealPresentation, _make_monic, buchberger, degrevlex
from fmanifolds.poly import Polynomial


def to_sympy(p, storage_syms):
    expr = 0
    for mono, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for e, s in zip(mono, storage_syms):
            term *= s ** e
        expr += term
    return expr


def from_sympy(expr, vars, storage_syms):
    poly = sp.Poly(expr, *storage_syms)
    terms = {}
    for mono, coeff in poly.terms():
        q = sp.Rational(coeff)
        terms[tuple(mono)] = Fraction(int(q.p), int(q.q))
    return Polynomial(vars, terms)


def assert_basis_matches(vars, gens):
    names = (
        [f"y{i}" for i in range(1, vars.n + 1)]
        + [f"t{i}" for i in range(1, vars.n + 1)]
        + ["z"]
    )
    syms = {name: sp.Symbol(name) for name in names}
    ordered = [syms[name] for name in names]
    storage = (
        [syms[f"t{i}"] for i in range(1, vars.n + 1)]
        + [syms[f"y{i}"] for i in range(1, vars.n + 1)]
        + [syms["z"]]
    )
    reference = sp.groebner(
        [to_sympy(g, storage) for g in gens], *ordered, order="grevlex"
    )
    key = degrevlex(vars).key
    theirs = {str(_make_monic(from_sympy(e, vars, storage), key)) for e in reference.exprs}
    mine = buchberger(IdealPresentation(tuple(gens), degrevlex(vars)))
    assert {str(g) for g in mine.basis} == theirs


def test_families_match_reference():
    for n in (3, 4):
        vars = VariableSet(n)
        assert_basis_matches(vars, list(family2(vars).generators))
        assert_basis_matches(vars, list(family2_radical(vars).generators))
    v3 = VariableSet(3)
    assert_basis_matches(v3, list(family1(v3, [v3.one(), v3.t(3), v3.zero()]).generators))


def test_random_ideals_match_reference():
    rng = random.Random(987)

    def random_poly(vars, max_terms=3, max_degree=2):
        out = vars.zero()
        for _ in range(rng.randint(1, max_terms)):
            mono = [0] * vars.nvars
            for _ in range(rng.randint(0, max_degree)):
                mono[rng.randint(0, 2 * vars.n - 1)] += 1
            coeff = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
            out = out + Polynomial(vars, {tuple(mono): coeff})
        return out

    checked = 0
    for _ in range(40):
        n = rng.choice([1, 2, 3])
        vars = VariableSet(n)
        gens = [
            p
            for p in (random_poly(vars) for _ in range(rng.randint(1, 3)))
            if not p.is_zero()
        ]
        if not gens:
            continue
        assert_basis_matches(vars, gens)
        checked += 1
    assert checked >= 30
