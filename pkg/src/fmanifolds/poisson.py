"""Canonical Poisson bracket on the cotangent space and ideal stability.

The bracket pairs each base coordinate t_i with its conjugate fiber
coordinate y_i:

    {f, g} = sum_i  df/dy_i * dg/dt_i  -  df/dt_i * dg/dy_i .

This is the unique sign convention under which the bracket of two
fiberwise-linear functions equals the symbol of the Lie bracket of the
corresponding vector fields, which is what the spectral-route machinery
needs.  Everything here is pure even: no parity signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    IdealPresentation,
    buchberger,
    normal_form,
)
from .poly import Polynomial


def _require_z_free(p: Polynomial, role: str) -> None:
    if p.uses_z():
        raise ValueError(f"{role} must not involve the reserved variable z")


def poisson_bracket(f: Polynomial, g: Polynomial) -> Polynomial:
    """{f, g} on the cotangent space; bilinear and antisymmetric."""
    if f.vars != g.vars:
        raise ValueError("polynomials belong to different variable sets")
    _require_z_free(f, "bracket argument")
    _require_z_free(g, "bracket argument")
    vars = f.vars
    out = vars.zero()
    for i in range(1, vars.n + 1):
        out = out + f.diff_y(i) * g.diff_t(i) - f.diff_t(i) * g.diff_y(i)
    return out


def poisson_tensor(a: Polynomial, b: Polynomial, c: Polynomial) -> Polynomial:
    """Leibniz defect {a, b*c} - {a,b}*c - b*{a,c}.

    Identically zero on the polynomial Poisson algebra; computing it is
    the module's core self-test rather than a useful production value.
    """
    return (
        poisson_bracket(a, b * c)
        - poisson_bracket(a, b) * c
        - b * poisson_bracket(a, c)
    )


@dataclass(frozen=True)
class BracketWitness:
    """An offending generator pair: {g_i, g_j} does not lie in the ideal."""

    i: int
    j: int
    bracket: Polynomial
    remainder: Polynomial

    def describe(self, gens: IdealPresentation) -> str:
        gi = gens.generators[self.i]
        gj = gens.generators[self.j]
        return f"{{{gi}, {gj}}} = {self.bracket}"


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    witness: Optional[BracketWitness]
    gb: GroebnerBasis

    def __bool__(self) -> bool:
        return self.stable


def ideal_poisson_stable(
    gens: IdealPresentation, max_pairs: int = DEFAULT_BUDGET
) -> StabilityResult:
    """Decide {J, J} <= J on the given generators.

    Stability of an ideal under the bracket can be checked on any
    generating set, so the verdict does not depend on the presentation.
    Returns the first offending pair (in ascending (i, j) order) as a
    witness when unstable.
    """
    for g in gens.generators:
        _require_z_free(g, "ideal generator")
    gb = buchberger(gens, max_pairs=max_pairs)
    glist = gens.generators
    for i in range(len(glist)):
        for j in range(i + 1, len(glist)):
            bracket = poisson_bracket(glist[i], glist[j])
            if bracket.is_zero():
                continue
            remainder = normal_form(bracket, gb)
            if not remainder.is_zero():
                return StabilityResult(
                    stable=False,
                    witness=BracketWitness(i, j, bracket, remainder),
                    gb=gb,
                )
    return StabilityResult(stable=True, witness=None, gb=gb)
