"""Manifold-spec JSON format and deterministic report structure.

A manifold spec describes either a cover ideal (generator expression
strings) or a structure-constant table (vector-field expression strings
in e1..en), plus optional blocks: a stated radical presentation, grading
data for Euler fields, a raw point-algebra table with optional parity
and pairing, explicit sample points, and one seed from which all
randomness derives.

Reports are plain data: an ordered list of named checks with statuses
pass/fail/info plus deterministic basis statistics.  Rendering the same
spec with the same seed twice yields byte-identical output; wall-clock
timings therefore never enter the payload.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .euler import GradingData, grading_data
from .fstructure import FMultiplication, VectorField
from .groebner import IdealPresentation, degrevlex
from .poly import ParseError, Polynomial, VariableSet
from .super_frobenius import SuperFrobeniusAlgebra


class SpecError(ValueError):
    """Malformed manifold spec (bad JSON, bad expressions, bad shape)."""


_PAIR_KEY = re.compile(r"^\((\d+),\s*(\d+)\)$")


@dataclass
class ManifoldSpec:
    n: int
    mode: Optional[str] = None
    ideal: Optional[list[str]] = None
    radical: Optional[list[str]] = None
    structure_constants: Optional[dict[str, str]] = None
    identity: Any = None
    gradings: Optional[list[dict]] = None
    table: Optional[dict] = None
    sample_points: Optional[list[list[str]]] = None
    seed: int = 0
    family: Optional[int] = None
    family_params: Optional[dict] = None

    @property
    def vars(self) -> VariableSet:
        return VariableSet(self.n)


def load_spec(path: str) -> ManifoldSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec {path}: {exc}") from exc
    return spec_from_dict(raw)


def spec_from_dict(raw: dict) -> ManifoldSpec:
    if not isinstance(raw, dict):
        raise SpecError("spec must be a JSON object")
    if "n" not in raw or not isinstance(raw["n"], int) or raw["n"] < 1:
        raise SpecError("spec needs a positive integer dimension n")
    spec = ManifoldSpec(
        n=raw["n"],
        mode=raw.get("mode"),
        ideal=raw.get("ideal"),
        radical=raw.get("radical"),
        structure_constants=raw.get("structure_constants"),
        identity=raw.get("identity"),
        gradings=raw.get("gradings"),
        table=raw.get("table"),
        sample_points=raw.get("sample_points"),
        seed=raw.get("seed", 0),
        family=raw.get("family"),
        family_params=raw.get("family_params"),
    )
    if spec.mode is not None:
        if spec.mode not in ("ideal", "structure_constants"):
            raise SpecError(f"unknown mode {spec.mode!r}")
        if spec.mode == "ideal":
            if not spec.ideal or spec.structure_constants is not None:
                raise SpecError("mode 'ideal' needs exactly the 'ideal' block")
        else:
            if not spec.structure_constants or spec.ideal is not None:
                raise SpecError(
                    "mode 'structure_constants' needs exactly the 'structure_constants' block"
                )
    elif spec.ideal or spec.structure_constants:
        raise SpecError("spec with generators or constants must declare a mode")
    if not isinstance(spec.seed, int):
        raise SpecError("seed must be an integer")
    return spec


def _parse_expr(src: str, vars: VariableSet, role: str) -> Polynomial:
    if not isinstance(src, str):
        raise SpecError(f"{role} must be an expression string, got {src!r}")
    try:
        return vars.parse(src)
    except ParseError as exc:
        raise SpecError(f"{role}: {exc}") from exc


def _field_aliases(vars: VariableSet) -> dict[str, str]:
    return {f"e{i}": f"y{i}" for i in range(1, vars.n + 1)}


def parse_field_expr(src: str, vars: VariableSet, role: str) -> VectorField:
    """Vector-field expression in e1..en with t-polynomial coefficients."""
    if not isinstance(src, str):
        raise SpecError(f"{role} must be an expression string, got {src!r}")
    try:
        symbol = vars.parse(src, aliases=_field_aliases(vars))
    except ParseError as exc:
        raise SpecError(f"{role}: {exc}") from exc
    if symbol.is_zero():
        return VectorField.zero(vars)
    try:
        return VectorField.from_symbol(vars, symbol)
    except ValueError as exc:
        raise SpecError(f"{role}: {exc}") from exc


def ideal_from_spec(spec: ManifoldSpec) -> IdealPresentation:
    if not spec.ideal:
        raise SpecError("spec has no ideal block")
    vars = spec.vars
    gens = []
    for k, src in enumerate(spec.ideal):
        g = _parse_expr(src, vars, f"ideal generator {k + 1}")
        if g.is_zero():
            raise SpecError(f"ideal generator {k + 1} is zero")
        if g.uses_z():
            raise SpecError(f"ideal generator {k + 1} uses the reserved variable z")
        gens.append(g)
    return IdealPresentation(tuple(gens), degrevlex(vars))


def radical_from_spec(spec: ManifoldSpec) -> Optional[IdealPresentation]:
    if not spec.radical:
        return None
    vars = spec.vars
    gens = []
    for k, src in enumerate(spec.radical):
        g = _parse_expr(src, vars, f"radical generator {k + 1}")
        if g.is_zero():
            raise SpecError(f"radical generator {k + 1} is zero")
        if g.uses_z():
            raise SpecError(f"radical generator {k + 1} uses the reserved variable z")
        gens.append(g)
    return IdealPresentation(tuple(gens), degrevlex(vars))


def multiplication_from_spec(spec: ManifoldSpec) -> FMultiplication:
    if not spec.structure_constants:
        raise SpecError("spec has no structure_constants block")
    vars = spec.vars
    n = spec.n
    fields: dict[tuple[int, int], VectorField] = {}
    for key, src in spec.structure_constants.items():
        match = _PAIR_KEY.match(key)
        if not match:
            raise SpecError(f"bad structure-constant key {key!r}; expected \"(a,b)\"")
        a, b = int(match.group(1)), int(match.group(2))
        if not (1 <= a <= n and 1 <= b <= n):
            raise SpecError(f"indices out of range in key {key!r}")
        if a > b:
            raise SpecError(f"use a <= b in structure-constant keys, got {key!r}")
        fields[(a, b)] = parse_field_expr(src, vars, f"structure constant {key}")
    table = [[None] * n for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if (a, b) not in fields:
                raise SpecError(f"missing structure constant for pair ({a},{b})")
            table[a - 1][b - 1] = fields[(a, b)]
            table[b - 1][a - 1] = fields[(a, b)]
    identity = spec.identity
    if identity is None:
        raise SpecError("structure_constants mode needs an 'identity' entry")
    if isinstance(identity, int):
        if not 1 <= identity <= n:
            raise SpecError(f"identity index {identity} out of range")
        e = VectorField.basis(vars, identity)
    else:
        e = parse_field_expr(identity, vars, "identity")
    return FMultiplication(vars, table, e)  # type: ignore[arg-type]


def gradings_from_spec(spec: ManifoldSpec) -> GradingData:
    if spec.gradings is None:
        raise SpecError("spec has no gradings block")
    if not spec.gradings:
        raise SpecError("gradings block is empty")
    bidegrees = []
    coeffs = []
    for k, entry in enumerate(spec.gradings):
        if not isinstance(entry, dict) or "p" not in entry or "q" not in entry:
            raise SpecError(f"grading entry {k + 1} needs integer fields p and q")
        try:
            bidegrees.append((int(entry["p"]), int(entry["q"])))
            coeffs.append(Fraction(entry.get("r", 0)))
        except (ValueError, TypeError) as exc:
            raise SpecError(f"grading entry {k + 1}: {exc}") from exc
    try:
        return grading_data(bidegrees, coeffs)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def point_table_from_spec(spec: ManifoldSpec):
    """Raw algebra-table block: PointAlgebra data plus optional super structure.

    Returns (table, unit, parity, pairing) with Fractions everywhere;
    parity and pairing are None for a plain commutative table.
    """
    block = spec.table
    if not isinstance(block, dict):
        raise SpecError("spec has no table block")
    try:
        entries = block["entries"]
        unit = [Fraction(x) for x in block["unit"]]
        table = [
            [[Fraction(x) for x in cell] for cell in row] for row in entries
        ]
    except (KeyError, ValueError, TypeError) as exc:
        raise SpecError(f"bad table block: {exc}") from exc
    parity = block.get("parity")
    pairing = block.get("pairing")
    if parity is not None:
        parity = [int(p) for p in parity]
    if pairing is not None:
        try:
            pairing = [[Fraction(x) for x in row] for row in pairing]
        except (ValueError, TypeError) as exc:
            raise SpecError(f"bad pairing block: {exc}") from exc
    return table, unit, parity, pairing


def super_algebra_from_spec(spec: ManifoldSpec) -> SuperFrobeniusAlgebra:
    table, unit, parity, pairing = point_table_from_spec(spec)
    if parity is None or pairing is None:
        raise SpecError("super-algebra analysis needs parity and pairing blocks")
    try:
        return SuperFrobeniusAlgebra(parity, table, pairing, unit)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def points_from_spec(spec: ManifoldSpec) -> Optional[list[tuple[Fraction, ...]]]:
    if spec.sample_points is None:
        return None
    if not spec.sample_points:
        raise SpecError("sample_points must be nonempty when present")
    points = []
    for k, row in enumerate(spec.sample_points):
        if len(row) != spec.n:
            raise SpecError(f"sample point {k + 1} has length {len(row)}, expected {spec.n}")
        try:
            points.append(tuple(Fraction(x) for x in row))
        except (ValueError, TypeError) as exc:
            raise SpecError(f"sample point {k + 1}: {exc}") from exc
    return points


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

PASS = "pass"
FAIL = "fail"
INFO = "info"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    witness: Optional[dict] = None


@dataclass
class Report:
    title: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)
    gb_bases: int = 0
    gb_pairs: int = 0
    extras: dict = field(default_factory=dict)

    def add(self, name: str, status: str, detail: str, witness: Optional[dict] = None):
        self.checks.append(CheckResult(name, status, detail, witness))

    def record_basis(self, gb) -> None:
        self.gb_bases += 1
        self.gb_pairs += gb.pairs_processed

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "seed": self.seed,
            "result": "FAIL" if self.failed else "PASS",
            "exit": self.exit_code,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "detail": c.detail,
                    **({"witness": c.witness} if c.witness else {}),
                }
                for c in self.checks
            ],
            "gb_stats": {"bases": self.gb_bases, "pairs": self.gb_pairs},
            **self.extras,
        }

    def to_text(self) -> str:
        lines = [self.title, f"seed: {self.seed}"]
        for c in self.checks:
            lines.append(f"[{c.status.upper():4s}] {c.name}: {c.detail}")
            if c.witness:
                for key in sorted(c.witness):
                    lines.append(f"       {key}: {c.witness[key]}")
        lines.append(f"gb-stats: bases={self.gb_bases} pairs={self.gb_pairs}")
        lines.append(f"result: {'FAIL' if self.failed else 'PASS'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text()
    raise SpecError(f"unknown format {fmt!r}")
