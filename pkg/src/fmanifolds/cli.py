"""Command-line driver.

Subcommands:

* check          - full verification pipeline for a manifold spec
* example        - emit a built-in family spec as canonical JSON
* euler          - Euler fields from a gradings block
* fiber          - fiber-algebra analysis at points (or of a raw table)
* radical-stable - Poisson stability of the stated radical presentation
* poisson-stable - Poisson stability of the cover ideal itself

Exit codes: 0 all requested checks pass; 1 check failure; 2 spec or
expression parse error; 3 computation budget exceeded.  Stdout is
byte-identical for a fixed (spec, seed); wall-clock timing goes to
stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import spec_io
from .fstructure import (
    ReconstructionError,
    VectorField,
    family1,
    family1_radical,
    is_f_manifold,
    multiplication_from_ideal,
    sample_points,
    spectral_cover_ideal,
    spectral_cover_rank_check,
)
from .groebner import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    ideal_equals,
    verify_radical_presentation,
)
from .point_algebra import (
    PointAlgebra,
    fiber_algebra,
    is_semisimple,
    nilpotency_profile,
    nilradical,
    orthogonal_idempotents,
)
from .poisson import ideal_poisson_stable
from .poly import ParseError, VariableSet
from .euler import euler_fields
from .spec_io import FAIL, INFO, PASS, ManifoldSpec, Report, SpecError, render
from .super_frobenius import frobenius_invariance_check


def _witness_dict(gens, witness) -> dict:
    return {
        "pair": f"({witness.i + 1}, {witness.j + 1})",
        "bracket": witness.describe(gens),
        "remainder": str(witness.remainder),
    }


def _fiber_detail(algebra: PointAlgebra) -> str:
    semi = is_semisimple(algebra)
    rad = nilradical(algebra)
    profile = nilpotency_profile(algebra)
    idem = orthogonal_idempotents(algebra)
    pieces = [
        f"dim {algebra.dim}",
        f"semisimple {'yes' if semi else 'no'}",
        f"nilradical dim {rad.dim}",
        f"nilpotency profile {profile if profile else '[]'}",
        f"local factors {rad.local_factor_count}",
    ]
    if idem.idempotents is not None:
        pieces.append(f"idempotents {len(idem.idempotents)} (explicit)")
    else:
        pieces.append("idempotents count-only")
    return "; ".join(pieces)


def _point_str(point) -> str:
    return "(" + ", ".join(str(x) for x in point) + ")"


def _report_rank(report: Report, rank, n: int, points) -> None:
    good = sum(1 for p in rank.points if p.ok)
    if rank.ok:
        report.add("rank", PASS, f"fiber dimension {n} = n at {good}/{len(points)} points")
    else:
        bad = next(p for p in rank.points if not p.ok)
        report.add(
            "rank", FAIL,
            f"failed at {good}/{len(points)} points; first failure at "
            f"{_point_str(bad.point)}: {bad.reason}",
        )


def run_check(
    spec: ManifoldSpec,
    route: str = "both",
    samples: int = 5,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    vars = spec.vars
    used_seed = spec.seed if seed is None else seed
    report = Report(title="fmanifolds check", seed=used_seed)
    points = spec_io.points_from_spec(spec)
    if points is None:
        points = sample_points(vars, samples, used_seed)

    if spec.mode == "ideal":
        cover = spec_io.ideal_from_spec(spec)
        multiplication = None
        rank = spectral_cover_rank_check(cover, spec.n, samples=points, max_pairs=budget)
        _report_rank(report, rank, spec.n, points)
        if rank.ok:
            try:
                multiplication = multiplication_from_ideal(
                    cover, spec.n, check_rank=False, max_pairs=budget
                )
                report.add("reconstruction", PASS, "structure constants read off; e = d/dt1")
            except ReconstructionError as exc:
                report.add("reconstruction", FAIL, str(exc))
        else:
            report.add("reconstruction", INFO, "skipped (rank check failed)")
    elif spec.mode == "structure_constants":
        multiplication = spec_io.multiplication_from_spec(spec)
        cover = spectral_cover_ideal(multiplication)
        normalized_e = multiplication.e == VectorField.basis(vars, 1)
        rank = spectral_cover_rank_check(
            cover,
            spec.n,
            samples=points,
            require_unit_class=normalized_e,
            max_pairs=budget,
        )
        _report_rank(report, rank, spec.n, points)
    else:
        raise SpecError("check needs a spec with mode 'ideal' or 'structure_constants'")

    if multiplication is not None:
        failures = multiplication.axiom_failures()
        if failures:
            report.add(
                "axioms", FAIL,
                f"{len(failures)} violation(s); first: {failures[0]}",
            )
        else:
            report.add("axioms", PASS, "commutative, associative, unital")

        verdict = is_f_manifold(multiplication, route=route, max_pairs=budget)
        if verdict.identity_ok is not None:
            if verdict.identity_ok:
                n4 = spec.n ** 4
                report.add(
                    "identity-route", PASS,
                    f"all {n4} basis quadruple defects vanish; e-compatibility holds",
                )
            else:
                witness = verdict.identity_witness
                if witness[0] == "defect":
                    _, a, b, c, d, defect = witness
                    report.add(
                        "identity-route", FAIL,
                        f"nonzero defect on basis quadruple ({a}, {b}, {c}, {d})",
                        witness={"quadruple": f"({a}, {b}, {c}, {d})", "defect": str(defect)},
                    )
                else:
                    _, a, b, defect = witness
                    report.add(
                        "identity-route", FAIL,
                        f"e-compatibility fails on basis pair ({a}, {b})",
                        witness={"pair": f"({a}, {b})", "defect": str(defect)},
                    )
        if verdict.spectral_ok is not None:
            stability = verdict.spectral
            report.record_basis(stability.gb)
            if verdict.spectral_ok:
                report.add("spectral-route", PASS, "cover ideal is Poisson stable")
            else:
                report.add(
                    "spectral-route", FAIL,
                    "cover ideal is NOT Poisson stable",
                    witness=_witness_dict(spectral_cover_ideal(multiplication), stability.witness),
                )
        if route == "both":
            if verdict.axioms_ok:
                report.add("routes-agree", PASS, "identity and spectral verdicts coincide")
            else:
                report.add("routes-agree", INFO, "axioms violated; agreement not asserted")

        if spec.mode == "ideal":
            regenerated = spectral_cover_ideal(multiplication)
            if ideal_equals(regenerated, cover, max_pairs=budget):
                report.add("spectral-roundtrip", PASS, "regenerated cover ideal equals the input ideal")
            else:
                report.add("spectral-roundtrip", FAIL, "regenerated cover ideal differs from the input ideal")
        else:
            try:
                rebuilt = multiplication_from_ideal(cover, spec.n, check_rank=False, max_pairs=budget)
                if rank.ok and not failures:
                    if rebuilt == multiplication:
                        report.add("reconstruction-roundtrip", PASS, "multiplication recovered from its cover ideal")
                    else:
                        report.add("reconstruction-roundtrip", FAIL, "recovered multiplication differs")
                else:
                    report.add("reconstruction-roundtrip", INFO, "skipped (rank or axioms failed)")
            except ReconstructionError:
                report.add("reconstruction-roundtrip", INFO, "skipped (identity class is not d/dt1)")

    if spec.mode == "ideal" and spec.radical:
        stated = spec_io.radical_from_spec(spec)
        if verify_radical_presentation(cover, stated, max_pairs=budget):
            report.add("radical", PASS, "stated radical contains the ideal and lies in its radical")
        else:
            report.add("radical", FAIL, "stated radical presentation failed verification")
        stability = ideal_poisson_stable(stated, max_pairs=budget)
        report.record_basis(stability.gb)
        if stability.stable:
            report.add("radical-stability", INFO, "radical is Poisson stable")
        else:
            report.add(
                "radical-stability", INFO,
                f"radical NOT Poisson stable, witness {stability.witness.describe(stated)}",
                witness=_witness_dict(stated, stability.witness),
            )

    fiber_source = multiplication if spec.mode == "structure_constants" else cover
    for point in points:
        try:
            algebra = fiber_algebra(fiber_source, point, max_pairs=budget)
        except ValueError as exc:
            report.add(f"fiber@{_point_str(point)}", INFO, f"not analyzed: {exc}")
            continue
        report.add(f"fiber@{_point_str(point)}", INFO, _fiber_detail(algebra))

    return report


# ---------------------------------------------------------------------------
# example specs
# ---------------------------------------------------------------------------


def build_family1_spec(n: int, rho_exprs: dict[int, str] | None = None, seed: int = 0) -> dict:
    vars = VariableSet(n)
    rho_exprs = dict(rho_exprs or {})
    for index in rho_exprs:
        if not 2 <= index <= n:
            raise SpecError(f"--rho index {index} out of range 2..{n}")
    if not rho_exprs and n >= 3:
        rho_exprs = {2: "t3"}
    rho = [vars.one()]
    rho_strings = {}
    for i in range(2, n + 1):
        src = rho_exprs.get(i, "0")
        poly = vars.parse(src)
        rho.append(poly)
        rho_strings[str(i)] = str(poly)
    cover = family1(vars, rho)
    stated = family1_radical(vars, rho)
    return {
        "family": 1,
        "family_params": {"rho": rho_strings},
        "n": n,
        "mode": "ideal",
        "identity": 1,
        "ideal": [str(g) for g in cover.generators],
        "radical": [str(g) for g in stated.generators],
        "seed": seed,
    }


def _family2_rho_string(n: int) -> str:
    terms = ["t3*y1"] + [f"{k - 1}*t{k + 1}*y{k}" for k in range(3, n)]
    joined = " + ".join(terms)
    return f"({joined})" if len(terms) > 1 else joined


def build_family2_spec(n: int, seed: int = 0) -> dict:
    if n < 3:
        raise SpecError(f"family 2 needs dimension >= 3, got {n}")
    rho = _family2_rho_string(n)
    gens = [
        "y1 - 1",
        f"(y2 - {rho})^2",
        f"(y2 - {rho})*y3",
        f"y3^{n - 1}",
    ]
    gens += [f"y{k} - y3^{k - 2}" for k in range(4, n + 1)]
    radical = ["y1 - 1", "y2 - t3*y1"] + [f"y{k}" for k in range(3, n + 1)]
    return {
        "family": 2,
        "n": n,
        "mode": "ideal",
        "identity": 1,
        "ideal": gens,
        "radical": radical,
        "seed": seed,
    }


def spec_to_bytes(spec_dict: dict) -> bytes:
    return (json.dumps(spec_dict, sort_keys=True, indent=2) + "\n").encode("utf-8")


def cmd_example(args) -> int:
    rho_exprs: dict[int, str] = {}
    for item in args.rho or []:
        if "=" not in item:
            raise SpecError(f"--rho expects I=EXPR, got {item!r}")
        idx, expr = item.split("=", 1)
        try:
            rho_exprs[int(idx)] = expr
        except ValueError:
            raise SpecError(f"--rho expects an integer index, got {idx!r}") from None
    if args.family == 1:
        spec_dict = build_family1_spec(args.n, rho_exprs, seed=args.seed)
    else:
        if rho_exprs:
            raise SpecError("family 2 takes no --rho parameters")
        spec_dict = build_family2_spec(args.n, seed=args.seed)
    # validate round trip before emitting
    spec = spec_io.spec_from_dict(spec_dict)
    spec_io.ideal_from_spec(spec)
    payload = spec_to_bytes(spec_dict)
    if args.output:
        with open(args.output, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    return 0


# ---------------------------------------------------------------------------
# remaining subcommands
# ---------------------------------------------------------------------------


def run_euler(spec: ManifoldSpec) -> Report:
    gr = spec_io.gradings_from_spec(spec)
    result = euler_fields(gr)
    report = Report(title="fmanifolds euler", seed=spec.seed)
    report.add("E1", INFO, str(result.e1))
    report.add("E2", INFO, str(result.e2))
    if result.commutator.is_zero():
        report.add("commutator", PASS, str(result.commutator))
    else:
        report.add("commutator", FAIL, str(result.commutator))
    report.add("proportional", INFO, "true" if result.proportional else "false")
    return report


def run_fiber(
    spec: ManifoldSpec,
    explicit_point: str | None,
    samples: int,
    seed: int | None,
    budget: int,
) -> Report:
    used_seed = spec.seed if seed is None else seed
    report = Report(title="fmanifolds fiber", seed=used_seed)
    if spec.table is not None:
        table, unit, parity, pairing = spec_io.point_table_from_spec(spec)
        if parity is not None and pairing is not None:
            super_algebra = spec_io.super_algebra_from_spec(spec)
            odd = super_algebra.odd_indices()
            report.add(
                "table", INFO,
                f"super table: dim {super_algebra.dim}, odd basis classes {len(odd)}",
            )
            zero = tuple(Fraction(0) for _ in range(super_algebra.dim))
            squares_ok = all(
                super_algebra.mul(
                    super_algebra.basis_vector(i), super_algebra.basis_vector(i)
                )
                == zero
                for i in odd
            )
            report.add(
                "odd-squares", PASS if squares_ok else FAIL,
                "every odd basis class squares to zero" if squares_ok
                else "an odd basis class has nonzero square",
            )
            verdict = frobenius_invariance_check(super_algebra)
            if verdict.ok:
                report.add("pairing-invariance", PASS, "g(a*b, c) = g(a, b*c) on all basis triples")
            else:
                a, b, c = verdict.witness
                report.add(
                    "pairing-invariance", FAIL,
                    f"invariance fails on basis triple ({a + 1}, {b + 1}, {c + 1})",
                )
        else:
            try:
                algebra = PointAlgebra(table, unit)
            except ValueError as exc:
                raise SpecError(f"bad point-algebra table: {exc}") from exc
            report.add("table", INFO, _fiber_detail(algebra))
        return report

    vars = spec.vars
    if spec.mode == "ideal":
        source = spec_io.ideal_from_spec(spec)
    elif spec.mode == "structure_constants":
        source = spec_io.multiplication_from_spec(spec)
    else:
        raise SpecError("fiber needs a table block or a spec with a mode")
    if explicit_point is not None:
        try:
            point = tuple(Fraction(x.strip()) for x in explicit_point.split(","))
        except ValueError as exc:
            raise SpecError(f"bad --point value: {exc}") from exc
        if len(point) != spec.n:
            raise SpecError(f"--point needs {spec.n} coordinates")
        points = [point]
    else:
        points = spec_io.points_from_spec(spec)
        if points is None:
            points = sample_points(vars, samples, used_seed)
    for point in points:
        try:
            algebra = fiber_algebra(source, point, max_pairs=budget)
        except ValueError as exc:
            report.add(f"fiber@{_point_str(point)}", FAIL, str(exc))
            continue
        report.add(f"fiber@{_point_str(point)}", INFO, _fiber_detail(algebra))
    return report


def run_radical_stable(spec: ManifoldSpec, budget: int) -> Report:
    if spec.mode != "ideal":
        raise SpecError("radical-stable needs an ideal-mode spec")
    stated = spec_io.radical_from_spec(spec)
    if stated is None:
        raise SpecError("radical-stable needs a 'radical' block in the spec")
    report = Report(title="fmanifolds radical-stable", seed=spec.seed)
    cover = spec_io.ideal_from_spec(spec)
    if verify_radical_presentation(cover, stated, max_pairs=budget):
        report.add("radical", PASS, "stated radical contains the ideal and lies in its radical")
    else:
        report.add("radical", FAIL, "stated radical presentation failed verification")
    stability = ideal_poisson_stable(stated, max_pairs=budget)
    report.record_basis(stability.gb)
    if stability.stable:
        report.add("radical-stability", PASS, "radical is Poisson stable")
    else:
        report.add(
            "radical-stability", FAIL,
            f"radical NOT Poisson stable, witness {stability.witness.describe(stated)}",
            witness=_witness_dict(stated, stability.witness),
        )
    return report


def run_poisson_stable(spec: ManifoldSpec, budget: int) -> Report:
    if spec.mode == "ideal":
        cover = spec_io.ideal_from_spec(spec)
    elif spec.mode == "structure_constants":
        cover = spectral_cover_ideal(spec_io.multiplication_from_spec(spec))
    else:
        raise SpecError("poisson-stable needs a spec with a mode")
    report = Report(title="fmanifolds poisson-stable", seed=spec.seed)
    stability = ideal_poisson_stable(cover, max_pairs=budget)
    report.record_basis(stability.gb)
    if stability.stable:
        report.add("poisson-stability", PASS, "ideal is Poisson stable")
    else:
        report.add(
            "poisson-stability", FAIL,
            f"ideal NOT Poisson stable, witness {stability.witness.describe(cover)}",
            witness=_witness_dict(cover, stability.witness),
        )
    return report


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, with_route: bool = False) -> None:
    if with_route:
        parser.add_argument(
            "--route", choices=("identity", "spectral", "both"), default="both"
        )
    parser.add_argument("--samples", type=int, default=5)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmanifolds",
        description="Exact checks for multiplications on the tangent sheaf",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the full verification pipeline")
    p_check.add_argument("spec")
    _add_common(p_check, with_route=True)

    p_example = sub.add_parser("example", help="emit a built-in family spec")
    p_example.add_argument("family", type=int, choices=(1, 2))
    p_example.add_argument("--n", type=int, required=True)
    p_example.add_argument("--rho", action="append", metavar="I=EXPR")
    p_example.add_argument("--seed", type=int, default=0)
    p_example.add_argument("-o", "--output")

    p_euler = sub.add_parser("euler", help="Euler fields from grading data")
    p_euler.add_argument("spec")
    p_euler.add_argument("--format", choices=("text", "json"), default="text")

    p_fiber = sub.add_parser("fiber", help="fiber-algebra analysis")
    p_fiber.add_argument("spec")
    p_fiber.add_argument("--point", help="comma-separated rational coordinates")
    _add_common(p_fiber)

    p_rad = sub.add_parser("radical-stable", help="Poisson stability of the stated radical")
    p_rad.add_argument("spec")
    p_rad.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_rad.add_argument("--format", choices=("text", "json"), default="text")

    p_poi = sub.add_parser("poisson-stable", help="Poisson stability of the cover ideal")
    p_poi.add_argument("spec")
    p_poi.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_poi.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        if args.command == "example":
            return cmd_example(args)
        spec = spec_io.load_spec(args.spec)
        if args.command == "check":
            report = run_check(
                spec,
                route=args.route,
                samples=args.samples,
                seed=args.seed,
                budget=args.budget,
            )
        elif args.command == "euler":
            report = run_euler(spec)
        elif args.command == "fiber":
            report = run_fiber(spec, args.point, args.samples, args.seed, args.budget)
        elif args.command == "radical-stable":
            report = run_radical_stable(spec, args.budget)
        elif args.command == "poisson-stable":
            report = run_poisson_stable(spec, args.budget)
        else:  # pragma: no cover
            raise SpecError(f"unknown command {args.command!r}")
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SpecError, ParseError, ValueError) as exc:
        # bad spec content, bad expressions, bad parameters
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    elapsed = int((time.monotonic() - started) * 1000)
    print(f"elapsed: {elapsed} ms", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
