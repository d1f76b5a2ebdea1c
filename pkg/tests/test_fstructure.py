"""Multiplications, the structure identity, cover ideals, and the families."""

import random
from fractions import Fraction

import pytest

from fmanifolds import (
    FMultiplication,
    ReconstructionError,
    VariableSet,
    VectorField,
    buchberger,
    e_compatibility_defect,
    family1,
    family2,
    family2_radical,
    fiber_algebra,
    ideal,
    ideal_contains,
    ideal_equals,
    identity_defect,
    is_f_manifold,
    lie_bracket,
    multiplication_from_ideal,
    multiply_fields,
    sample_points,
    semisimple_model,
    spectral_cover_ideal,
    spectral_cover_rank_check,
    structure_identity_defect,
)
from fmanifolds.corpus import build_corpus, dim2_multiplication, square_zero_multiplication
from helpers import random_poly


@pytest.fixture
def v3():
    return VariableSet(3)


@pytest.fixture
def fam1_mult(v3):
    J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
    return multiplication_from_ideal(J, 3, check_rank=False)


def corrupted_family1(v3) -> FMultiplication:
    """Family-1 table with C_22 perturbed by t1 on the d1 slot."""
    J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
    m = multiplication_from_ideal(J, 3, check_rank=False)
    table = [list(row) for row in m.table]
    bumped = table[1][1] + VectorField(v3, [v3.t(1), v3.zero(), v3.zero()])
    table[1][1] = bumped
    return FMultiplication(v3, table, m.e)


class TestMultiplyFields:
    def test_identity_field(self, fam1_mult, v3):
        rng = random.Random(31)
        x = VectorField(v3, [random_poly(rng, v3, t_only=True) for _ in range(3)])
        assert multiply_fields(fam1_mult, fam1_mult.e, x) == x

    def test_semisimple_off_diagonal_vanishes(self, v3):
        m = semisimple_model(v3)
        for a in range(1, 4):
            for b in range(1, 4):
                product = m.basis_product(a, b)
                if a == b:
                    assert product == VectorField.basis(v3, a)
                else:
                    assert product.is_zero()

    def test_family1_pair_product(self, v3, fam1_mult):
        # rho2 = t3, rho3 = 0: d2 o d3 = rho3 d2 + rho2 d3 - rho2 rho3 d1 = t3 d3
        expected = VectorField(v3, [v3.zero(), v3.zero(), v3.t(3)])
        assert fam1_mult.basis_product(2, 3) == expected
        # membership oracle for the same relation
        J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
        gb = buchberger(J)
        relation = v3.y(2) * v3.y(3) - expected.symbol()
        assert ideal_contains(relation, gb)


class TestLieBracket:
    def test_coordinate_fields_commute(self, v3):
        assert lie_bracket(VectorField.basis(v3, 1), VectorField.basis(v3, 2)).is_zero()

    def test_hand_example(self, v3):
        x = VectorField(v3, [v3.t(2), v3.zero(), v3.zero()])
        y = VectorField.basis(v3, 2)
        assert lie_bracket(x, y) == VectorField(v3, [-v3.one(), v3.zero(), v3.zero()])

    def test_antisymmetry_on_self(self, v3):
        rng = random.Random(32)
        x = VectorField(v3, [random_poly(rng, v3, t_only=True) for _ in range(3)])
        assert lie_bracket(x, x).is_zero()

    def test_jacobi(self, v3):
        rng = random.Random(33)
        for _ in range(8):
            fields = [
                VectorField(
                    v3,
                    [random_poly(rng, v3, t_only=True, max_terms=2) for _ in range(3)],
                )
                for _ in range(3)
            ]
            x, y, z = fields
            total = (
                lie_bracket(x, lie_bracket(y, z))
                + lie_bracket(y, lie_bracket(z, x))
                + lie_bracket(z, lie_bracket(x, y))
            )
            assert total.is_zero()


class TestStructureIdentity:
    def test_semisimple_model_flat(self, v3):
        m = semisimple_model(v3)
        for a in range(1, 4):
            for b in range(1, 4):
                for c in range(1, 4):
                    for d in range(1, 4):
                        assert structure_identity_defect(m, a, b, c, d).is_zero()

    def test_family2_reconstruction_flat(self, v3):
        m = multiplication_from_ideal(family2(v3), 3, check_rank=False)
        for a in range(1, 4):
            for b in range(1, 4):
                for c in range(1, 4):
                    for d in range(1, 4):
                        assert structure_identity_defect(m, a, b, c, d).is_zero()

    def test_corrupted_multiplication_has_defect(self, v3):
        m = corrupted_family1(v3)
        defects = [
            structure_identity_defect(m, a, b, c, d)
            for a in range(1, 4)
            for b in range(1, 4)
            for c in range(1, 4)
            for d in range(1, 4)
        ]
        assert any(not d.is_zero() for d in defects)

    def test_polylinearity_spot_check(self, v3, fam1_mult):
        rng = random.Random(34)
        f = random_poly(rng, v3, t_only=True, max_terms=2)
        base = [VectorField.basis(v3, i) for i in (2, 3, 2, 3)]
        scaled = identity_defect(
            fam1_mult, base[0].scale(f), base[1], base[2], base[3]
        )
        plain = identity_defect(fam1_mult, *base)
        assert scaled == plain.scale(f)

    def test_e_compatibility(self, v3, fam1_mult):
        for a in range(1, 4):
            for b in range(1, 4):
                assert e_compatibility_defect(fam1_mult, a, b).is_zero()


class TestIsFManifold:
    def test_semisimple_both_routes(self, v3):
        verdict = is_f_manifold(semisimple_model(v3), "both")
        assert verdict.is_f and verdict.identity_ok and verdict.spectral_ok

    def test_family1_with_asymmetric_shift(self, v3, fam1_mult):
        # d3 rho2 = 1 != 0 = d2 rho3: J stable even though the radical is not
        verdict = is_f_manifold(fam1_mult, "both")
        assert verdict.is_f

    def test_corrupted_not_f_by_both_routes(self, v3):
        m = corrupted_family1(v3)
        identity = is_f_manifold(m, "identity")
        spectral = is_f_manifold(m, "spectral")
        assert not identity.is_f and identity.identity_ok is False
        assert not spectral.is_f and spectral.spectral_ok is False
        assert not identity.axioms_ok

    def test_unknown_route_rejected(self, v3):
        with pytest.raises(ValueError):
            is_f_manifold(semisimple_model(v3), "sideways")


class TestSpectralCoverIdeal:
    def test_semisimple_n2_matches_idempotent_relations(self):
        v2 = VariableSet(2)
        cover = spectral_cover_ideal(semisimple_model(v2))
        assert len(cover.generators) == 4
        expected = ideal(
            [
                v2.y(1) + v2.y(2) - 1,
                v2.y(1) ** 2 - v2.y(1),
                v2.y(2) ** 2 - v2.y(2),
                v2.y(1) * v2.y(2),
            ]
        )
        assert ideal_equals(cover, expected)

    def test_family1_round_trip(self, v3, fam1_mult):
        J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
        assert ideal_equals(spectral_cover_ideal(fam1_mult), J)

    def test_dimension_one(self):
        v1 = VariableSet(1)
        m = multiplication_from_ideal(ideal([v1.y(1) - 1]), 1, check_rank=False)
        assert m.e == VectorField.basis(v1, 1)
        cover = spectral_cover_ideal(m)
        assert ideal_equals(cover, ideal([v1.y(1) - 1]))
        assert buchberger(cover).basis == (v1.y(1) - 1,)


class TestMultiplicationFromIdeal:
    def test_family1_structure_constants(self, v3, fam1_mult):
        # C_22 read from y2^2 = 2 rho2 y2 - rho2^2
        expected = VectorField(v3, [-(v3.t(3) ** 2), 2 * v3.t(3), v3.zero()])
        assert fam1_mult.basis_product(2, 2) == expected

    def test_family2_point_relations(self, v3):
        m = multiplication_from_ideal(family2(v3), 3, check_rank=False)
        algebra = fiber_algebra(m, [Fraction(1, 2), -2, 3])
        # x2 = class(y2 - rho2), x3 = class(y3): all pairwise products vanish
        t3 = Fraction(3)
        one = algebra.unit
        x2 = tuple(
            a - t3 * b
            for a, b in zip(algebra.basis_vector(1), algebra.basis_vector(0))
        )
        x3 = algebra.basis_vector(2)
        zero = tuple(Fraction(0) for _ in range(3))
        assert algebra.mul(x2, x2) == zero
        assert algebra.mul(x2, x3) == zero
        assert algebra.mul(x3, x3) == zero
        assert one == algebra.basis_vector(0)

    def test_trivial_dimension_one(self):
        v1 = VariableSet(1)
        m = multiplication_from_ideal(ideal([v1.y(1) - 1]), 1, check_rank=False)
        assert m.basis_product(1, 1) == VectorField.basis(v1, 1)

    def test_missing_identity_class_rejected(self, v3):
        with pytest.raises(ReconstructionError):
            multiplication_from_ideal(
                ideal([v3.y(1) ** 2 - 1, v3.y(2), v3.y(3)]), 3, check_rank=False
            )

    def test_nonlinear_normal_form_rejected(self):
        # (y1 - 1) alone leaves y2^2 irreducible, so no structure constant exists
        v2 = VariableSet(2)
        with pytest.raises(ReconstructionError, match="monomial basis"):
            multiplication_from_ideal(ideal([v2.y(1) - 1]), 2, check_rank=False)

    def test_rank_precondition_enforced(self):
        v2 = VariableSet(2)
        with pytest.raises(ReconstructionError, match="rank check failed"):
            multiplication_from_ideal(ideal([v2.y(1) - 1, v2.y(2)]), 2)

    def test_round_trip_on_corpus_sample(self):
        for entry in build_corpus(seed=5, random_dim2=4, random_dim3=4):
            m = entry.multiplication
            if m.e != VectorField.basis(m.vars, 1):
                continue
            cover = spectral_cover_ideal(m)
            rank = spectral_cover_rank_check(cover, m.n, count=3, seed=9)
            if not rank.ok:
                continue
            rebuilt = multiplication_from_ideal(cover, m.n, check_rank=False)
            assert rebuilt == m, entry.label


class TestRankCheck:
    def test_family1_passes(self, v3):
        J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
        result = spectral_cover_rank_check(J, 3)
        assert result.ok
        assert all(p.dim == 3 for p in result.points)

    def test_family2_n4_passes(self):
        v4 = VariableSet(4)
        result = spectral_cover_rank_check(family2(v4), 4)
        assert result.ok
        assert all(p.dim == 4 for p in result.points)

    def test_collapsed_ideal_fails(self):
        v2 = VariableSet(2)
        result = spectral_cover_rank_check(ideal([v2.y(1) - 1, v2.y(2)]), 2)
        assert not result.ok
        assert result.points[0].dim == 1

    def test_sample_points_deterministic(self, v3):
        assert sample_points(v3, 5, 7) == sample_points(v3, 5, 7)
        assert sample_points(v3, 5, 7) != sample_points(v3, 5, 8)


class TestFamilies:
    def test_family1_generator_count(self, v3):
        J = family1(v3, [v3.one(), v3.t(3), v3.zero()])
        assert len(J.generators) == 4

    def test_family1_parameter_validation(self, v3):
        with pytest.raises(ValueError, match="rho_1"):
            family1(v3, [v3.t(2), v3.t(3), v3.zero()])
        with pytest.raises(ValueError, match="t1"):
            family1(v3, [v3.one(), v3.t(1), v3.zero()])
        with pytest.raises(ValueError, match="t-variables"):
            family1(v3, [v3.one(), v3.y(2), v3.zero()])

    def test_family2_n3_literal_generators(self, v3):
        J = family2(v3)
        u = v3.y(2) - v3.t(3) * v3.y(1)
        assert J.generators == (
            v3.y(1) - 1,
            u * u,
            u * v3.y(3),
            v3.y(3) ** 2,
        )

    def test_family2_n4_has_chain_generator(self):
        v4 = VariableSet(4)
        J = family2(v4)
        assert len(J.generators) == 5
        rho = v4.t(3) * v4.y(1) + 2 * v4.t(4) * v4.y(3)
        assert J.generators[1] == (v4.y(2) - rho) ** 2
        assert J.generators[4] == v4.y(4) - v4.y(3) ** 2

    def test_family2_needs_dimension_three(self):
        with pytest.raises(ValueError):
            family2(VariableSet(2))

    def test_family2_n4_chain_constant(self):
        # y3 * y3 = y4 in the quotient, so d3 o d3 is the next chain field
        v4 = VariableSet(4)
        m = multiplication_from_ideal(family2(v4), 4, check_rank=False)
        assert m.basis_product(3, 3) == VectorField.basis(v4, 4)
        assert m.basis_product(3, 4).is_zero()

    def test_family2_radical_presentation(self, v3):
        stated = family2_radical(v3)
        assert stated.generators == (
            v3.y(1) - 1,
            v3.y(2) - v3.t(3) * v3.y(1),
            v3.y(3),
        )


class TestCorpusAgreement:
    def test_small_corpus_routes_agree(self):
        entries = build_corpus(seed=3, random_dim2=6, random_dim3=4)
        for entry in entries:
            assert not entry.multiplication.axiom_failures(), entry.label
            verdict = is_f_manifold(entry.multiplication, "both")
            assert verdict.identity_ok == verdict.spectral_ok, entry.label
            if entry.expected_f is not None:
                assert verdict.is_f == entry.expected_f, entry.label


class TestAxiomChecking:
    def test_corrupted_table_fails_associativity(self, v3):
        failures = corrupted_family1(v3).axiom_failures()
        assert any("associativity" in f for f in failures)

    def test_square_zero_shape_always_valid(self, v3):
        rng = random.Random(35)
        for _ in range(5):
            shifts = [
                random_poly(rng, v3, t_only=True, max_terms=2),
                random_poly(rng, v3, t_only=True, max_terms=2),
            ]
            m = square_zero_multiplication(v3, shifts)
            assert not m.axiom_failures()

    def test_dim2_shape_always_valid(self):
        v2 = VariableSet(2)
        rng = random.Random(36)
        for _ in range(5):
            f = random_poly(rng, v2, t_only=True)
            g = random_poly(rng, v2, t_only=True)
            assert not dim2_multiplication(v2, f, g).axiom_failures()


class TestFieldConstruction:
    def test_symbol_round_trip(self, v3):
        rng = random.Random(37)
        for _ in range(10):
            x = VectorField(v3, [random_poly(rng, v3, t_only=True) for _ in range(3)])
            assert VectorField.from_symbol(v3, x.symbol()) == x

    def test_nonlinear_symbol_rejected(self, v3):
        with pytest.raises(ValueError, match="symbol"):
            VectorField.from_symbol(v3, v3.y(1) * v3.y(2))
        with pytest.raises(ValueError, match="symbol"):
            VectorField.from_symbol(v3, v3.y(1) + v3.t(1))

    def test_y_coefficients_rejected(self, v3):
        with pytest.raises(ValueError, match="t-variables"):
            VectorField(v3, [v3.y(1), v3.zero(), v3.zero()])

    def test_table_shape_validated(self, v3):
        d1 = VectorField.basis(v3, 1)
        with pytest.raises(ValueError, match="3x3"):
            FMultiplication(v3, [[d1]], d1)
