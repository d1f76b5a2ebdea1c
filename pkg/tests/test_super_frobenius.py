"""Super-Frobenius tables: invariance, odd squares, nilpotent witnesses."""

import random
from fractions import Fraction

import pytest

from fmanifolds import (
    SuperFrobeniusAlgebra,
    exterior_two_odd,
    frobenius_invariance_check,
    odd_nilpotent_witness,
)
from fmanifolds.super_frobenius import EVEN
from helpers import random_super_algebra


@pytest.fixture
def ext():
    return exterior_two_odd()


class TestConstruction:
    def test_supercommutativity_enforced(self, ext):
        table = [list(map(list, row)) for row in ext.table]
        table[1][2][3] = Fraction(5)  # break the sign relation with table[2][1]
        with pytest.raises(ValueError, match="supercommutativity"):
            SuperFrobeniusAlgebra(ext.parity, table, ext.pairing, ext.unit)

    def test_parity_additivity_enforced(self, ext):
        table = [list(map(list, row)) for row in ext.table]
        table[1][2][1] = Fraction(1)  # odd*odd product with an odd component
        table[2][1][1] = Fraction(-1)
        with pytest.raises(ValueError, match="parity"):
            SuperFrobeniusAlgebra(ext.parity, table, ext.pairing, ext.unit)

    def test_degenerate_pairing_rejected(self, ext):
        pairing = [list(row) for row in ext.pairing]
        pairing[0][3] = Fraction(0)
        pairing[3][0] = Fraction(0)
        with pytest.raises(ValueError, match="degenerate"):
            SuperFrobeniusAlgebra(ext.parity, ext.table, pairing, ext.unit)

    def test_odd_unit_rejected(self, ext):
        with pytest.raises(ValueError, match="unit"):
            SuperFrobeniusAlgebra(ext.parity, ext.table, ext.pairing, (0, 1, 0, 0))


class TestInvariance:
    def test_exterior_algebra_passes(self, ext):
        assert frobenius_invariance_check(ext).ok

    def test_one_dimensional_even_algebra(self):
        algebra = SuperFrobeniusAlgebra((EVEN,), [[[1]]], [[1]], [1])
        assert frobenius_invariance_check(algebra).ok

    def test_perturbed_entry_fails_with_witness(self, ext):
        table = [list(map(list, row)) for row in ext.table]
        table[1][2][3] = Fraction(2)
        table[2][1][3] = Fraction(-2)
        perturbed = SuperFrobeniusAlgebra(ext.parity, table, ext.pairing, ext.unit)
        verdict = frobenius_invariance_check(perturbed)
        assert not verdict.ok
        assert verdict.witness == (0, 1, 2)


class TestOddNilpotentWitness:
    def test_theta1(self, ext):
        witness = odd_nilpotent_witness(ext, (0, 1, 0, 0))
        assert witness.delta_prime == (0, 0, 1, 0)
        assert witness.n == (0, 0, 0, 1)
        zero = tuple(Fraction(0) for _ in range(4))
        assert ext.mul(witness.n, witness.n) == zero
        assert ext.pair(witness.n, ext.unit) == 1

    def test_theta_sum(self, ext):
        witness = odd_nilpotent_witness(ext, (0, 1, 1, 0))
        assert witness.n == (0, 0, 0, 1)

    def test_scaled_pairing(self):
        algebra = exterior_two_odd(scale=Fraction(3, 2))
        witness = odd_nilpotent_witness(algebra, (0, 1, 0, 0))
        assert algebra.pair(witness.n, algebra.unit) == 1

    def test_even_delta_rejected(self, ext):
        with pytest.raises(ValueError, match="odd"):
            odd_nilpotent_witness(ext, (1, 0, 0, 0))

    def test_zero_delta_rejected(self, ext):
        with pytest.raises(ValueError, match="nonzero"):
            odd_nilpotent_witness(ext, (0, 0, 0, 0))

    def test_purely_even_algebra_has_no_odd_delta(self):
        algebra = SuperFrobeniusAlgebra(
            (EVEN, EVEN),
            [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            [[2, 0], [0, 2]],
            [1, 0],
        )
        with pytest.raises(ValueError, match="odd"):
            odd_nilpotent_witness(algebra, (0, 1))


class TestRandomizedAlgebras:
    def test_odd_basis_classes_square_to_zero(self):
        rng = random.Random(61)
        for _ in range(25):
            dim = rng.randint(2, 6)
            algebra = random_super_algebra(rng, dim)
            zero = tuple(Fraction(0) for _ in range(dim))
            for i in algebra.odd_indices():
                basis = algebra.basis_vector(i)
                assert algebra.mul(basis, basis) == zero

    def test_odd_combinations_square_to_zero(self):
        rng = random.Random(62)
        for _ in range(10):
            algebra = random_super_algebra(rng, 6)
            odd = algebra.odd_indices()
            if not odd:
                continue
            zero = tuple(Fraction(0) for _ in range(6))
            vec = [Fraction(0)] * 6
            for i in odd:
                vec[i] = Fraction(rng.randint(-3, 3))
            assert algebra.mul(tuple(vec), tuple(vec)) == zero

    def test_pairing_always_nondegenerate(self):
        from fmanifolds import linalg

        rng = random.Random(63)
        for _ in range(10):
            algebra = random_super_algebra(rng, rng.randint(2, 6))
            assert linalg.det(algebra.pairing) != 0
