"""Euler fields from grading data: commutation and proportionality."""

import random
from fractions import Fraction

import pytest

from fmanifolds import euler_fields, field_commutator, grading_data
from fmanifolds.euler import EulerField


def random_grading(rng: random.Random, force_offdiag: bool | None = None):
    """Random bidegree list always containing the (0,0) unit class."""
    size = rng.randint(2, 6)
    degrees = [(0, 0)]
    for _ in range(size - 1):
        p = rng.randint(0, 3)
        if force_offdiag is False:
            q = p
        else:
            q = rng.randint(0, 3)
        degrees.append((p, q))
    if force_offdiag and all(p == q for p, q in degrees):
        degrees.append((2, 0))
    r = [
        Fraction(rng.randint(-3, 3)) if (p, q) == (1, 1) else Fraction(0)
        for p, q in degrees
    ]
    return grading_data(degrees, r)


class TestEulerFields:
    def test_commutator_always_zero(self):
        rng = random.Random(51)
        for _ in range(25):
            gr = random_grading(rng)
            report = euler_fields(gr)
            assert report.commutator.is_zero()

    def test_diagonal_grading_gives_equal_fields(self):
        rng = random.Random(52)
        for _ in range(10):
            gr = random_grading(rng, force_offdiag=False)
            report = euler_fields(gr)
            assert report.e1 == report.e2
            assert report.proportional

    def test_off_diagonal_class_breaks_proportionality(self):
        rng = random.Random(53)
        for _ in range(10):
            gr = random_grading(rng, force_offdiag=True)
            report = euler_fields(gr)
            assert not report.proportional

    def test_weights(self):
        gr = grading_data([(0, 0), (1, 1)], [0, 2])
        report = euler_fields(gr)
        assert report.e1.weight == 1
        assert report.e2.weight == 1

    def test_empty_grading_rejected(self):
        with pytest.raises(ValueError):
            grading_data([])

    def test_r_support_validated(self):
        with pytest.raises(ValueError):
            grading_data([(0, 0), (2, 0)], [0, 1])

    def test_negative_bidegree_rejected(self):
        with pytest.raises(ValueError):
            grading_data([(0, -1)])


class TestCommutatorFormula:
    def test_nontrivial_affine_fields(self):
        # X = x2 D1, Y = x1 D2: [X, Y] = -x1 D1 + x2 D2
        x = EulerField(
            ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0))),
            (Fraction(0), Fraction(0)),
            Fraction(1),
        )
        y = EulerField(
            ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))),
            (Fraction(0), Fraction(0)),
            Fraction(1),
        )
        bracket = field_commutator(x, y)
        assert bracket.linear == (
            (Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        )
        assert bracket.constant == (Fraction(0), Fraction(0))

    def test_constant_parts(self):
        # X = D1, Y = x1 D1: [X, Y] = D1
        x = EulerField(((Fraction(0),),), (Fraction(1),), Fraction(1))
        y = EulerField(((Fraction(1),),), (Fraction(0),), Fraction(1))
        bracket = field_commutator(x, y)
        assert bracket.linear == ((Fraction(0),),)
        assert bracket.constant == (Fraction(1),)
