import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinbars.algnum import AlgNum, I, ONE, ZERO, squarefree_split


def sqrt(m):
    return AlgNum.sqrt_int(m)


class TestBasics:
    def test_radical_reduction(self):
        assert sqrt(2) * sqrt(2) == AlgNum.from_rational(2)

    def test_i_squared(self):
        assert I * I == AlgNum.from_rational(-1)

    def test_squarefree_merge(self):
        assert sqrt(2) * sqrt(3) == sqrt(6)
        assert sqrt(8) == 2 * sqrt(2)
        assert sqrt(12) * sqrt(3) == AlgNum.from_rational(6)

    def test_squarefree_split(self):
        assert squarefree_split(1) == (1, 1)
        assert squarefree_split(12) == (2, 3)
        assert squarefree_split(49) == (7, 1)
        with pytest.raises(ValueError):
            squarefree_split(0)

    def test_conjugation(self):
        v = ONE + 2 * I + sqrt(5)
        assert v.conjugate() == ONE - 2 * I + sqrt(5)
        assert v.conjugate().conjugate() == v

    def test_rational_interface(self):
        assert AlgNum.from_rational(Fraction(3, 2)).as_rational() == Fraction(3, 2)
        assert ZERO.as_rational() == 0
        with pytest.raises(ValueError):
            (ONE + I).as_rational()

    def test_equality_is_exact(self):
        assert sqrt(2) + sqrt(3) != sqrt(5)
        assert sqrt(2) - sqrt(2) == 0
        assert AlgNum.from_rational(Fraction(1, 3)) * 3 == ONE

    def test_i_power(self):
        assert AlgNum.i_power(0) == ONE
        assert AlgNum.i_power(1) == I
        assert AlgNum.i_power(2) == -ONE
        assert AlgNum.i_power(7) == -I

    def test_json(self):
        v = AlgNum.from_rational(Fraction(1, 2)) + 3 * I * sqrt(2)
        assert v.to_json() == {"re": [[1, 2, 1]], "im": [[3, 1, 2]]}


def random_algnum(rng):
    terms = {}
    for _ in range(rng.randrange(0, 4)):
        d = rng.choice([1, 2, 3, 5, 6])
        e = rng.randrange(2)
        terms[(d, e)] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return AlgNum(terms)


class TestRingLaws:
    def test_randomized_associativity_and_conjugation(self):
        rng = random.Random(20240817)
        for _ in range(10_000):
            a, b, c = (random_algnum(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()

    @given(st.integers(1, 60), st.integers(1, 60))
    @settings(max_examples=80, deadline=None)
    def test_sqrt_multiplicativity(self, a, b):
        assert sqrt(a) * sqrt(b) == sqrt(a * b)

    @given(st.integers(-8, 8), st.integers(-8, 8), st.integers(1, 30))
    @settings(max_examples=80, deadline=None)
    def test_distributivity(self, x, y, d):
        u = AlgNum.from_rational(x) + sqrt(d) * I
        v = AlgNum.from_rational(y) + sqrt(d)
        w = I + sqrt(2)
        assert (u + v) * w == u * w + v * w
