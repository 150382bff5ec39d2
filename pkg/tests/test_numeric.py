from fractions import Fraction

import pytest

from stirlingb.numeric import binomial, falling_factorial, rising_factorial


def test_falling_factorial_values():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(0, 0) == 1
    assert falling_factorial(3, 5) == 0
    assert falling_factorial(-2, 3) == (-2) * (-3) * (-4)


def test_falling_factorial_rejects_negative_count():
    with pytest.raises(ValueError):
        falling_factorial(4, -1)


def test_rising_factorial_values():
    assert rising_factorial(3, 4) == 3 * 4 * 5 * 6
    assert rising_factorial(7, 0) == 1
    assert rising_factorial(1, 5) == 120


def test_rising_factorial_fraction_argument():
    v = rising_factorial(Fraction(1, 2), 2)
    assert v == Fraction(1, 2) * Fraction(3, 2)


def test_binomial_classical():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(5, 5) == 1
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_binomial_negative_upper():
    # C(-1, n) = (-1)^n, C(-2, n) = (-1)^n (n+1)
    assert [binomial(-1, n) for n in range(5)] == [1, -1, 1, -1, 1]
    assert [binomial(-2, n) for n in range(4)] == [1, -2, 3, -4]


def test_binomial_fractional_upper():
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_binomial_integrality_on_integers():
    for a in range(-6, 7):
        for n in range(7):
            v = binomial(a, n)
            assert isinstance(v, int)
