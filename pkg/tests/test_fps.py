from fractions import Fraction
from math import factorial

import pytest

from stirlingb.fps import FormalPowerSeries as FPS


def geom(order):
    # 1/(1-x)
    return FPS.from_coeffs([1, -1], order).reciprocal()


def test_from_coeffs_pads_and_truncates():
    s = FPS.from_coeffs([1, 2], 4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    t = FPS.from_coeffs([1, 2, 3, 4], 1)
    assert t.coeffs == (1, 2)
    assert all(isinstance(c, Fraction) for c in s.coeffs)


def test_coeff_bounds():
    s = FPS.from_coeffs([1, 2, 3])
    assert s.coeff(-1) == 0
    assert s.coeff(2) == 3
    with pytest.raises(ValueError, match="beyond truncation order"):
        s.coeff(3)


def test_constructors():
    assert FPS.zero(3).coeffs == (0, 0, 0, 0)
    assert FPS.one(2).coeffs == (1, 0, 0)
    assert FPS.x(2).coeffs == (0, 1, 0)
    assert FPS.constant(Fraction(1, 3), 1).coeffs == (Fraction(1, 3), 0)


def test_arithmetic_and_scalars():
    a = FPS.from_coeffs([1, 2, 3])
    b = FPS.from_coeffs([0, 1, 1])
    assert (a + b).coeffs == (1, 3, 4)
    assert (a - b).coeffs == (1, 1, 2)
    assert (-a).coeffs == (-1, -2, -3)
    assert (2 * a).coeffs == (2, 4, 6)
    assert (a + 1).coeffs == (2, 2, 3)
    assert (1 - a).coeffs == (0, -2, -3)


def test_mul_truncates_to_min_order():
    a = FPS.from_coeffs([1, 1], 5)
    b = FPS.from_coeffs([1, -1], 2)
    assert (a * b).coeffs == (1, 0, -1)


def test_reciprocal_geometric():
    assert geom(5).coeffs == (1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        FPS.x(3).reciprocal()


def test_pow():
    s = FPS.from_coeffs([1, 1], 4)
    assert (s**3).coeffs == (1, 3, 3, 1, 0)
    assert (s**0).coeffs == FPS.one(4).coeffs
    inv = s**-1
    assert (inv * s).coeffs == FPS.one(4).coeffs


def test_compose():
    outer = geom(4)
    inner = FPS.from_coeffs([0, 2], 4)
    # 1/(1-2x)
    assert outer.compose(inner).coeffs == (1, 2, 4, 8, 16)
    with pytest.raises(ValueError):
        outer.compose(FPS.one(4))


def test_revert_moebius():
    # the compositional inverse of z/(1-z) is z/(1+z)
    f = FPS.x(6) * geom(6)
    fbar = f.revert()
    expected = FPS.x(6) * FPS.from_coeffs([1, 1], 6).reciprocal()
    assert fbar.coeffs == expected.coeffs
    assert f.compose(fbar).coeffs == FPS.x(6).coeffs
    assert fbar.compose(f).coeffs == FPS.x(6).coeffs


def test_revert_requirements():
    with pytest.raises(ValueError):
        FPS.from_coeffs([1, 1], 3).revert()
    with pytest.raises(ValueError):
        FPS.from_coeffs([0, 0, 1], 3).revert()


def test_log_exp_roundtrip():
    s = FPS.from_coeffs([1, 3, -2, 5], 8)
    assert s.log().exp().coeffs == s.coeffs
    t = FPS.from_coeffs([0, 1, 1, -4], 8)
    assert t.exp().log().coeffs == t.coeffs


def test_exp_series():
    e = FPS.x(6).exp()
    assert [e.coeff(n) for n in range(7)] == [Fraction(1, factorial(n)) for n in range(7)]


def test_log_geometric():
    # log(1/(1-x)) = sum x^k/k
    s = geom(6).log()
    assert [s.coeff(n) for n in range(1, 7)] == [Fraction(1, n) for n in range(1, 7)]


def test_derivative_integral():
    s = FPS.from_coeffs([4, 1, 2, 3], 3)
    assert s.derivative().coeffs == (1, 4, 9)
    assert s.derivative().integral(4).coeffs == (4, 1, 2, 3)


def test_scale_arg():
    s = FPS.from_coeffs([1, 1, 1, 1], 3)
    assert s.scale_arg(-1).coeffs == (1, -1, 1, -1)
    assert s.scale_arg(2).coeffs == (1, 2, 4, 8)


def test_egf_coeff():
    s = FPS.from_coeffs([1, 1, Fraction(5, 2)], 2)
    assert s.egf_coeff(2) == 5


def test_truncate_and_prefix():
    s = FPS.from_coeffs([1, 2, 3, 4], 3)
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError, match="cannot extend"):
        s.truncate(5)
    assert s.prefix(2) == (1, 2, 3)
