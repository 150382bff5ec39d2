"""Exact scalar helpers.

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction`` (always in lowest terms, positive denominator).
Everything in this package is exact; floating point only ever appears at
display time in the CLI and in test tolerances.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["binomial", "falling_factorial", "rising_factorial"]


def falling_factorial(a, n: int):
    """a * (a-1) * ... * (a-n+1), with n factors.  n=0 gives 1.

    ``a`` may be any integer or Fraction, including negative values.
    """
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0, got n=%r" % (n,))
    out = a ** 0  # 1 of the same type as a
    for i in range(n):
        out *= a - i
    return out


def rising_factorial(a, n: int):
    """a * (a+1) * ... * (a+n-1), with n factors.  n=0 gives 1."""
    if n < 0:
        raise ValueError("rising_factorial needs n >= 0, got n=%r" % (n,))
    out = a ** 0
    for i in range(n):
        out *= a + i
    return out


def binomial(a, n: int):
    """Generalized binomial coefficient C(a, n) = a^(n-falling) / n!.

    The upper argument may be negative (e.g. C(-1, n) = (-1)**n); the lower
    argument must be an integer and C(a, n) = 0 for n < 0.  For integer ``a``
    the result is an int, otherwise a Fraction.
    """
    if n < 0:
        return 0
    num = falling_factorial(a, n)
    den = 1
    for i in range(2, n + 1):
        den *= i
    if isinstance(num, int):
        q, rem = divmod(num, den)
        if rem:  # cannot happen for integer a; guard anyway
            return Fraction(num, den)
        return q
    return Fraction(num, den)
