"""Truncated formal power series over exact rationals.

A series carries its coefficients 0..order as Fractions.  Coefficients beyond
the truncation order are *undefined*, never assumed zero: every arithmetic
result carries the minimum order of its operands, and asking for a
coefficient beyond the order raises.

Exponential generating function conventions: a sequence a_n with egf A(z)
has a_n = n! * [z^n] A(z), see ``egf_coeff``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

__all__ = ["FormalPowerSeries"]

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("exact coefficient expected (int or Fraction), got %r" % (x,))


@dataclass(frozen=True)
class FormalPowerSeries:
    coeffs: tuple[Fraction, ...]  # coeffs[k] = [z^k]; len(coeffs) == order + 1

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, seq: Iterable, order: int | None = None) -> "FormalPowerSeries":
        """Series with the given low-order coefficients.

        If ``order`` exceeds the data, the remaining coefficients are declared
        zero by the caller; if it is smaller, the data is truncated.
        """
        cs = [_frac(c) for c in seq]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list and no order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "FormalPowerSeries":
        return cls.from_coeffs([0], order)

    @classmethod
    def one(cls, order: int) -> "FormalPowerSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def x(cls, order: int) -> "FormalPowerSeries":
        """The series z (identity for composition)."""
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "FormalPowerSeries":
        return cls.from_coeffs([c], order)

    # -- basic queries ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise ValueError(
                "coefficient %d beyond truncation order %d" % (n, self.order)
            )
        return self.coeffs[n]

    def egf_coeff(self, n: int):
        """n! * [z^n], i.e. the n-th term of the sequence with this egf."""
        return factorial(n) * self.coeff(n)

    def truncate(self, order: int) -> "FormalPowerSeries":
        if order > self.order:
            raise ValueError(
                "cannot extend truncation order %d to %d" % (self.order, order)
            )
        return FormalPowerSeries(self.coeffs[: order + 1])

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "FormalPowerSeries | None":
        if isinstance(other, FormalPowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return FormalPowerSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return FormalPowerSeries(
            tuple(self.coeffs[k] + o.coeffs[k] for k in range(n + 1))
        )

    __radd__ = __add__

    def __neg__(self):
        return FormalPowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return FormalPowerSeries(tuple(c * a for a in self.coeffs))
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(min(len(a), n + 1)):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b), n + 1 - i)):
                if b[j]:
                    out[i + j] += ai * b[j]
        return FormalPowerSeries(tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> "FormalPowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = Fraction(0)
            for j in range(1, min(n, len(a) - 1) + 1):
                if a[j]:
                    s += a[j] * out[n - j]
            out.append(-inv0 * s)
        return FormalPowerSeries(tuple(out))

    def __pow__(self, k: int) -> "FormalPowerSeries":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.reciprocal()
        k = abs(k)
        result = FormalPowerSeries.one(self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- composition and reversion -------------------------------------------

    def compose(self, inner: "FormalPowerSeries") -> "FormalPowerSeries":
        """self(inner); requires inner(0) = 0."""
        if inner.coeff(0) != 0:
            raise ValueError("composition requires inner constant term 0")
        n = min(self.order, inner.order)
        result = FormalPowerSeries.constant(self.coeffs[min(n, self.order)], n)
        # Horner evaluation from the top coefficient down
        for k in range(n - 1, -1, -1):
            result = result * inner.truncate(n) + self.coeffs[k]
        return result

    def revert(self) -> "FormalPowerSeries":
        """Compositional inverse fbar with self(fbar) = z.

        Requires constant term 0 and a unit linear coefficient (nonzero).
        Solved coefficient by coefficient: once fbar is known below order m,
        the z^m coefficient of self(fbar) is linear in fbar_m with slope
        self_1, so each residual determines the next coefficient.
        """
        if self.order < 1:
            raise ValueError("reversion needs order >= 1")
        if self.coeffs[0] != 0:
            raise ValueError("reversion requires constant term 0")
        f1 = self.coeffs[1]
        if f1 == 0:
            raise ValueError("reversion requires nonzero linear coefficient")
        inv = [Fraction(0), 1 / f1]
        for m in range(2, self.order + 1):
            cand = FormalPowerSeries.from_coeffs(inv, m)
            resid = self.truncate(m).compose(cand).coeff(m)
            inv.append(-resid / f1)
        return FormalPowerSeries.from_coeffs(inv, self.order)

    # -- transcendental (exact, termwise) -------------------------------------

    def log(self) -> "FormalPowerSeries":
        """log(self); requires constant term 1.  Same order."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        if self.order == 0:
            return FormalPowerSeries.zero(0)
        return (self.derivative() * self.reciprocal()).integral()

    def exp(self) -> "FormalPowerSeries":
        """exp(self); requires constant term 0.  Same order."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires constant term 0")
        f = self.coeffs
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            s = Fraction(0)
            for i in range(n):
                c = f[n - i]
                if c:
                    s += (n - i) * c * out[i]
            out.append(s / n)
        return FormalPowerSeries(tuple(out))

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> "FormalPowerSeries":
        if self.order < 1:
            raise ValueError("derivative of an order-0 truncation is undefined")
        return FormalPowerSeries(
            tuple(k * self.coeffs[k] for k in range(1, self.order + 1))
        )

    def integral(self, constant=0) -> "FormalPowerSeries":
        """Antiderivative with the given constant term; order grows by one."""
        out = [_frac(constant)]
        out += [self.coeffs[k] / (k + 1) for k in range(self.order + 1)]
        return FormalPowerSeries(tuple(out))

    def scale_arg(self, c) -> "FormalPowerSeries":
        """self(c*z): coefficient k gets multiplied by c**k."""
        c = _frac(c)
        return FormalPowerSeries(
            tuple(self.coeffs[k] * c**k for k in range(self.order + 1))
        )

    # -- misc -----------------------------------------------------------------

    def prefix(self, n: int) -> tuple:
        """Coefficients 0..n as a tuple (for comparisons in tests)."""
        return tuple(self.coeff(k) for k in range(n + 1))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return "FormalPowerSeries([%s]; order=%d)" % (shown, self.order)
