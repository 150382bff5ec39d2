"""Exponential Riordan arrays over exact rationals.

An exponential Riordan array is a pair (g, f) of truncated series with
g(0) != 0, f(0) = 0, f'(0) != 0.  Its entries are

    l(n, k) = n!/k! * [z^n] g(z) * f(z)**k,

lower triangular with l(n, n) = g(0) * f'(0)**n.  The group operations
(multiply, invert), the fundamental theorem (apply_fte), production sequences
and the sign-conjugated companion array live here, together with the concrete
triangle constructor for the signed-permutation cycle statistics and a small
integer-matrix container used by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

from .fps import FormalPowerSeries

__all__ = [
    "DEFAULT_ORDER",
    "PROVENANCES",
    "ExpRiordanArray",
    "TriangleTable",
    "make_triangle_B",
    "production_rebuild",
    "unsigned_conjugate",
]

DEFAULT_ORDER = 16

# How an integer table was produced (kept on TriangleTable for reporting).
PROVENANCES = ("riordan", "recurrence", "oracle", "explicit")


@dataclass(frozen=True)
class ExpRiordanArray:
    g: FormalPowerSeries
    f: FormalPowerSeries

    def __post_init__(self):
        if self.g.coeff(0) == 0:
            raise ValueError("Riordan array needs g(0) != 0")
        if self.f.order < 1 or self.f.coeff(0) != 0:
            raise ValueError("Riordan array needs f(0) = 0 and order >= 1")
        if self.f.coeff(1) == 0:
            raise ValueError("Riordan array needs f'(0) != 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @classmethod
    def identity(cls, order: int) -> "ExpRiordanArray":
        return cls(FormalPowerSeries.one(order), FormalPowerSeries.x(order))

    @cached_property
    def _table(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.order
        cols = []
        power = self.g.truncate(n)
        for k in range(n + 1):
            cols.append([power.coeff(i) for i in range(n + 1)])
            if k < n:
                power = power * self.f
        return tuple(
            tuple(factorial(i) * cols[k][i] / factorial(k) for k in range(n + 1))
            for i in range(n + 1)
        )

    def entry(self, n: int, k: int) -> Fraction:
        """l(n, k) = n!/k! [z^n] g f^k as an exact rational."""
        if n < 0 or k < 0:
            raise ValueError("entry indices must be nonnegative")
        if n > self.order or k > self.order:
            raise ValueError(
                "entry (%d, %d) beyond truncation order %d" % (n, k, self.order)
            )
        return self._table[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return tuple(self.entry(n, k) for k in range(n + 1))

    # -- group structure -----------------------------------------------------

    def multiply(self, other: "ExpRiordanArray") -> "ExpRiordanArray":
        """Matrix product: (g, f) * (h, l) = (g * h(f), l(f))."""
        return ExpRiordanArray(
            self.g * other.g.compose(self.f), other.f.compose(self.f)
        )

    def invert(self) -> "ExpRiordanArray":
        """Group inverse (1 / g(fbar), fbar) with fbar the reversion of f."""
        fbar = self.f.revert()
        return ExpRiordanArray(self.g.compose(fbar).reciprocal(), fbar)

    def apply_fte(self, h: FormalPowerSeries) -> FormalPowerSeries:
        """Fundamental theorem: the array applied to a column egf h."""
        return self.g * h.compose(self.f)

    def production_sequences(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Coefficients of A(t) = f'(fbar(t)) and Z(t) = g'(fbar(t))/g(fbar(t)).

        Both are truncated at order one less than the array's order.
        """
        fbar = self.f.revert()
        a = self.f.derivative().compose(fbar)
        z = self.g.derivative().compose(fbar) * self.g.compose(fbar).reciprocal()
        return a.coeffs, z.coeffs


def unsigned_conjugate(array: ExpRiordanArray) -> ExpRiordanArray:
    """Sign conjugation D * (g, f) * D with D = diag((-1)^n).

    Entry (n, k) of the result is (-1)**(n+k) times the input entry; as a
    Riordan pair this is (g(-z), -f(-z)).
    """
    return ExpRiordanArray(array.g.scale_arg(-1), -(array.f.scale_arg(-1)))


def production_rebuild(array: ExpRiordanArray, rows: int | None = None):
    """Rebuild rows 0..rows from row 0 using the production sequences.

    Row n+1 comes from row n alone:

        l(n+1, 0) = sum_i i! * z_i * l(n, i)
        l(n+1, k) = a_0 * l(n, k-1)
                    + (1/k!) * sum_{i>=k} i! * (z_{i-k} + k * a_{i-k+1}) * l(n, i)

    Returns a list of (rows+1) lists of Fractions, each of length rows+1.
    The caller compares against entry() to validate an array.
    """
    n_rows = array.order if rows is None else rows
    if n_rows > array.order:
        raise ValueError("cannot rebuild beyond the truncation order")
    a, z = array.production_sequences()
    width = n_rows + 1
    out = [[array.entry(0, 0)] + [Fraction(0)] * (width - 1)]
    for n in range(n_rows):
        prev = out[-1]
        new = [Fraction(0)] * width
        new[0] = sum(factorial(i) * z[i] * prev[i] for i in range(n + 1))
        for k in range(1, n + 2):
            acc = Fraction(0)
            for i in range(k, n + 1):
                acc += factorial(i) * (z[i - k] + k * a[i - k + 1]) * prev[i]
            new[k] = a[0] * prev[k - 1] + acc / factorial(k)
        out.append(new)
    return out


def make_triangle_B(m: int, r: int, order: int = DEFAULT_ORDER) -> ExpRiordanArray:
    """The exponential Riordan array whose (n, k) entry counts signed
    permutations of n + r elements with k + r cycles, every cycle of order
    at least m or fully barred, and the r special elements in distinct
    cycles.

        g = ((1 - x^(m-1))/(1 - x) + 2^m x^(m-1)/(1 - 2x))^r
        f = -log(1 - 2x) - sum_{k=1}^{m-1} ((2^k - 1)/k) x^k

    For m = 2 this reduces to g = ((1+2x)/(1-2x))^r, f = -log(1-2x) - x.
    Only m >= 2 is a Riordan array in this sense.
    """
    if m < 2:
        raise ValueError("make_triangle_B supports m >= 2 only, got m=%d" % m)
    if r < 0:
        raise ValueError("r must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    one_minus_2x = FormalPowerSeries.from_coeffs([1, -2], order)
    one_minus_x = FormalPowerSeries.from_coeffs([1, -1], order)
    x_pow = FormalPowerSeries.from_coeffs([0] * (m - 1) + [1], order)

    correction = [Fraction(0)] + [Fraction(2**k - 1, k) for k in range(1, m)]
    f = -(one_minus_2x.log()) - FormalPowerSeries.from_coeffs(correction, order)

    head = (FormalPowerSeries.one(order) - x_pow) * one_minus_x.reciprocal()
    tail = (2**m) * x_pow * one_minus_2x.reciprocal()
    g = (head + tail) ** r
    return ExpRiordanArray(g, f)


@dataclass(frozen=True)
class TriangleTable:
    """A materialized lower-triangular integer matrix plus its provenance."""

    rows: tuple[tuple[int, ...], ...]  # square; zeros above the diagonal
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError("unknown provenance %r" % (self.provenance,))
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                raise ValueError("TriangleTable rows must form a square matrix")
        for n, row in enumerate(self.rows):
            for k in range(n + 1, size):
                if row[k] != 0:
                    raise ValueError("nonzero entry above the diagonal")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> int:
        return self.rows[n][k]

    @classmethod
    def from_riordan(
        cls, array: ExpRiordanArray, size: int, provenance: str = "riordan"
    ) -> "TriangleTable":
        if size - 1 > array.order:
            raise ValueError("array order too small for %d rows" % size)
        rows = []
        for n in range(size):
            row = []
            for k in range(size):
                v = array.entry(n, k) if k <= n else Fraction(0)
                if v.denominator != 1:
                    raise ValueError(
                        "non-integer entry %s at (%d, %d)" % (v, n, k)
                    )
                row.append(int(v))
            rows.append(tuple(row))
        return cls(tuple(rows), provenance)

    @classmethod
    def from_function(cls, fn, size: int, provenance: str) -> "TriangleTable":
        rows = []
        for n in range(size):
            row = []
            for k in range(size):
                v = fn(n, k) if k <= n else 0
                if isinstance(v, Fraction):
                    if v.denominator != 1:
                        raise ValueError(
                            "non-integer entry %s at (%d, %d)" % (v, n, k)
                        )
                    v = int(v)
                row.append(v)
            rows.append(tuple(row))
        return cls(tuple(rows), provenance)
