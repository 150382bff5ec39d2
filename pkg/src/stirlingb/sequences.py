"""Recurrences and closed forms for signed-permutation cycle statistics.

Conventions used throughout (see also permcore):

* ``triangle_ge2_rec(n, k, r)`` counts signed permutations of n + r elements
  with k + r cycles, the r special elements (1..r, by absolute value) in
  distinct cycles, and every cycle of order >= 2 or fully barred.  These are
  the row/column entries of the m = 2 triangle; row sums over k give the
  derangement counts ``d_rec(r, n)``.
* ``triangle_gem_rec(n, k, r, m)`` generalizes the window to ord >= m.
* ``stirlingA(n, k, mode, m)`` are the plain (type A) restricted/associated
  Stirling numbers of the first kind: cycle sizes bounded above ("restr") or
  below ("assoc") by m, no sign, no exemption.
* The d-family is computed four independent ways (recurrence, explicit
  double sum, egf coefficients, Riordan row sums) so the tests can compare.

Everything returns exact ints (or Fraction where the contract says so).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial

from .fps import FormalPowerSeries
from .numeric import binomial, falling_factorial, rising_factorial
from .riordan import DEFAULT_ORDER

__all__ = [
    "HOWARD_VARIANTS",
    "RPolynomial",
    "d_asym",
    "d_egf",
    "d_explicit",
    "d_poly",
    "d_rec",
    "d_series",
    "diagonals",
    "diagonals_delta",
    "howard_check",
    "incomplete_factorial",
    "inverse_triangle_rec",
    "lah",
    "lattice_S",
    "par_ge",
    "par_le",
    "rstirling1",
    "stirling1",
    "stirlingA",
    "tree_count",
    "triangle_ge2_alt_rec",
    "triangle_ge2_rec",
    "triangle_gem_rec",
    "typeB_factorial_conv",
]


def lah(n: int, k: int) -> int:
    """Lah numbers: ordered set partitions, (n!/k!) C(n-1, k-1); lah(0,0)=1."""
    if n == 0 and k == 0:
        return 1
    if k <= 0 or k > n:
        return 0
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


# -- compositions with bounded parts -----------------------------------------


def par_le(a: int, b: int, c: int) -> int:
    """Compositions of a into b positive parts, each part <= c."""
    if b == 0:
        return 1 if a == 0 else 0
    if c <= 0 or a < b:
        return 0
    total = 0
    for i in range(b + 1):
        t = a - c * i - 1
        if t < 0:
            break
        total += (-1) ** i * comb(b, i) * comb(t, b - 1)
    return total


def par_ge(a: int, b: int, c: int) -> int:
    """Compositions of a into b positive parts, each part >= c.

    Subtracting c-1 from every part reduces to the unconstrained case, so
    the count is C(a - (c-1)b - 1, b - 1); c < 1 behaves like c = 1 since
    parts are positive anyway.
    """
    if b == 0:
        return 1 if a == 0 else 0
    shift = a - (max(c, 1) - 1) * b
    if shift < b:
        return 0
    return comb(shift - 1, b - 1)


# -- the ord >= 2 triangle (signed derangement cycle counts) -------------------


def _ge2_column0(n: int, r: int) -> int:
    """Entries with no non-special cycle: all of [n] sits in the r special
    cycles (each of order >= 2 or all-barred)."""
    if n == 0:
        return 1
    total = 0
    for j in range(r + 1):
        if r - j - 1 < 0:
            continue
        total += comb(r, j) * comb(n - 1, r - j - 1) * 2 ** (r - j)
    return 2**n * factorial(n) * total


@cache
def triangle_ge2_rec(n: int, k: int, r: int) -> int:
    """Signed permutations of [n+r], k+r cycles, specials 1..r in distinct
    cycles, every cycle of order >= 2 or all-barred.  Computed from the
    remove-the-largest-element recurrence; column 0 from the closed form.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0:
        return _ge2_column0(n, r)
    p = n - 1
    fp = factorial(p)
    total = triangle_ge2_rec(p, k - 1, r)
    for j in range(1, p + 1):
        total += 2 * fp * 2**j // factorial(p - j) * triangle_ge2_rec(p - j, k - 1, r)
    if r:
        for j in range(p + 1):
            total += (
                4 * r * fp * (j + 1) * 2**j // factorial(p - j)
                * triangle_ge2_rec(p - j, k, r - 1)
            )
    return total


@cache
def triangle_ge2_alt_rec(n: int, k: int) -> int:
    """The r = 0 case again, via the independent three-term recurrence
    t(n+1, k) = 2n t(n, k) + 2n t(n-1, k-1) + t(n, k-1).  Test cross-check.
    """
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k < 0 or k > n:
        return 0
    p = n - 1
    return (
        2 * p * triangle_ge2_alt_rec(p, k)
        + 2 * p * triangle_ge2_alt_rec(p - 1, k - 1)
        + triangle_ge2_alt_rec(p, k - 1)
    )


# -- the general ord >= m triangle ---------------------------------------------


def _tau(m: int, n: int, j: int) -> int:
    """Sign weight of a cycle built from j inserted elements: free signs
    (2^(j+1)) once the window reaches m, otherwise forced all-barred (1)."""
    return 2 ** (j + 1) if m - 1 <= j <= n else 1


def _gem_column0(n: int, r: int, m: int) -> int:
    """k = 0 baseline: [n] distributed over the r special cycles, short
    special cycles (order < m) all-barred, long ones freely signed."""
    total = 0
    for p in range(r + 1):
        for j in range(p + 1):
            weight = comb(r, p) * comb(p, j)
            if not weight:
                continue
            s = 0
            for a in range(n + 1):
                short = par_le(a, j, m - 2)
                if not short:
                    continue
                long_ = par_ge(n - a, p - j, m - 1)
                if long_:
                    s += 2 ** (n + p - a - j) * short * long_
            total += weight * s
    return factorial(n) * total


@cache
def _gem(n: int, k: int, r: int, m: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0:
        return _gem_column0(n, r, m)
    p = n - 1
    total = 0
    for j in range(p + 1):
        total += (
            factorial(j) * _tau(m, p, j) * comb(p, j) * _gem(p - j, k - 1, r, m)
        )
    if r:
        for j in range(p + 1):
            total += (
                r * factorial(j + 1) * _tau(m, p + 1, j + 1) * comb(p, j)
                * _gem(p - j, k, r - 1, m)
            )
    return total


def triangle_gem_rec(n: int, k: int, r: int, m: int) -> int:
    """Signed permutations of [n+r], k+r cycles, specials distinct, every
    cycle of order >= m or all-barred.

    m = 2 dispatches to triangle_ge2_rec.  For m <= 1 the window constraint
    is vacuous, signs are free, and only the k = 0 column has a stated
    closed form (2^(n+r) n! C(n+r-1, r-1)); other columns raise.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if m == 2:
        return triangle_ge2_rec(n, k, r)
    if m < 2:
        if k == 0:
            if n < 0:
                return 0
            if r == 0:
                return 1 if n == 0 else 0
            return 2 ** (n + r) * factorial(n) * comb(n + r - 1, r - 1)
        raise ValueError(
            "columns k > 0 are unsupported for m <= 1 (free-sign regime)"
        )
    return _gem(n, k, r, m)


# -- type A restricted/associated Stirling numbers of the first kind ----------


@cache
def stirlingA(n: int, k: int, mode: str, m: int) -> int:
    """Permutations of [n] with k cycles, all cycle sizes <= m ("restr") or
    >= m ("assoc").  No signs and no exemption here."""
    if mode not in ("restr", "assoc"):
        raise ValueError("mode must be 'restr' or 'assoc', got %r" % (mode,))
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    p = n - 1
    if mode == "restr":
        i_range = range(0, min(m - 1, p) + 1)
    else:
        i_range = range(max(m - 1, 0), p + 1)
    total = 0
    for i in i_range:
        total += factorial(p) // factorial(p - i) * stirlingA(p - i, k - 1, mode, m)
    return total


@cache
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind (cycle counts)."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@cache
def rstirling1(n: int, k: int, r: int) -> int:
    """Permutations of [n+r] with k+r cycles, the elements 1..r in distinct
    cycles (classical r-Stirling numbers of the first kind)."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return rstirling1(n - 1, k - 1, r) + (n + r - 1) * rstirling1(n - 1, k, r)


def incomplete_factorial(n: int, mode: str, m: int) -> int:
    """Row sums of stirlingA: permutations of [n] with the size window."""
    return sum(stirlingA(n, k, mode, m) for k in range(n + 1))


def typeB_factorial_conv(n: int, mode: str, m: int) -> int:
    """Total signed permutations of [n] whose cycles obey the window-or-
    all-barred rule, by convolving the two type A totals: the elements in
    window cycles keep free signs (2^i), the rest sit in all-barred cycles
    on the other side of the window.
    """
    if mode == "assoc":
        return sum(
            comb(n, i)
            * 2**i
            * incomplete_factorial(i, "assoc", m)
            * incomplete_factorial(n - i, "restr", m - 1)
            for i in range(n + 1)
        )
    if mode == "restr":
        return sum(
            comb(n, i)
            * 2**i
            * incomplete_factorial(i, "restr", m)
            * incomplete_factorial(n - i, "assoc", m + 1)
            for i in range(n + 1)
        )
    raise ValueError("mode must be 'restr' or 'assoc', got %r" % (mode,))


# -- the d-family (no-unbarred-fixed-point counts with specials) ----------------


def _d_alternating(n: int) -> int:
    """n! sum_k (-1)^k 2^(n-k) / k!: signed permutations of [n] with no
    unbarred fixed point (inclusion-exclusion over fixed points)."""
    return sum(
        (-1) ** k * 2 ** (n - k) * (factorial(n) // factorial(k))
        for k in range(n + 1)
    )


@cache
def d_rec(r: int, n: int) -> int:
    """d(r, n): signed permutations of [n+r] without unbarred fixed points
    and with 1..r in distinct cycles.  Three-term recurrence in (r, n)."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be >= 0")
    if n == 0:
        return 1
    if r == 0:
        return _d_alternating(n)
    return d_rec(r - 1, n) + 2 * n * d_rec(r, n - 1) + 2 * n * d_rec(r - 1, n - 1)


def d_explicit(r: int, n: int) -> int:
    """d(r, n) by the explicit double sum (exact rational inside)."""
    total = Fraction(0)
    for i in range(r + 1):
        inner = Fraction(0)
        for k in range(n - i + 1):
            inner += (
                comb(n - i, k)
                * Fraction((-1) ** k, 2**k)
                * rising_factorial(i + 1, n - i - k)
            )
        total += comb(r, i) * falling_factorial(n, i) * 2**i * inner
    total *= 2**n
    if total.denominator != 1:
        raise ArithmeticError("d_explicit(%d, %d) is not an integer: %s" % (r, n, total))
    return int(total)


def d_series(r: int, order: int = DEFAULT_ORDER) -> FormalPowerSeries:
    """The egf e^(-x)/(1-2x) * ((1+2x)/(1-2x))^r."""
    inv = FormalPowerSeries.from_coeffs([1, -2], order).reciprocal()
    series = FormalPowerSeries.from_coeffs([0, -1], order).exp() * inv
    if r:
        series = series * (FormalPowerSeries.from_coeffs([1, 2], order) * inv) ** r
    return series

def d_egf(r: int, count: int) -> list[int]:
    """First `count` values of d(r, .) via egf coefficient extraction."""
    if count < 1:
        return []
    series = d_series(r, count - 1 if count > 1 else 1)
    out = []
    for n in range(count):
        v = series.egf_coeff(n)
        if v.denominator != 1:
            raise ArithmeticError("non-integer egf coefficient %s" % (v,))
        out.append(int(v))
    return out


@dataclass(frozen=True)
class RPolynomial:
    """A polynomial in the special-element count r, ascending coefficients."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, r: int) -> int:
        return sum(c * r**i for i, c in enumerate(self.coeffs))


def d_poly(n: int) -> RPolynomial:
    """d(., n) as a polynomial in r (degree n), by exact interpolation of
    the recurrence values at r = 0..n."""
    pts = [(x, d_rec(x, n)) for x in range(n + 1)]
    coef = [Fraction(0)] * (n + 1)
    for xi, yi in pts:
        basis = [Fraction(1)]
        denom = 1
        for xj, _ in pts:
            if xj == xi:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for idx, b in enumerate(basis):
                new[idx] -= xj * b
                new[idx + 1] += b
            basis = new
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for idx, b in enumerate(basis):
            coef[idx] += scale * b
    out = []
    for c in coef:
        if c.denominator != 1:
            raise ArithmeticError("non-integer interpolation coefficient %s" % (c,))
        out.append(int(c))
    return RPolynomial(tuple(out))


def d_asym(r: int, n: int) -> Fraction:
    """Rational part of the large-n behaviour: d(r, n) ~ n! * d_asym / sqrt(e).

    The caller applies n! and the irrational 1/sqrt(e) at display time; the
    library side stays exact.
    """
    total = Fraction(0)
    for i in range(r + 1):
        total += (
            comb(r, i)
            * 2**i
            * (binomial(-i - 1, n) - Fraction(2 * i - 1, 2) * binomial(-i, n))
        )
    return (-2) ** n * total


# -- lattice paths, diagonals, inverse triangle, trees ---------------------------


def lattice_S(r: int, n: int) -> int:
    """[x^n] ((1+x)/(1-x))^r: staircase lattice point counts."""
    if n < 0:
        raise ValueError("n must be >= 0")
    order = max(n, 1)
    series = (
        FormalPowerSeries.from_coeffs([1, 1], order)
        * FormalPowerSeries.from_coeffs([1, -1], order).reciprocal()
    ) ** r
    v = series.coeff(n)
    assert v.denominator == 1
    return int(v)


def diagonals(n: int, r: int, m: int = 2) -> tuple[int, int]:
    """Closed forms for the two subdiagonal entries (n+1, n) and (n+2, n)
    of the ord >= m triangle.  m = 2 uses the dedicated quadratic forms;
    other m >= 1 dispatch to the Kronecker-delta forms."""
    if m == 2:
        first = 2 * (n + 1) * (n + 2 * r)
        second = (
            Fraction(4, 3)
            * comb(n + 2, 2)
            * (3 * n * n + n + 12 * n * r + 12 * r * r)
        )
        assert second.denominator == 1
        return first, int(second)
    return diagonals_delta(n, r, m)


def diagonals_delta(n: int, r: int, m: int) -> tuple[int, int]:
    """The same two subdiagonals for any m >= 1, written with Kronecker
    deltas in the exponents."""
    if m < 1:
        raise ValueError("m must be >= 1")
    d1 = 1 if m == 1 else 0
    d2 = 1 if m == 2 else 0
    d3 = 1 if m == 3 else 0
    first = Fraction(2) ** ((n + r + 1) * d1 + 2 * d2 - 1) * (n + 1) * (n + 2 * r)
    second = (
        Fraction(2) ** ((n + r + 2) * d1)
        / 12
        * comb(n + 2, 2)
        * (
            3 * 2 ** (4 * d2) * (4 * r * (r + n - 1) + n * (n - 1))
            + 2 ** (3 * (d2 + d3) + 3) * (n + 3 * r)
        )
    )
    if first.denominator != 1 or second.denominator != 1:
        raise ArithmeticError(
            "non-integer diagonal value at n=%d r=%d m=%d" % (n, r, m)
        )
    return int(first), int(second)


@cache
def inverse_triangle_rec(n: int, k: int, r: int) -> int:
    """Entries of the unsigned inverse of the ord >= 2 triangle's Riordan
    array, by the one-row-back recurrence

        T(n+1, k) = T(n, k-1)
                    + (1/k!) sum_{i=k}^{n} i! 2^(i-k+2) ((i-k+1) r + k) T(n, i)

    with T(0,0) = 1 and T(n, k) = 0 outside 0 <= k <= n.  Column 0 is the
    k = 0 instance of the same rule (the printed standalone base case
    contradicts the array; see the verification tests).
    """
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    p = n - 1
    total = inverse_triangle_rec(p, k - 1, r) if k >= 1 else 0
    fk = factorial(k)
    for i in range(k, p + 1):
        total += (
            factorial(i) // fk
            * 2 ** (i - k + 2)
            * ((i - k + 1) * r + k)
            * inverse_triangle_rec(p, i, r)
        )
    return total


@cache
def _tree_derivative_series(order: int) -> FormalPowerSeries:
    base = -(FormalPowerSeries.from_coeffs([1, -2], order).log()) - FormalPowerSeries.x(
        order
    )
    fbar = base.revert()
    flipped = -(fbar.scale_arg(-1))
    return flipped.derivative()


def tree_count(n: int) -> int:
    """n! [z^n] F'(z) where F is the sign-flipped reversion of the m = 2
    cycle series: counts of plane increasing trees with doubled edge colors
    (1, 4, 32, 416, ...). Computed by series reversion, no special functions.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    order = max(n + 1, DEFAULT_ORDER)
    v = _tree_derivative_series(order).egf_coeff(n)
    if v.denominator != 1:
        raise ArithmeticError("non-integer tree count %s" % (v,))
    return int(v)


# -- cross-window identities -----------------------------------------------------

HOWARD_VARIANTS = ("type-a", "type-b", "howard1")


def howard_check(
    n: int, k: int, r: int = 0, m: int = 2, variant: str = "type-b"
) -> tuple[int, int]:
    """Evaluate both sides of one of the cross-window identities.

    * "type-a":  plain Stirling vs. binomial-weighted ord >= 2 type A numbers,
      lhs = s1(n, n-k), rhs = sum_l C(n, 2k-l) sA(2k-l, k-l, assoc, 2).
      (r and m are ignored.)
    * "type-b":  the ord >= m triangle against the ord >= m+1 triangle,
      double sum over extracted short cycles (weight (2^m - 1) per element
      bundle, (ml)!/(m^l l!) arrangements).
    * "howard1": the free-sign signed r-Stirling numbers (2^(n+r) weighted)
      against the ord >= 2 triangle.

    Returns (lhs, rhs), computed along independent routes.
    """
    if variant == "type-a":
        lhs = stirling1(n, n - k)
        rhs = sum(
            comb(n, 2 * k - l) * stirlingA(2 * k - l, k - l, "assoc", 2)
            for l in range(k + 1)
            if 2 * k - l <= n
        )
        return lhs, rhs
    if variant == "type-b":
        if m < 2:
            raise ValueError("type-b variant needs m >= 2")
        lhs = triangle_gem_rec(n, k, r, m)
        rhs = Fraction(0)
        for p in range(r + 1):
            for l in range(k + 1):
                if m * l > n or (m - 1) * p > n - m * l:
                    continue
                rhs += (
                    comb(r, p)
                    * comb(n, m * l)
                    * comb(n - m * l, (m - 1) * p)
                    * (2**m - 1) ** (l + p)
                    * Fraction(factorial(m * l) * factorial((m - 1) * p))
                    / (m**l * factorial(l))
                    * triangle_gem_rec(n - m * l - (m - 1) * p, k - l, r - p, m + 1)
                )
        assert rhs.denominator == 1
        return lhs, int(rhs)
    if variant == "howard1":
        lhs = 2 ** (n + r) * rstirling1(n, k, r)
        rhs = 0
        for p in range(r + 1):
            for l in range(min(k, n) + 1):
                rhs += (
                    comb(r, p)
                    * comb(n, l)
                    * triangle_ge2_rec(n - l, k - l, r - p)
                )
        return lhs, rhs
    raise ValueError("variant must be one of %s, got %r" % (HOWARD_VARIANTS, variant))
