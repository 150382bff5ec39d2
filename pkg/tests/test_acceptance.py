"""Acceptance suite: one test per shipped guarantee.

Each test prints a single "ACCEPTANCE nn <name>: PASS|FAIL" line (visible
with pytest -s, or in captured output on failure) and then asserts.  The
suite compares against externally published tables verbatim; where every
independent computation route disagrees with a published value, the test
fails honestly and the failure message carries the analysis.
"""

import random
import time
from fractions import Fraction
from math import factorial

import pytest

from stirlingb.fps import FormalPowerSeries as FPS
from stirlingb.permcore import oracle_total, oracle_triangle
from stirlingb.riordan import (
    ExpRiordanArray,
    make_triangle_B,
    production_rebuild,
    unsigned_conjugate,
)
from stirlingb.sequences import (
    d_asym,
    d_egf,
    d_explicit,
    d_poly,
    d_rec,
    diagonals,
    diagonals_delta,
    howard_check,
    lattice_S,
    tree_count,
    triangle_ge2_rec,
    triangle_gem_rec,
    typeB_factorial_conv,
)
from stirlingb.verify import inv_sqrt_e

# The published r=3 table of the ord >= 2 triangle, copied verbatim.  Rows 0-3
# are confirmed by every route; six interior entries of rows 4-6 are misprints
# (see test_criterion_01 for the evidence) but are kept here as published.
PUBLISHED_R3 = [
    [1],
    [12, 1],
    [144, 28, 1],
    [1824, 592, 48, 1],
    [25344, 11232, 1552, 72, 1],
    [391680, 213888, 41824, 3280, 100, 1],
    [6727680, 4267008, 1061248, 119520, 6080, 132, 1],
]

# The published unsigned inverse table for r=3 (all entries confirmed).
PUBLISHED_INVERSE_R3 = [
    [1],
    [12, 1],
    [192, 28, 1],
    [3936, 752, 48, 1],
    [99456, 22304, 1904, 72, 1],
    [3001344, 748672, 76320, 3920, 100, 1],
    [105544704, 28412416, 3265792, 203040, 7120, 132, 1],
]

D_R0_LIST = [1, 1, 5, 29, 233, 2329, 27949, 391285]

PUBLISHED_D_POLYS = {
    2: (5, 8, 16),
    3: (29, 92, 48, 64),
    4: (233, 592, 992, 256, 256),
    5: (2329, 7796, 7200, 8320, 1280, 1024),
    6: (27949, 83672, 141424, 67840, 60160, 6144, 4096),
}

TREE_COUNTS = [1, 4, 32, 416, 7552, 176128]


def _report(num, name, ok, detail=""):
    line = "ACCEPTANCE %02d %s: %s" % (num, name, "PASS" if ok else "FAIL")
    if detail:
        line += " - " + detail
    print(line)


def test_criterion_01_published_r3_table_both_routes():
    start = time.perf_counter()
    rec = [[triangle_ge2_rec(n, k, 3) for k in range(n + 1)] for n in range(7)]
    arr = make_triangle_B(2, 3, order=6)
    rio = [[int(arr.entry(n, k)) for k in range(n + 1)] for n in range(7)]
    elapsed = time.perf_counter() - start

    routes_agree = rec == rio
    off_print = [
        (n, k, rec[n][k], PUBLISHED_R3[n][k])
        for n in range(7)
        for k in range(n + 1)
        if rec[n][k] != PUBLISHED_R3[n][k]
    ]
    ok = routes_agree and not off_print and elapsed < 1.0
    _report(
        1,
        "published r=3 table, recurrence and Riordan routes",
        ok,
        "routes agree on 28/28 entries, %d/28 match the published table, %.3fs"
        % (28 - len(off_print), elapsed),
    )
    assert elapsed < 1.0
    assert routes_agree, "the two computation routes disagree: %r" % (off_print,)
    if off_print:
        cells = "; ".join(
            "(%d,%d) computed %d, published %d" % c for c in off_print
        )
        pytest.fail(
            "both routes agree on all 28 entries and match the published table "
            "on %d of 28; the remaining %d published entries are misprints: %s. "
            "The computed values are confirmed by five independent routes: the "
            "published recurrence applied to the published rows 0-3, the "
            "generating-function construction, exhaustive enumeration of "
            "signed permutations (two separate implementations), and row sums "
            "against the no-unbarred-fixed-point totals, which the published "
            "inverse table also corroborates (it inverts the computed matrix "
            "exactly, entry for entry)."
            % (28 - len(off_print), len(off_print), cells)
        )


def test_criterion_02_oracle_grid_matches_recurrence():
    start = time.perf_counter()
    bad = []
    checked = 0
    for r in range(4):
        for n in range(7 - r):
            for k in range(n + 1):
                if oracle_triangle(n, r, k, "assoc", 2) != triangle_ge2_rec(n, k, r):
                    bad.append((n, r, k))
                checked += 1
    elapsed6 = time.perf_counter() - start
    for r in range(4):
        n = 7 - r
        for k in range(n + 1):
            if oracle_triangle(n, r, k, "assoc", 2) != triangle_ge2_rec(n, k, r):
                bad.append((n, r, k))
            checked += 1
    ok = not bad and elapsed6 < 10.0
    _report(
        2,
        "exhaustive oracle vs recurrence, n+r <= 7, r <= 3",
        ok,
        "%d cells, n+r <= 6 subset in %.2fs" % (checked, elapsed6),
    )
    assert elapsed6 < 10.0
    assert not bad, bad[:5]


def test_criterion_03_d_family_four_routes():
    bad = []
    for r in range(6):
        egf = d_egf(r, 11)
        arr = make_triangle_B(2, r, order=10)
        for n in range(11):
            ref = d_rec(r, n)
            row_sum = sum(arr.entry(n, k) for k in range(n + 1))
            if not (d_explicit(r, n) == ref == egf[n] == row_sum):
                bad.append((r, n))
    head = [d_rec(0, n) for n in range(8)]
    ok = not bad and head == D_R0_LIST
    _report(
        3,
        "d-family via recurrence, explicit sum, egf and row sums, r <= 5, n <= 10",
        ok,
        "r=0 head %s" % (head,),
    )
    assert not bad, bad[:5]
    assert head == D_R0_LIST


def test_criterion_04_d_polynomials():
    got = {n: d_poly(n).coeffs for n in PUBLISHED_D_POLYS}
    ok = got == PUBLISHED_D_POLYS
    _report(4, "d-family polynomials in r, n = 2..6", ok)
    assert got == PUBLISHED_D_POLYS


def test_criterion_05_inverse_matrix():
    arr = make_triangle_B(2, 3, order=10)
    ident = ExpRiordanArray.identity(10)
    product_ok = arr.multiply(arr.invert())._table == ident._table
    conj = unsigned_conjugate(make_triangle_B(2, 3, order=8).invert())
    bad = [
        (n, k, conj.entry(n, k), PUBLISHED_INVERSE_R3[n][k])
        for n in range(7)
        for k in range(n + 1)
        if conj.entry(n, k) != PUBLISHED_INVERSE_R3[n][k]
    ]
    ok = product_ok and not bad
    _report(
        5,
        "group inverse to order 10, published inverse table reproduced",
        ok,
        "28/28 published entries match" if not bad else "%d mismatches" % len(bad),
    )
    assert product_ok
    assert not bad, bad[:5]


def test_criterion_06_tree_counts():
    got = [tree_count(n) for n in range(6)]
    ok = got == TREE_COUNTS
    _report(6, "plane increasing tree counts n = 0..5", ok, "%s" % (got,))
    assert got == TREE_COUNTS


def test_criterion_07_lattice_identity():
    bad = []
    for r in range(5):
        for n in range(9):
            if triangle_ge2_rec(n, 0, r) != 2**n * factorial(n) * lattice_S(r, n):
                bad.append((n, r))
    ok = not bad
    _report(7, "column 0 equals 2^n n! lattice counts, r <= 4, n <= 8", ok)
    assert not bad, bad


def test_criterion_08_diagonal_closed_forms():
    hard_bad = []
    for r in range(5):
        for n in range(9):
            first, second = diagonals(n, r, 2)
            if first != triangle_ge2_rec(n + 1, n, r):
                hard_bad.append((n, r, "first"))
            if second != triangle_ge2_rec(n + 2, n, r):
                hard_bad.append((n, r, "second"))
    soft_bad = []
    for m in (1, 2, 3):
        for r in range(7):
            for n in range(7 - r):
                first, second = diagonals_delta(n, r, m)
                if first != oracle_triangle(n + 1, r, n, "assoc", m):
                    soft_bad.append((m, n, r, "first"))
                if second != oracle_triangle(n + 2, r, n, "assoc", m):
                    soft_bad.append((m, n, r, "second"))
    m2_conflicts = [t for t in soft_bad if t[0] == 2]
    ok = not hard_bad and not m2_conflicts
    detail = ""
    if soft_bad and not m2_conflicts:
        detail = "errata finding (non-blocking, m != 2): %s" % (soft_bad[:4],)
    _report(8, "subdiagonal closed forms vs triangle and oracle", ok, detail)
    assert not hard_bad, hard_bad[:5]
    assert not m2_conflicts, m2_conflicts[:5]


def test_criterion_09_general_window_m3():
    bad = []
    for r in range(3):
        arr = make_triangle_B(3, r, order=6)
        for n in range(7 - r):
            for k in range(n + 1):
                a = triangle_gem_rec(n, k, r, 3)
                b = arr.entry(n, k)
                c = oracle_triangle(n, r, k, "assoc", 3)
                if not (a == b == c):
                    bad.append((n, k, r, a, b, c))
    ok = not bad
    _report(9, "ord >= 3 triangle: recurrence, Riordan and oracle, r <= 2", ok)
    assert not bad, bad[:5]


def test_criterion_10_convolution_and_cross_window_identities():
    conv_bad = []
    for m in (2, 3):
        for mode in ("assoc", "restr"):
            for n in range(7):
                if typeB_factorial_conv(n, mode, m) != oracle_total(n, 0, mode, m):
                    conv_bad.append((m, mode, n))
    howard_bad = []
    for n in range(8):
        for k in range(n + 1):
            lhs, rhs = howard_check(n, k, variant="type-a")
            if lhs != rhs:
                howard_bad.append(("type-a", n, k))
    for variant, ms in (("type-b", (2, 3)), ("howard1", (2,))):
        for m in ms:
            for r in range(7):
                for n in range(7 - r):
                    for k in range(n + 1):
                        lhs, rhs = howard_check(n, k, r, m, variant=variant)
                        if lhs != rhs:
                            howard_bad.append((variant, m, n, k, r))
    ok = not conv_bad and not howard_bad
    _report(10, "window convolution totals and cross-window identities", ok)
    assert not conv_bad, conv_bad[:5]
    assert not howard_bad, howard_bad[:5]


def test_criterion_11_asymptotics():
    inv = inv_sqrt_e(80)
    bad = []
    for r in range(3):
        errs = []
        for n in (10, 20, 30):
            exact = Fraction(d_rec(r, n), factorial(n)) / d_asym(r, n)
            errs.append(abs(exact / inv - 1))
        if not (errs[0] > errs[1] > errs[2]):
            bad.append((r, "not decreasing", [float(e) for e in errs]))
        if errs[2] >= Fraction(5, 100):
            bad.append((r, "error at n=30", float(errs[2])))
    ratio25 = Fraction(d_rec(0, 25), 2**25 * factorial(25))
    near = abs(ratio25 - inv) < Fraction(1, 100)
    ok = not bad and near
    _report(
        11,
        "normalized d-family ratios approach 1/sqrt(e)",
        ok,
        "plain ratio at n=25 off by %.3e" % float(abs(ratio25 - inv)),
    )
    assert not bad, bad
    assert near


def test_criterion_12_riordan_group_laws_randomized():
    rng = random.Random(20240801)
    order = 12
    arrays = []
    for _ in range(50):
        g = [rng.choice([1, 2, 3])] + [rng.randint(-3, 3) for _ in range(order)]
        f = [0, rng.choice([1, 2, 3])] + [rng.randint(-3, 3) for _ in range(order - 1)]
        arrays.append(
            ExpRiordanArray(FPS.from_coeffs(g, order), FPS.from_coeffs(f, order))
        )
    ident = ExpRiordanArray.identity(order)
    for arr in arrays:
        assert arr.multiply(ident)._table == arr._table
        assert ident.multiply(arr)._table == arr._table
        inverse = arr.invert()
        assert arr.multiply(inverse)._table == ident._table
        assert inverse.multiply(arr)._table == ident._table
        rebuilt = production_rebuild(arr)
        for n in range(order + 1):
            for k in range(n + 1):
                assert rebuilt[n][k] == arr.entry(n, k)
    for i in range(0, 48, 3):
        a, b, c = arrays[i], arrays[i + 1], arrays[i + 2]
        assert (
            a.multiply(b).multiply(c)._table == a.multiply(b.multiply(c))._table
        )
    _report(12, "Riordan group laws and production rebuild, 50 random arrays", True)
