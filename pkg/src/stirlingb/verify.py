"""Cross-route verification suites.

Every quantity the package can compute more than one way is compared here on
bounded grids.  A scope runs its checks in a fixed order and stops at the
first failing check; the report carries the first mismatching cell with both
values and both provenances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial

from . import sequences
from .fps import FormalPowerSeries
from .permcore import oracle_total, oracle_triangle
from .riordan import (
    ExpRiordanArray,
    make_triangle_B,
    production_rebuild,
    unsigned_conjugate,
)

__all__ = [
    "SCOPES",
    "CheckResult",
    "Mismatch",
    "VerificationReport",
    "check_all",
    "check_asymptotic",
    "check_howard",
    "check_oracle",
    "check_riordan",
    "inv_sqrt_e",
    "run_scope",
]

SCOPES = ("all", "riordan", "oracle", "howard", "asymptotic")

DEFAULT_SEED = 20240801


@dataclass(frozen=True)
class Mismatch:
    check: str
    coordinates: tuple[tuple[str, object], ...]
    left: tuple[str, object]
    right: tuple[str, object]

    def describe(self) -> str:
        coords = ", ".join("%s=%s" % kv for kv in self.coordinates)
        return "%s at (%s): %s gives %s but %s gives %s" % (
            self.check,
            coords,
            self.left[0],
            self.left[1],
            self.right[0],
            self.right[1],
        )


@dataclass
class CheckResult:
    name: str
    comparisons: int = 0
    mismatch: Mismatch | None = None
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.mismatch is None


@dataclass
class VerificationReport:
    scope: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(res.ok for res in self.results)

    @property
    def failure(self) -> Mismatch | None:
        for res in self.results:
            if res.mismatch is not None:
                return res.mismatch
        return None

    @property
    def comparisons(self) -> int:
        return sum(res.comparisons for res in self.results)

    def lines(self) -> list[str]:
        out = []
        for res in self.results:
            if res.ok:
                out.append("ok   %s (%d comparisons)" % (res.name, res.comparisons))
            else:
                out.append("FAIL %s" % res.mismatch.describe())
            for note in res.notes:
                out.append("     %s" % note)
        verdict = "PASS" if self.ok else "FAIL"
        out.append(
            "scope %s: %s (%d checks, %d comparisons)"
            % (self.scope, verdict, len(self.results), self.comparisons)
        )
        return out


def _run(name: str, cells) -> CheckResult:
    """Consume (coordinates, (label, value), (label, value)) triples until the
    first mismatch."""
    res = CheckResult(name)
    for coords, left, right in cells:
        res.comparisons += 1
        if left[1] != right[1]:
            res.mismatch = Mismatch(name, tuple(coords), left, right)
            break
    return res


def _collect(report: VerificationReport, checks) -> VerificationReport:
    for factory in checks:
        res = factory()
        report.results.append(res)
        if not res.ok:
            break
    return report


# -- riordan scope ---------------------------------------------------------------


def _random_array(rng: random.Random, order: int) -> ExpRiordanArray:
    g = [Fraction(rng.randint(1, 3))] + [
        Fraction(rng.randint(-3, 3)) for _ in range(order)
    ]
    f = [Fraction(0), Fraction(rng.choice((1, -1, 2)))] + [
        Fraction(rng.randint(-2, 2)) for _ in range(max(order - 1, 0))
    ]
    return ExpRiordanArray(
        FormalPowerSeries.from_coeffs(g, order),
        FormalPowerSeries.from_coeffs(f, order),
    )


def check_riordan(
    max_n: int = 8,
    max_r: int = 3,
    seed: int = DEFAULT_SEED,
    samples: int = 12,
) -> VerificationReport:
    report = VerificationReport("riordan")
    order = max(max_n, 1)

    def triangle_vs_riordan(m):
        def cells():
            for r in range(max_r + 1):
                arr = make_triangle_B(m, r, order=order)
                for n in range(max_n + 1):
                    row = arr.row(n)
                    for k in range(n + 1):
                        if m == 2:
                            rec = sequences.triangle_ge2_rec(n, k, r)
                        else:
                            rec = sequences.triangle_gem_rec(n, k, r, m)
                        yield (
                            (("m", m), ("r", r), ("n", n), ("k", k)),
                            ("recurrence", rec),
                            ("riordan", row[k]),
                        )

        return _run("triangle-recurrence-vs-riordan[m=%d]" % m, cells())

    def inverse_identity():
        def cells():
            inv_order = min(order, 10)
            for r in range(max_r + 1):
                arr = make_triangle_B(2, r, order=inv_order)
                prod = arr.multiply(arr.invert())
                prod2 = arr.invert().multiply(arr)
                ident = ExpRiordanArray.identity(inv_order)
                for n in range(inv_order + 1):
                    for k in range(n + 1):
                        want = ident.entry(n, k)
                        yield (
                            (("r", r), ("n", n), ("k", k), ("side", "right")),
                            ("riordan", prod.entry(n, k)),
                            ("riordan", want),
                        )
                        yield (
                            (("r", r), ("n", n), ("k", k), ("side", "left")),
                            ("riordan", prod2.entry(n, k)),
                            ("riordan", want),
                        )

        return _run("group-inverse-two-sided", cells())

    def inverse_recurrence():
        def cells():
            for r in range(max_r + 1):
                conj = unsigned_conjugate(make_triangle_B(2, r, order=order).invert())
                for n in range(max_n + 1):
                    for k in range(n + 1):
                        yield (
                            (("r", r), ("n", n), ("k", k)),
                            ("recurrence", Fraction(sequences.inverse_triangle_rec(n, k, r))),
                            ("riordan", conj.entry(n, k)),
                        )

        return _run("inverse-recurrence-vs-conjugate", cells())

    def production():
        def cells():
            for r in range(max_r + 1):
                arr = make_triangle_B(2, r, order=order)
                rebuilt = production_rebuild(arr)
                for n in range(arr.order + 1):
                    row = arr.row(n)
                    for k in range(n + 1):
                        yield (
                            (("r", r), ("n", n), ("k", k)),
                            ("riordan", rebuilt[n][k]),
                            ("riordan", row[k]),
                        )

        return _run("production-matrix-rebuild", cells())

    def random_laws():
        def cells():
            rng = random.Random(seed)
            count = samples if max_n > 0 else 0
            law_order = min(max(max_n, 2), 8)
            ident = ExpRiordanArray.identity(law_order)
            for idx in range(count):
                a = _random_array(rng, law_order)
                b = _random_array(rng, law_order)
                c = _random_array(rng, law_order)
                unit = a.multiply(ident)
                inv = a.multiply(a.invert())
                left = a.multiply(b).multiply(c)
                right = a.multiply(b.multiply(c))
                rebuilt = production_rebuild(a)
                for n in range(law_order + 1):
                    for k in range(n + 1):
                        base = (("sample", idx), ("n", n), ("k", k))
                        yield (
                            base + (("law", "unit"),),
                            ("riordan", unit.entry(n, k)),
                            ("riordan", a.entry(n, k)),
                        )
                        yield (
                            base + (("law", "inverse"),),
                            ("riordan", inv.entry(n, k)),
                            ("riordan", ident.entry(n, k)),
                        )
                        yield (
                            base + (("law", "associativity"),),
                            ("riordan", left.entry(n, k)),
                            ("riordan", right.entry(n, k)),
                        )
                        yield (
                            base + (("law", "production"),),
                            ("riordan", rebuilt[n][k]),
                            ("riordan", a.entry(n, k)),
                        )

        return _run("random-group-laws", cells())

    return _collect(
        report,
        [
            lambda: triangle_vs_riordan(2),
            lambda: triangle_vs_riordan(3),
            inverse_identity,
            inverse_recurrence,
            production,
            random_laws,
        ],
    )


# -- oracle scope ----------------------------------------------------------------


def check_oracle(
    max_n: int = 4, max_r: int = 2, bound: int | None = None
) -> VerificationReport:
    report = VerificationReport("oracle")

    def triangle_vs_oracle(m):
        def cells():
            for r in range(max_r + 1):
                for n in range(max_n + 1):
                    for k in range(n + 1):
                        if m == 2:
                            rec = sequences.triangle_ge2_rec(n, k, r)
                        else:
                            rec = sequences.triangle_gem_rec(n, k, r, m)
                        yield (
                            (("m", m), ("r", r), ("n", n), ("k", k)),
                            ("recurrence", rec),
                            ("oracle", oracle_triangle(n, r, k, "assoc", m, bound=bound)),
                        )

        return _run("triangle-vs-oracle[m=%d]" % m, cells())

    def totals_vs_convolution():
        def cells():
            for m in (2, 3):
                for mode in ("assoc", "restr"):
                    for n in range(max_n + 1):
                        yield (
                            (("m", m), ("mode", mode), ("n", n)),
                            ("explicit", sequences.typeB_factorial_conv(n, mode, m)),
                            ("oracle", oracle_total(n, 0, mode, m, bound=bound)),
                        )

        return _run("window-totals-vs-convolution", cells())

    def diagonals_vs_oracle():
        def cells():
            for m in (1, 2, 3):
                for r in range(max_r + 1):
                    for n in range(max_n + 1):
                        first, second = sequences.diagonals_delta(n, r, m)
                        if n + 1 <= max_n:
                            yield (
                                (("m", m), ("r", r), ("entry", "(n+1,n)"), ("n", n)),
                                ("explicit", first),
                                (
                                    "oracle",
                                    oracle_triangle(n + 1, r, n, "assoc", m, bound=bound),
                                ),
                            )
                        if n + 2 <= max_n:
                            yield (
                                (("m", m), ("r", r), ("entry", "(n+2,n)"), ("n", n)),
                                ("explicit", second),
                                (
                                    "oracle",
                                    oracle_triangle(n + 2, r, n, "assoc", m, bound=bound),
                                ),
                            )

        return _run("subdiagonal-closed-forms-vs-oracle", cells())

    return _collect(
        report,
        [
            lambda: triangle_vs_oracle(2),
            lambda: triangle_vs_oracle(3),
            totals_vs_convolution,
            diagonals_vs_oracle,
        ],
    )


# -- howard scope ----------------------------------------------------------------


def check_howard(max_n: int = 5, max_r: int = 2) -> VerificationReport:
    report = VerificationReport("howard")

    def type_a():
        def cells():
            for n in range(max_n + 1):
                for k in range(n + 1):
                    lhs, rhs = sequences.howard_check(n, k, variant="type-a")
                    yield (
                        (("n", n), ("k", k)),
                        ("recurrence", lhs),
                        ("explicit", rhs),
                    )

        return _run("howard-type-a", cells())

    def type_b():
        def cells():
            for m in (2, 3):
                for r in range(max_r + 1):
                    for n in range(max_n + 1):
                        for k in range(n + 1):
                            lhs, rhs = sequences.howard_check(n, k, r, m, "type-b")
                            yield (
                                (("m", m), ("r", r), ("n", n), ("k", k)),
                                ("recurrence", lhs),
                                ("explicit", rhs),
                            )

        return _run("howard-type-b", cells())

    def howard1():
        def cells():
            for r in range(max_r + 1):
                for n in range(max_n + 1):
                    for k in range(n + 1):
                        lhs, rhs = sequences.howard_check(n, k, r, 2, "howard1")
                        yield (
                            (("r", r), ("n", n), ("k", k)),
                            ("recurrence", lhs),
                            ("explicit", rhs),
                        )

        return _run("howard-free-sign-reduction", cells())

    return _collect(report, [type_a, type_b, howard1])


# -- asymptotic scope --------------------------------------------------------------


def inv_sqrt_e(digits: int = 80) -> Fraction:
    """e^(-1/2) as an exact Fraction accurate to `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return Fraction(Decimal(-1).exp().sqrt())


def _format_fraction(value: Fraction, precision: int) -> str:
    with localcontext() as ctx:
        ctx.prec = max(precision, 1)
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def check_asymptotic(
    max_n: int = 30, max_r: int = 2, precision: int = 30
) -> VerificationReport:
    report = VerificationReport("asymptotic")
    target = inv_sqrt_e()
    grid = [n for n in (10, 20, 30) if n <= max_n]

    def ratio_error(r, n):
        ratio = Fraction(sequences.d_rec(r, n), factorial(n)) / sequences.d_asym(r, n)
        return abs(ratio / target - 1)

    def decreasing():
        def cells():
            for r in range(min(max_r, 2) + 1):
                errors = [ratio_error(r, n) for n in grid]
                for a, b, na, nb in zip(errors, errors[1:], grid, grid[1:]):
                    yield (
                        (("r", r), ("from_n", na), ("to_n", nb)),
                        ("recurrence", a > b),
                        ("explicit", True),
                    )
                if grid and grid[-1] == 30:
                    yield (
                        (("r", r), ("n", 30), ("threshold", "0.05")),
                        ("recurrence", errors[-1] < Fraction(1, 20)),
                        ("explicit", True),
                    )

        res = _run("ratio-error-decreasing", cells())
        if res.ok and grid:
            notes = []
            for r in range(min(max_r, 2) + 1):
                notes.append(
                    "r=%d error at n=%d: %s"
                    % (r, grid[-1], _format_fraction(ratio_error(r, grid[-1]), precision))
                )
            res.notes = tuple(notes)
        return res

    def plain_limit():
        def cells():
            if max_n >= 25:
                n = 25
                ratio = Fraction(sequences.d_rec(0, n), factorial(n) * 2**n)
                yield (
                    (("n", n), ("threshold", "0.01")),
                    ("recurrence", abs(ratio - target) < Fraction(1, 100)),
                    ("explicit", True),
                )

        return _run("plain-ratio-near-limit", cells())

    return _collect(report, [decreasing, plain_limit])


# -- composition --------------------------------------------------------------------


def check_all(
    max_n: int | None = None,
    max_r: int | None = None,
    seed: int = DEFAULT_SEED,
    samples: int = 12,
    bound: int | None = None,
    precision: int = 30,
) -> VerificationReport:
    report = VerificationReport("all")
    scoped = [
        lambda: check_riordan(
            max_n if max_n is not None else 8,
            max_r if max_r is not None else 3,
            seed,
            samples,
        ),
        lambda: check_oracle(
            max_n if max_n is not None else 4,
            max_r if max_r is not None else 2,
            bound,
        ),
        lambda: check_howard(
            max_n if max_n is not None else 5,
            max_r if max_r is not None else 2,
        ),
        lambda: check_asymptotic(
            max_n if max_n is not None else 30,
            max_r if max_r is not None else 2,
            precision,
        ),
    ]
    for factory in scoped:
        sub = factory()
        report.results.extend(sub.results)
        if not sub.ok:
            break
    return report


def run_scope(
    scope: str,
    max_n: int | None = None,
    max_r: int | None = None,
    seed: int = DEFAULT_SEED,
    samples: int = 12,
    bound: int | None = None,
    precision: int = 30,
) -> VerificationReport:
    if scope == "riordan":
        return check_riordan(
            max_n if max_n is not None else 8,
            max_r if max_r is not None else 3,
            seed,
            samples,
        )
    if scope == "oracle":
        return check_oracle(
            max_n if max_n is not None else 4,
            max_r if max_r is not None else 2,
            bound,
        )
    if scope == "howard":
        return check_howard(
            max_n if max_n is not None else 5,
            max_r if max_r is not None else 2,
        )
    if scope == "asymptotic":
        return check_asymptotic(
            max_n if max_n is not None else 30,
            max_r if max_r is not None else 2,
            precision,
        )
    if scope == "all":
        return check_all(max_n, max_r, seed, samples, bound, precision)
    raise ValueError("scope must be one of %s, got %r" % (SCOPES, scope))
