"""Signed permutations, cycle decomposition, and the exhaustive oracle.

A signed permutation of [n] maps i to +v or -v ("v barred") such that the
absolute images form an ordinary permutation; there are 2^n n! of them.  The
cycle decomposition here follows the convention of computing cycles on
absolute values and reattaching each bar to the value that carries it in
one-line notation, e.g.

    (-4, 6, -3, 5, 1, -2, -9, 8, 7)  ->  (1 4b 5)(2b 6)(3b)(7 9b)(8)

where "b" marks a barred value.  A cycle is *all-barred* when every value in
it is barred; a singleton (v) unbarred is a true fixed point, (vb) is not.

The counting oracle enumerates signed permutations exhaustively.  It counts,
for the first r elements "special", the permutations whose every cycle
either has window length inside the mode's range (order >= m for "assoc",
order <= m for "restr") or is all-barred, with the special elements in
distinct cycles.  It is the ground truth the closed forms, recurrences and
Riordan constructions are tested against, and shares no code with them.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "DEFAULT_MAX_ENUM",
    "ENV_MAX_ENUM",
    "EnumerationLimitError",
    "Cycle",
    "CycleDecomposition",
    "SignedPermutation",
    "cycle_decompose",
    "enumerate_signed",
    "enumeration_bound",
    "is_derangement_B",
    "oracle_triangle",
    "oracle_total",
]

DEFAULT_MAX_ENUM = 8
ENV_MAX_ENUM = "STIRLINGB_MAX_ENUM"

MODES = ("assoc", "restr")


class EnumerationLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the size bound."""


def enumeration_bound() -> int:
    raw = os.environ.get(ENV_MAX_ENUM)
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        return int(raw)
    except ValueError:
        raise EnumerationLimitError(
            "%s must be an integer, got %r" % (ENV_MAX_ENUM, raw)
        ) from None


def _check_bound(size: int, bound: int | None = None) -> None:
    limit = enumeration_bound() if bound is None else bound
    if size > limit:
        raise EnumerationLimitError(
            "enumeration over %d elements exceeds the bound %d "
            "(override with %s or --max-enum)" % (size, limit, ENV_MAX_ENUM)
        )


@dataclass(frozen=True)
class SignedPermutation:
    """One-line notation: image[i-1] = sigma(i), negative meaning barred."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(abs(v) for v in self.image) != list(range(1, n + 1)):
            raise ValueError("image must be a signing of a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        """sigma(i) for i in +-1..+-n; sigma(-i) = -sigma(i)."""
        if i > 0:
            return self.image[i - 1]
        return -self.image[-i - 1]


@dataclass(frozen=True)
class Cycle:
    """One cycle, entries signed, starting at the minimal absolute value."""

    entries: tuple[int, ...]

    @property
    def order(self) -> int:
        """Number of values in the cycle window (bars ignored)."""
        return len(self.entries)

    @property
    def all_barred(self) -> bool:
        return all(v < 0 for v in self.entries)

    def contains_special(self, r: int) -> bool:
        """True if any value 1..r (special, by absolute value) is in the cycle."""
        return any(abs(v) <= r for v in self.entries)


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[Cycle, ...]

    def reconstruct(self) -> SignedPermutation:
        size = sum(c.order for c in self.cycles)
        image = [0] * size
        for cycle in self.cycles:
            es = cycle.entries
            for i, e in enumerate(es):
                image[abs(e) - 1] = es[(i + 1) % len(es)]
        return SignedPermutation(tuple(image))


def enumerate_signed(n: int, *, bound: int | None = None):
    """Yield all 2^n n! signed permutations of [n], deterministically."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_bound(n, bound)
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(p * s for p, s in zip(perm, signs)))


def cycle_decompose(sigma: SignedPermutation) -> CycleDecomposition:
    """Cycles on absolute values, bars reattached from one-line notation.

    Each cycle starts at its minimal absolute value; cycles are sorted by
    that minimum.  The bar on a value is the sign it carries as an image,
    i.e. entry w in a cycle is barred exactly when sigma(predecessor) = -w.
    """
    img = sigma.image
    n = len(img)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orbit = []
        v = start
        while not seen[v]:
            seen[v] = True
            orbit.append(v)
            v = abs(img[v - 1])
        signed = tuple(img[orbit[i - 1] - 1] for i in range(len(orbit)))
        cycles.append(Cycle(signed))
    return CycleDecomposition(tuple(cycles))


def is_derangement_B(sigma: SignedPermutation) -> bool:
    """No i with sigma(i) = +i (barred 'fixed points' are allowed)."""
    return all(v != i + 1 for i, v in enumerate(sigma.image))


def _window_ok(length: int, mode: str, m: int) -> bool:
    if mode == "assoc":
        return length >= m
    return length <= m


def _validate_mode(mode: str, m: int) -> None:
    if mode not in MODES:
        raise ValueError("mode must be one of %s, got %r" % (MODES, mode))
    if m < 0:
        raise ValueError("m must be >= 0")


@lru_cache(maxsize=None)
def _census(n: int, r: int, mode: str, m: int) -> tuple[int, ...]:
    """counts[k] = signed permutations of [n+r] with k+r cycles such that
    every cycle is inside the mode/m window or all-barred and the special
    values 1..r lie in distinct cycles.  Exhaustive enumeration.
    """
    size = n + r
    counts = [0] * (n + 1)
    n_signs = 1 << size
    for perm in itertools.permutations(range(1, size + 1)):
        seen = 0
        bad = False
        forced = 0  # union of bitmasks of cycles that must be all-barred
        n_cycles = 0
        for start in range(1, size + 1):
            if (seen >> (start - 1)) & 1:
                continue
            mask = 0
            length = 0
            specials = 0
            v = start
            while not (seen >> (v - 1)) & 1:
                seen |= 1 << (v - 1)
                mask |= 1 << (v - 1)
                length += 1
                if v <= r:
                    specials += 1
                v = perm[v - 1]
            if specials > 1:
                bad = True
                break
            n_cycles += 1
            if not _window_ok(length, mode, m):
                forced |= mask  # exemption: the whole cycle barred
        if bad:
            continue
        k = n_cycles - r
        hits = 0
        for signs in range(n_signs):  # bit v-1 set = value v barred
            if (signs & forced) == forced:
                hits += 1
        counts[k] += hits
    return tuple(counts)


def oracle_triangle(
    n: int, r: int, k: int, mode: str, m: int, *, bound: int | None = None
) -> int:
    """Exhaustive count of signed permutations of [n+r] with k+r cycles,
    special elements 1..r in distinct cycles, and every cycle either inside
    the mode/m window or all-barred.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be >= 0")
    _validate_mode(mode, m)
    _check_bound(n + r, bound)
    if k < 0 or k > n:
        return 0
    return _census(n, r, mode, m)[k]


def oracle_total(n: int, r: int, mode: str, m: int, *, bound: int | None = None) -> int:
    """Sum of oracle_triangle over all k (0..n)."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be >= 0")
    _validate_mode(mode, m)
    _check_bound(n + r, bound)
    return sum(_census(n, r, mode, m))
