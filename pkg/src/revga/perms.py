"""Core permutation values, reversals, strips, parsing and random instances.

Permutations are plain tuples of ints. An unsigned permutation of order n
contains each of 1..n exactly once. A signed permutation encodes the
orientation of each element in the sign of the entry (+3 / -3). The sorting
target is the identity: (1, 2, ..., n), all positive in the signed case.

Reversals are 1-based half-open intervals [i, j): positions i..j-1 are
reversed (and negated for signed permutations); j may be as large as n+1 so
the last element can be included.
"""
from __future__ import annotations

import random
from typing import NamedTuple, Sequence

MASK64 = (1 << 64) - 1

Permutation = tuple  # tuple[int, ...]; signed entries are nonzero ints


class InvalidReversal(ValueError):
    """Reversal indices do not describe a valid interval."""


class ParseError(ValueError):
    """Malformed permutation text."""


class Reversal(NamedTuple):
    i: int  # first affected position, 1-based
    j: int  # one past the last affected position


class Strip(NamedTuple):
    start: int  # 1-based, inclusive
    end: int    # 1-based, inclusive
    direction: str  # "ascending" | "descending" | "singleton"


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def validate_unsigned(p: Sequence[int]) -> None:
    if len(p) < 1 or sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")


def validate_signed(p: Sequence[int]) -> None:
    if len(p) < 1 or sorted(abs(x) for x in p) != list(range(1, len(p) + 1)):
        raise ValueError(f"magnitudes are not a permutation of 1..{len(p)}: {p!r}")


def magnitudes(p: Sequence[int]) -> Permutation:
    return tuple(abs(x) for x in p)


def signs(p: Sequence[int]) -> tuple:
    """Per-position orientation as booleans (True = positive)."""
    return tuple(x > 0 for x in p)


def check_reversal(r: Reversal, n: int) -> None:
    if not (1 <= r.i < r.j <= n + 1):
        raise InvalidReversal(f"reversal ({r.i},{r.j}) invalid for n={n}")


def apply_reversal_unsigned(p: Permutation, r: Reversal) -> Permutation:
    check_reversal(r, len(p))
    a, b = r.i - 1, r.j - 1
    return p[:a] + p[a:b][::-1] + p[b:]


def apply_reversal_signed(p: Permutation, r: Reversal) -> Permutation:
    check_reversal(r, len(p))
    a, b = r.i - 1, r.j - 1
    return p[:a] + tuple(-x for x in p[a:b][::-1]) + p[b:]


def is_identity(p: Permutation) -> bool:
    """True iff p is 1 2 .. n (all entries positive in the signed case)."""
    return all(v == k + 1 for k, v in enumerate(p))


def all_reversals(n: int, include_singletons: bool = True):
    """Every legal reversal for order n, in lexicographic (i, j) order.

    Length-1 reversals are no-ops on unsigned permutations; pass
    include_singletons=False to skip them.
    """
    lo = 1 if include_singletons else 2
    return [Reversal(i, j) for i in range(1, n + 1) for j in range(i + lo, n + 2)]


def find_strips(p: Permutation) -> list:
    """Maximal runs of consecutive values, left to right.

    The spans tile positions 1..n. A lone position that extends neither
    neighbor run is a singleton.
    """
    n = len(p)
    out = []
    s = 0
    while s < n:
        e = s
        if e + 1 < n and p[e + 1] - p[e] == 1:
            while e + 1 < n and p[e + 1] - p[e] == 1:
                e += 1
            direction = "ascending"
        elif e + 1 < n and p[e + 1] - p[e] == -1:
            while e + 1 < n and p[e + 1] - p[e] == -1:
                e += 1
            direction = "descending"
        else:
            direction = "singleton"
        out.append(Strip(s + 1, e + 1, direction))
        s = e + 1
    return out


def _mix64(x: int) -> int:
    # splitmix64 finalizer; used only to derive child seeds.
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, *parts: int) -> int:
    """Deterministically mix a master seed with integer tags (n, run, ...)."""
    x = master & MASK64
    for part in parts:
        x = _mix64(x ^ (part & MASK64))
    return x


class Rng(random.Random):
    """Project-wide deterministic RNG.

    A Mersenne Twister seeded with a 64-bit integer; CPython's generator is
    platform independent, so identical seeds give identical draw sequences
    everywhere. All stochastic operations take one of these explicitly.
    """

    def __init__(self, seed: int):
        self.seed_value = seed & MASK64
        super().__init__(self.seed_value)

    def spawn(self, *parts: int) -> "Rng":
        return Rng(derive_seed(self.seed_value, *parts))


def random_permutation(n: int, rng: Rng) -> Permutation:
    """Random instance: n swaps of distinct positions applied to identity."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = list(range(1, n + 1))
    if n >= 2:
        for _ in range(n):
            a = rng.randrange(n)
            b = rng.randrange(n - 1)
            if b >= a:
                b += 1
            p[a], p[b] = p[b], p[a]
    return tuple(p)


def parse_permutation(text: str):
    """Parse whitespace-separated integers into (permutation, is_signed).

    Any explicit +/- marker makes the whole input signed; unmarked entries
    in a signed input count as positive.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty permutation")
    values = []
    signed = False
    for tok in tokens:
        if tok[0] in "+-":
            signed = True
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad element {tok!r}") from None
        if v == 0:
            raise ParseError("0 is not a valid element")
        values.append(v)
    p = tuple(values)
    try:
        if signed:
            validate_signed(p)
        else:
            validate_unsigned(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return p, signed


def format_permutation(p: Permutation, signed: bool = False) -> str:
    if signed:
        return " ".join(f"{x:+d}" for x in p)
    return " ".join(str(x) for x in p)
