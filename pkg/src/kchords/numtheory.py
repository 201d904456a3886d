"""Additive decompositions: four squares, twenty squares above a floor, and
eighty pronic numbers ``a(a+1)`` above a floor.

The twenty-square construction writes ``k - threshold(c)`` as four squares
``x_1..x_4`` and expands each ``f(x) = x^2 + 2500c^2 + (4c+1)^2`` into five
squares exceeding ``c^2``.  Below the threshold a bounded depth-first
search is used instead, which may report infeasibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt


class InfeasibleError(ValueError):
    """No decomposition with the requested shape exists (fallback regime only)."""


@dataclass(frozen=True)
class SquareDecomposition:
    target: int
    terms: tuple[int, ...]
    floor: int

    def check(self, count: int | None = None) -> bool:
        return (
            sum(x * x for x in self.terms) == self.target
            and all(x * x > self.floor * self.floor for x in self.terms)
            and (count is None or len(self.terms) == count)
        )


@dataclass(frozen=True)
class PronicDecomposition:
    target: int
    terms: tuple[int, ...]
    floor: int

    def check(self, count: int = 80) -> bool:
        return (
            len(self.terms) == count
            and sum(a * (a + 1) for a in self.terms) == self.target
            and all(a >= self.floor for a in self.terms)
        )


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _two_squares(n: int, cap: int) -> tuple[int, int] | None:
    """Largest-first ``(a, b)`` with ``cap >= a >= b >= 0`` and ``a^2 + b^2 = n``."""
    a = min(cap, isqrt(n))
    while a * a * 2 >= n:
        rest = n - a * a
        if _is_square(rest):
            return a, isqrt(rest)
        a -= 1
    return None


def _three_squares_possible(n: int) -> bool:
    """Legendre: ``n`` is a sum of three squares unless ``n = 4^a (8b + 7)``."""
    while n and n % 4 == 0:
        n //= 4
    return n % 8 != 7


def four_squares(n: int) -> tuple[int, int, int, int]:
    """Lexicographically largest ``(x1 >= x2 >= x3 >= x4 >= 0)`` with squares summing to ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n and n % 8 == 0:
        # all four terms must be even, and halving preserves the order
        return tuple(2 * x for x in four_squares(n // 4))
    x1 = isqrt(n)
    while x1 >= 0:
        r1 = n - x1 * x1
        if not _three_squares_possible(r1):
            x1 -= 1
            continue
        x2 = min(x1, isqrt(r1))
        while x2 * x2 * 3 >= r1:
            r2 = r1 - x2 * x2
            pair = _two_squares(r2, x2)
            if pair is not None:
                return x1, x2, pair[0], pair[1]
            x2 -= 1
        x1 -= 1
    raise AssertionError("unreachable: every non-negative integer is a sum of four squares")


def threshold(c: int) -> int:
    """Smallest ``k`` for which the twenty-square construction applies: ``4(2500c^2 + (4c+1)^2)``."""
    return 4 * (2500 * c * c + (4 * c + 1) ** 2)


def five_squares_f(x: int, c: int) -> tuple[int, int, int, int, int]:
    """Five bases, each greater than ``c``, whose squares sum to
    ``x^2 + 2500c^2 + (4c+1)^2``.

    For ``x > c``: ``(x, 30c, 24c, 32c, 4c+1)``.  For ``x <= c`` the parity
    of ``x`` picks one of two balanced splits, which keep every base above
    ``c`` even at ``x = c``.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    if x < 0:
        raise ValueError("x must be non-negative")
    if x > c:
        return x, 30 * c, 24 * c, 32 * c, 4 * c + 1
    if x % 2 == 0:
        hi, lo = (50 * c + x) // 2, (50 * c - x) // 2
        return hi, hi, lo, lo, 4 * c + 1
    hi, lo = (4 * c + 1 + x) // 2, (4 * c + 1 - x) // 2
    return hi, hi, lo, lo, 50 * c


def _search_terms(target: int, count: int, least: int, value) -> tuple[int, ...] | None:
    """Non-increasing ``count`` terms ``>= least`` with ``sum(value(t)) == target``.

    Largest-first depth-first search with a memo of failed states.
    """

    @lru_cache(maxsize=None)
    def solve(rest: int, left: int, cap: int) -> tuple[int, ...] | None:
        if left == 0:
            return () if rest == 0 else None
        low = value(least)
        if rest < left * low or rest > left * value(cap):
            return None
        t = cap
        while t >= least:
            vt = value(t)
            if vt <= rest and rest - vt >= (left - 1) * low:
                tail = solve(rest - vt, left - 1, t)
                if tail is not None:
                    return (t,) + tail
            t -= 1
        return None

    cap = least
    while value(cap + 1) <= target:
        cap += 1
    try:
        return solve(target, count, cap)
    finally:
        solve.cache_clear()


def twenty_squares_above(k: int, c: int) -> SquareDecomposition:
    """Twenty integers, each with square greater than ``c^2``, whose squares sum to ``k``.

    Raises
    ------
    InfeasibleError
        Only below ``threshold(c)`` (or for ``c = 0``), when the exhaustive
        fallback finds nothing.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    if c >= 1 and k >= threshold(c):
        terms: list[int] = []
        for x in four_squares(k - threshold(c)):
            terms.extend(five_squares_f(x, c))
        return SquareDecomposition(k, tuple(terms), c)
    if k < 0:
        raise InfeasibleError(f"{k} is negative")
    found = _search_terms(k, 20, c + 1, lambda t: t * t)
    if found is None:
        raise InfeasibleError(f"{k} is not a sum of 20 squares each larger than {c * c}")
    return SquareDecomposition(k, found, c)


def pronic_split(x: int) -> tuple[int, int, int, int]:
    """Four terms ``(x, x, x-1, x-1)`` with ``sum a(a+1) == 4x^2``."""
    return x, x, x - 1, x - 1


def eighty_pronic(k: int, c: int) -> PronicDecomposition:
    """Eighty integers ``a_i >= c`` with ``sum a_i(a_i + 1) == k``; ``k`` must be divisible by 4.

    Above ``4 * threshold(c + 1)`` this writes ``k / 4`` as twenty squares
    larger than ``(c+1)^2`` and splits each ``4x^2`` into four pronic terms.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    if k % 4 != 0:
        raise ValueError(f"k={k} is not divisible by 4")
    if k >= 4 * threshold(c + 1):
        squares = twenty_squares_above(k // 4, c + 1)
        terms: list[int] = []
        for x in squares.terms:
            terms.extend(pronic_split(x))
        return PronicDecomposition(k, tuple(terms), c)
    if k < 0:
        raise InfeasibleError(f"{k} is negative")
    found = _search_terms(k, 80, c, lambda t: t * (t + 1))
    if found is None:
        raise InfeasibleError(f"{k} is not a sum of 80 pronic numbers a(a+1) with a >= {c}")
    return PronicDecomposition(k, found, c)
