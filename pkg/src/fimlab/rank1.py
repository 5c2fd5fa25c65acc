"""Integer-interval model of the rank-1 free inverse monoid.

A rank-1 word walks on the integers: the generator steps right, its inverse
steps left.  The walk of a word spans an interval ``[-l, n]`` containing 0
and ends at a marked point ``m``, and the triple ``(-l, n, m)`` determines
the element the word represents.  Products compose walks: translate the
second interval by ``m`` and take the union.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import RankError, Word


class Rank1Elem(NamedTuple):
    """The triple ``(-l, n, m)``; ``l`` and ``n`` are stored non-negative."""

    l: int
    n: int
    m: int

    def validate(self) -> "Rank1Elem":
        if self.l < 0 or self.n < 0:
            raise ValueError(f"extents must be non-negative: {self}")
        if not -self.l <= self.m <= self.n:
            raise ValueError(f"mark outside interval: {self}")
        return self

    @property
    def is_idempotent(self) -> bool:
        return self.m == 0

    def __str__(self) -> str:
        return f"(-{self.l}, {self.n}, {self.m})"


IDENTITY = Rank1Elem(0, 0, 0)


def evaluate_rank1(w: Word) -> Rank1Elem:
    """Evaluate a rank-1 word to its triple by scanning prefix sums."""
    lo = hi = cur = 0
    for s in w.signed:
        if s == 1:
            cur += 1
            if cur > hi:
                hi = cur
        elif s == -1:
            cur -= 1
            if cur < lo:
                lo = cur
        else:
            raise RankError(f"rank-1 word expected, found generator {abs(s)}")
    return Rank1Elem(-lo, hi, cur)


def multiply_rank1(a: Rank1Elem, b: Rank1Elem) -> Rank1Elem:
    """(-l, n, m)(-l', n', m') = (-l ∧ (m - l'), n ∨ (m + n'), m + m')."""
    return Rank1Elem(
        max(a.l, b.l - a.m),
        max(a.n, a.m + b.n),
        a.m + b.m,
    )


def to_canonical_word(e: Rank1Elem) -> Word:
    """A fixed representative word for ``e``: x^n x̄^(n+l) x^(l+m).

    One representative among many; the shape is pinned for determinism.
    """
    e.validate()
    return Word([1] * e.n + [-1] * (e.n + e.l) + [1] * (e.l + e.m))
