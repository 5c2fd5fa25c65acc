"""Witness word families used to probe the word problem languages.

The rank-1 family w_n = x^n x̄^n x^n # x̄^n lies in the word problem for
every n, while pumping any of its blocks in step lands outside; the
three-block case table below records exactly when.  The rank-k family
interleaves per-generator idempotent blocks and is in the word problem
precisely when the exponent vectors agree componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .munn import wp_member
from .words import MarkedWord, Word


def witness_wn(n: int) -> MarkedWord:
    """w_n = x^n x̄^n x^n # x̄^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return MarkedWord(Word([1] * n + [-1] * n + [1] * n), Word([-1] * n))


@dataclass(frozen=True)
class PumpingCase:
    """One pumped instance of w_n with pump counts i, j and repetition m.

    Word shapes (the pumped pair of blocks depends on the form):

    * form 1: x^(n+im) x̄^(n+jm) x^n # x̄^n
    * form 2: x^n x̄^(n+im) x^(n+jm) # x̄^n
    * form 3: x^n x̄^n x^(n+im) # x̄^(n+jm)
    """

    form: int
    n: int
    i: int
    j: int
    m: int

    def __post_init__(self):
        if self.form not in (1, 2, 3):
            raise ValueError("form must be 1, 2 or 3")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.i < 0 or self.j < 0:
            raise ValueError("pump counts must be >= 0")
        if self.i == 0 and self.j == 0:
            raise ValueError("pump counts must not both be zero")
        if self.m < -1:
            raise ValueError("m must be >= -1")
        for e in self._exponents():
            if e < 0:
                raise ValueError(f"negative block length in {self}")

    def _exponents(self) -> tuple[int, int, int, int]:
        n, im, jm = self.n, self.i * self.m, self.j * self.m
        if self.form == 1:
            return (n + im, n + jm, n, n)
        if self.form == 2:
            return (n, n + im, n + jm, n)
        return (n, n, n + im, n + jm)

    def word(self) -> MarkedWord:
        a, b, c, d = self._exponents()
        return MarkedWord(Word([1] * a + [-1] * b + [1] * c), Word([-1] * d))

    def table_excluded(self) -> bool:
        """Does the 'not in the language' table condition cover this case?"""
        i, j, m = self.i, self.j, self.m
        if self.form in (1, 2):
            return (i != 0 and m >= 1) or (i == 0 and j != 0 and m >= 1)
        return (j != 0 and m == -1) or (j == 0 and i != 0 and m >= 1)


def pumping_case_member(c: PumpingCase) -> bool:
    return wp_member(c.word(), 1)


def witness_Lk(k: int, ms: Sequence[int], ns: Sequence[int]) -> MarkedWord:
    """x_1^(m_1) x̄_1^(m_1) … x_k^(m_k) x̄_k^(m_k) # (same with n's)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if len(ms) != k or len(ns) != k:
        raise ValueError(f"need exactly {k} exponents per side")
    if any(e < 0 for e in ms) or any(e < 0 for e in ns):
        raise ValueError("exponents must be >= 0")

    def side(exps: Sequence[int]) -> Word:
        signed: list[int] = []
        for idx, e in enumerate(exps, start=1):
            signed += [idx] * e + [-idx] * e
        return Word(signed)

    return MarkedWord(side(ms), side(ns))
