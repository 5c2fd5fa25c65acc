"""Words over a signed generator alphabet.

A generator of rank-``k`` context is an index in ``1..k``; its formal
inverse is the negated index.  A :class:`Word` is an immutable sequence of
such signed indices, and ``u * v`` is concatenation in the free monoid on
generators and inverses.

Text format: one ASCII letter per symbol.  ``a``..``z`` denote generators
1..26 and the corresponding capitals their inverses; ``#`` separates the two
halves of a marked word; a trailing ``$`` is accepted and ignored.  Rank-1
contexts additionally accept ``x``/``X`` for the single generator and its
inverse, and rank-1 words print that way.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

HASH = "#"
END_MARKER = "$"

# Symbol names used by the rank-1 grammar/automaton alphabets.
SYM_X = "x"
SYM_XBAR = "x̄"


class WordSyntaxError(ValueError):
    """Unparseable word text; ``position`` is the offending 0-based index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RankError(ValueError):
    """A letter's generator index exceeds the rank of the context."""


class Letter(NamedTuple):
    index: int
    inverted: bool

    @property
    def signed(self) -> int:
        return -self.index if self.inverted else self.index


def _check_signed(signed: tuple[int, ...]) -> tuple[int, ...]:
    for s in signed:
        if not isinstance(s, int) or s == 0:
            raise ValueError(f"letters must be nonzero integers, got {s!r}")
    return signed


class Word:
    """Immutable word; ``signed`` holds +i for x_i and -i for its inverse."""

    __slots__ = ("signed",)

    def __init__(self, signed: Iterable[int] = ()):
        object.__setattr__(self, "signed", _check_signed(tuple(signed)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(l.signed for l in letters)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(abs(s), s < 0) for s in self.signed)

    @property
    def max_index(self) -> int:
        return max((abs(s) for s in self.signed), default=0)

    def inverse(self) -> "Word":
        """Reverse the word and invert every letter."""
        return Word(-s for s in reversed(self.signed))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.signed + other.signed)

    def __len__(self) -> int:
        return len(self.signed)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signed)

    def __bool__(self) -> bool:
        return bool(self.signed)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.signed == other.signed

    def __hash__(self) -> int:
        return hash(self.signed)

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"

    def to_text(self, rank: int | None = None) -> str:
        if rank == 1 or (rank is None and self.max_index <= 1):
            return "".join("x" if s > 0 else "X" for s in self.signed)
        return "".join(
            chr(ord("a") + abs(s) - 1) if s > 0 else chr(ord("A") + abs(s) - 1)
            for s in self.signed
        )

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        return _parse(text, rank, allow_hash=False)[0]


class MarkedWord(NamedTuple):
    """The string ``left # right``; exactly one separator."""

    left: Word
    right: Word

    @property
    def letter_count(self) -> int:
        return len(self.left) + len(self.right)

    def to_text(self, rank: int | None = None) -> str:
        return self.left.to_text(rank) + HASH + self.right.to_text(rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "MarkedWord":
        left, right = _parse(text, rank, allow_hash=True)
        if right is None:
            raise WordSyntaxError("marked word needs exactly one '#'", len(text))
        return cls(left, right)


def parse_any(text: str, rank: int) -> Word | MarkedWord:
    """Parse either a plain word or a one-separator marked word."""
    left, right = _parse(text, rank, allow_hash=True)
    return left if right is None else MarkedWord(left, right)


def _letter_index(c: str, rank: int, pos: int) -> int:
    if rank == 1 and c in ("x", "X"):
        return 1 if c == "x" else -1
    if "a" <= c <= "z":
        idx = ord(c) - ord("a") + 1
    elif "A" <= c <= "Z":
        idx = -(ord(c) - ord("A") + 1)
    else:
        raise WordSyntaxError(f"unexpected character {c!r}", pos)
    if abs(idx) > rank:
        raise RankError(
            f"letter {c!r} is generator {abs(idx)}, beyond rank {rank} (at position {pos})"
        )
    return idx


def _parse(text: str, rank: int, allow_hash: bool) -> tuple[Word, Word | None]:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    parts: list[list[int]] = [[]]
    for pos, c in enumerate(text):
        if c == END_MARKER:
            if pos != len(text) - 1:
                raise WordSyntaxError("'$' is only allowed at the end", pos)
            break
        if c == HASH:
            if not allow_hash:
                raise WordSyntaxError("separator '#' not allowed here", pos)
            if len(parts) == 2:
                raise WordSyntaxError("more than one '#'", pos)
            parts.append([])
            continue
        parts[-1].append(_letter_index(c, rank, pos))
    left = Word(parts[0])
    right = Word(parts[1]) if len(parts) == 2 else None
    return left, right


def rank1_symbols(w: Word) -> tuple[str, ...]:
    """Render a rank-1 word as the symbol alphabet used by the machines."""
    for s in w.signed:
        if abs(s) != 1:
            raise RankError(f"rank-1 word expected, found generator {abs(s)}")
    return tuple(SYM_X if s > 0 else SYM_XBAR for s in w.signed)


def word_from_rank1_symbols(symbols: Iterable[str]) -> Word:
    signed = []
    for sym in symbols:
        if sym == SYM_X:
            signed.append(1)
        elif sym == SYM_XBAR:
            signed.append(-1)
        else:
            raise ValueError(f"not a rank-1 letter symbol: {sym!r}")
    return Word(signed)


def marked_symbols(mw: MarkedWord) -> tuple[str, ...]:
    return rank1_symbols(mw.left) + (HASH,) + rank1_symbols(mw.right)


def pretty(signed: tuple[int, ...], rank: int | None = None) -> str:
    """Human-readable rendering of a reduced word, e.g. ``a·b⁻¹`` or ``ε``."""
    if not signed:
        return "ε"
    use_x = rank == 1 or (rank is None and all(abs(s) == 1 for s in signed))
    out = []
    for s in signed:
        name = "x" if use_x else chr(ord("a") + abs(s) - 1)
        out.append(name if s > 0 else name + "⁻¹")
    return "·".join(out)
