"""Checking stack automata: write-once stacks examined by a moving pointer.

A run has two phases.  During setup the machine nondeterministically writes
a stack (here: a spec-supplied generator enumerates the candidate stacks up
to a size bound, together with the initial pointer cell).  During checking
the stack is frozen; transitions read input, look at the cell under the
pointer, and move the pointer up, down, or not at all.  A pointer move that
would leave the stack is simply unavailable — that branch dies.

The end-of-input marker ``$`` is appended to each tape by the engine when
absent.  Acceptance: some setup admits a run that consumes every tape and
lands in a final state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from .words import END_MARKER, HASH

Setup = tuple[tuple[str, ...], int]


class CsaTransition(NamedTuple):
    state: str
    tape: int  # 0 for ε-moves, else 1..tapes
    symbol: str | None  # input symbol read; None exactly when tape == 0
    cell: str  # stack symbol under the pointer
    new_state: str
    move: int  # -1 down, 0 stay, +1 up

    def describe(self) -> str:
        if self.tape == 0:
            action = "ε"
        else:
            action = f"{self.symbol}@{self.tape}"
        arrow = {1: "↑", -1: "↓", 0: "-"}[self.move]
        return f"({self.state}, {action}, {self.cell}) -> ({self.new_state}, {arrow})"


@dataclass(frozen=True)
class CsaSpec:
    states: frozenset[str]
    initial: str
    finals: frozenset[str]
    stack_alphabet: frozenset[str]
    tapes: int
    transitions: tuple[CsaTransition, ...]
    setups: Callable[[int], Iterable[Setup]]

    def __post_init__(self):
        if self.tapes not in (1, 2):
            raise ValueError("tapes must be 1 or 2")
        if self.initial not in self.states or not self.finals <= self.states:
            raise ValueError("undeclared initial/final state")
        for t in self.transitions:
            if t.state not in self.states or t.new_state not in self.states:
                raise ValueError(f"undeclared state in {t.describe()}")
            if t.cell not in self.stack_alphabet:
                raise ValueError(f"undeclared stack symbol in {t.describe()}")
            if (t.tape == 0) != (t.symbol is None):
                raise ValueError(f"ε-moves read no symbol: {t.describe()}")
            if t.tape not in range(self.tapes + 1):
                raise ValueError(f"tape out of range in {t.describe()}")
            if t.move not in (-1, 0, 1):
                raise ValueError(f"bad pointer move in {t.describe()}")

    def to_table(self) -> str:
        return "\n".join(t.describe() for t in self.transitions)


class CsaResult(NamedTuple):
    accepted: bool
    setups_tried: int
    stack_writes: int  # writes observed after reading begins; 0 by contract


def default_stack_bound(tapes: Sequence[Sequence[str]]) -> int:
    """Total letter count of the input, markers excluded."""
    return sum(
        1 for tape in tapes for sym in tape if sym not in (HASH, END_MARKER)
    )


def csa_run(
    spec: CsaSpec,
    tapes: Sequence[Sequence[str]],
    stack_bound: int | None = None,
) -> CsaResult:
    if len(tapes) != spec.tapes:
        raise ValueError(f"machine has {spec.tapes} tape(s), got {len(tapes)}")
    tapes = tuple(
        tuple(t) if t and t[-1] == END_MARKER else tuple(t) + (END_MARKER,)
        for t in tapes
    )
    lengths = tuple(len(t) for t in tapes)
    if stack_bound is None:
        stack_bound = default_stack_bound(tapes)

    index: dict[tuple[str, int, str | None, str], list[tuple[str, int]]] = {}
    for t in spec.transitions:
        key = (t.state, t.tape, t.symbol, t.cell)
        index.setdefault(key, []).append((t.new_state, t.move))

    tried = 0
    for cells, start_ptr in spec.setups(stack_bound):
        tried += 1
        if not 0 <= start_ptr < len(cells):
            raise ValueError("setup pointer outside the stack")
        top = len(cells) - 1
        start = (spec.initial, start_ptr, (0,) * spec.tapes)
        seen = {start}
        queue = deque([start])
        while queue:
            state, ptr, positions = queue.popleft()
            if state in spec.finals and positions == lengths:
                return CsaResult(True, tried, 0)
            cell = cells[ptr]
            moves: list[tuple[tuple[str, int], tuple[int, ...]]] = []
            for succ in index.get((state, 0, None, cell), ()):
                moves.append((succ, positions))
            for tape_no in range(1, spec.tapes + 1):
                pos = positions[tape_no - 1]
                if pos >= lengths[tape_no - 1]:
                    continue
                sym = tapes[tape_no - 1][pos]
                for succ in index.get((state, tape_no, sym, cell), ()):
                    lst = list(positions)
                    lst[tape_no - 1] = pos + 1
                    moves.append((succ, tuple(lst)))
            for (new_state, move), new_positions in moves:
                np = ptr + move
                if not 0 <= np <= top:
                    continue  # the pointer never leaves the stack
                nxt = (new_state, np, new_positions)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return CsaResult(False, tried, 0)


def csa_accepts(
    spec: CsaSpec,
    tapes: Sequence[Sequence[str]],
    stack_bound: int | None = None,
) -> bool:
    return csa_run(spec, tapes, stack_bound).accepted
