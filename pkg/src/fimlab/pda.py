"""Nondeterministic pushdown automata over one or two input tapes.

A transition replaces the single top stack symbol by a string: empty means
pop, length one retags, length two pushes.  Push strings are written
top-first, matching the usual table notation where ``(q, Z, x̄) ↦ (q, YZ)``
puts ``Y`` above ``Z``.  An input action reads one letter from one tape,
one letter from each tape simultaneously, or nothing.

Acceptance requires every tape to be fully consumed, plus the machine's
mode: a designated final state, or an empty stack — where machines whose
tables never pop their bottom marker accept with the bare marker remaining.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class EngineBudgetError(RuntimeError):
    """Configuration search outgrew its budget; the machine is misbehaving."""


class PdaTransition(NamedTuple):
    state: str
    reads: tuple[tuple[int, str], ...]  # () = ε-move; ((1, a),) ; ((1, a), (2, b))
    top: str
    new_state: str
    push: tuple[str, ...]  # replaces the top symbol, top-first

    def describe(self) -> str:
        if not self.reads:
            action = "ε"
        else:
            action = ",".join(f"{sym}@{tape}" for tape, sym in self.reads)
        pushed = "".join(self.push) if self.push else "ε"
        return f"({self.state}, {action}, {self.top}) -> ({self.new_state}, {pushed})"


@dataclass(frozen=True)
class PdaSpec:
    states: frozenset[str]
    initial: str
    finals: frozenset[str]
    acceptance: str  # "final-state" | "empty-stack"
    stack_alphabet: frozenset[str]
    bottom: str
    tapes: int
    transitions: tuple[PdaTransition, ...]

    def __post_init__(self):
        if self.acceptance not in ("final-state", "empty-stack"):
            raise ValueError(f"unknown acceptance mode {self.acceptance!r}")
        if self.tapes not in (1, 2):
            raise ValueError("tapes must be 1 or 2")
        if self.initial not in self.states:
            raise ValueError(f"initial state {self.initial!r} undeclared")
        if not self.finals <= self.states:
            raise ValueError("final states must be declared states")
        if self.bottom not in self.stack_alphabet:
            raise ValueError("bottom symbol must be in the stack alphabet")
        for t in self.transitions:
            if t.state not in self.states or t.new_state not in self.states:
                raise ValueError(f"undeclared state in {t.describe()}")
            if t.top not in self.stack_alphabet:
                raise ValueError(f"undeclared stack symbol in {t.describe()}")
            for sym in t.push:
                if sym not in self.stack_alphabet:
                    raise ValueError(f"undeclared push symbol in {t.describe()}")
            tapes_read = [tape for tape, _ in t.reads]
            if len(set(tapes_read)) != len(tapes_read):
                raise ValueError(f"duplicate tape read in {t.describe()}")
            for tape in tapes_read:
                if not 1 <= tape <= self.tapes:
                    raise ValueError(f"tape {tape} out of range in {t.describe()}")

    def to_table(self) -> str:
        return "\n".join(t.describe() for t in self.transitions)


def pda_accepts(
    spec: PdaSpec,
    tapes: Sequence[Sequence[str]],
    max_configs: int = 1_000_000,
) -> bool:
    """Search the configuration graph for an accepting run.

    The stack height is capped at total input length + 2 and repeated
    configurations are never re-expanded, so the search always terminates;
    outgrowing ``max_configs`` raises instead of rejecting.
    """
    if len(tapes) != spec.tapes:
        raise ValueError(f"machine has {spec.tapes} tape(s), got {len(tapes)}")
    tapes = tuple(tuple(t) for t in tapes)
    lengths = tuple(len(t) for t in tapes)
    height_cap = sum(lengths) + 2

    by_state_top: dict[tuple[str, str], list[PdaTransition]] = {}
    for t in spec.transitions:
        by_state_top.setdefault((t.state, t.top), []).append(t)

    accept_final = spec.acceptance == "final-state"
    bottom_only = (spec.bottom,)

    start = (spec.initial, (0,) * spec.tapes, bottom_only)
    seen = {start}
    queue = deque([start])
    while queue:
        state, positions, stack = queue.popleft()
        if positions == lengths:
            if accept_final:
                if state in spec.finals:
                    return True
            elif stack == () or stack == bottom_only:
                return True
        if not stack:
            continue
        for t in by_state_top.get((state, stack[0]), ()):
            new_positions = positions
            ok = True
            for tape, sym in t.reads:
                pos = new_positions[tape - 1]
                if pos >= lengths[tape - 1] or tapes[tape - 1][pos] != sym:
                    ok = False
                    break
                lst = list(new_positions)
                lst[tape - 1] = pos + 1
                new_positions = tuple(lst)
            if not ok:
                continue
            new_stack = t.push + stack[1:]
            if len(new_stack) > height_cap:
                continue
            nxt = (t.new_state, new_positions, new_stack)
            if nxt not in seen:
                if len(seen) >= max_configs:
                    raise EngineBudgetError(
                        f"more than {max_configs} configurations explored"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return False
