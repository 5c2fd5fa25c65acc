"""Declarative context-free grammars and a general membership engine.

``GrammarSpec`` is a plain description (nonterminals, terminals, start,
productions); the engine accepts arbitrary grammars, ε-productions and unit
cycles included, so machine authors never normalize anything themselves.
Internally, membership compiles each grammar once — terminal lifting,
binarization, nullable elimination and unit closure — and then runs a
bitmask chart recognizer over the result.

``cfg_enumerate`` derives the full language up to a length bound by a
least-fixpoint computation, which doubles as an independent check of the
membership path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GrammarSpec:
    nonterminals: frozenset[str]
    terminals: frozenset[str]
    start: str
    productions: tuple[tuple[str, tuple[str, ...]], ...]

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise ValueError(f"start symbol {self.start!r} is not a nonterminal")
        overlap = self.nonterminals & self.terminals
        if overlap:
            raise ValueError(f"symbols are both terminal and nonterminal: {sorted(overlap)}")
        for head, body in self.productions:
            if head not in self.nonterminals:
                raise ValueError(f"production head {head!r} is not a nonterminal")
            for sym in body:
                if sym not in self.nonterminals and sym not in self.terminals:
                    raise ValueError(f"undeclared symbol {sym!r} in {head} -> {' '.join(body)}")

    def to_table(self) -> str:
        """One production per line, ε for the empty body."""
        return "\n".join(
            f"{head} -> {' '.join(body) if body else 'ε'}" for head, body in self.productions
        )


def make_grammar(
    start: str,
    productions: Sequence[tuple[str, Sequence[str]]],
    terminals: Iterable[str],
) -> GrammarSpec:
    """Build a spec, inferring the nonterminal set from production heads."""
    heads = frozenset(head for head, _ in productions)
    return GrammarSpec(
        nonterminals=heads,
        terminals=frozenset(terminals),
        start=start,
        productions=tuple((head, tuple(body)) for head, body in productions),
    )


def reverse_grammar(g: GrammarSpec) -> GrammarSpec:
    """Mirror the language: reverse every production body."""
    return GrammarSpec(
        g.nonterminals,
        g.terminals,
        g.start,
        tuple((head, tuple(reversed(body))) for head, body in g.productions),
    )


def marker_insertion_grammar(g: GrammarSpec, marker: str) -> GrammarSpec:
    """Grammar for { α marker β : αβ ∈ L(g) }.

    Each nonterminal N gets a twin generating the words of N with the marker
    inserted at one position: either the marker lands at a boundary inside a
    production body, or it is pushed into one nonterminal occurrence.
    """
    if marker in g.terminals or marker in g.nonterminals:
        raise ValueError(f"marker {marker!r} already used by the grammar")

    def twin(n: str) -> str:
        return n + marker

    prods: dict[tuple[str, tuple[str, ...]], None] = {}
    for head, body in g.productions:
        prods[(head, body)] = None
        h = twin(head)
        for i in range(len(body) + 1):
            prods[(h, body[:i] + (marker,) + body[i:])] = None
        for i, sym in enumerate(body):
            if sym in g.nonterminals:
                prods[(h, body[:i] + (twin(sym),) + body[i + 1 :])] = None
    return GrammarSpec(
        nonterminals=g.nonterminals | frozenset(twin(n) for n in g.nonterminals),
        terminals=g.terminals | {marker},
        start=twin(g.start),
        productions=tuple(prods),
    )


class _Recognizer:
    __slots__ = ("start_mask", "start_nullable", "term_masks", "rows")

    def __init__(self, start_mask, start_nullable, term_masks, rows):
        self.start_mask = start_mask
        self.start_nullable = start_nullable
        self.term_masks = term_masks
        self.rows = rows


@lru_cache(maxsize=None)
def _compile(g: GrammarSpec) -> _Recognizer:
    ids: dict[object, int] = {}

    def sid(key) -> int:
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    nt = {n: sid(("N", n)) for n in sorted(g.nonterminals)}
    term_rules: list[tuple[int, str]] = []
    bin_rules: list[tuple[int, tuple[int, ...]]] = []
    lifted: dict[str, int] = {}

    def lift(term: str) -> int:
        if term not in lifted:
            p = sid(("T", term))
            lifted[term] = p
            term_rules.append((p, term))
        return lifted[term]

    fresh = 0
    for head, body in g.productions:
        h = nt[head]
        if len(body) == 1 and body[0] in g.terminals:
            term_rules.append((h, body[0]))
            continue
        syms = [nt[s] if s in g.nonterminals else lift(s) for s in body]
        while len(syms) > 2:
            tmp = sid(("B", fresh))
            fresh += 1
            bin_rules.append((tmp, (syms[0], syms[1])))
            syms = [tmp] + syms[2:]
        bin_rules.append((h, tuple(syms)))

    # Nullable fixpoint (preterminals are never nullable).
    nullable: set[int] = set()
    changed = True
    while changed:
        changed = False
        for h, body in bin_rules:
            if h not in nullable and all(s in nullable for s in body):
                nullable.add(h)
                changed = True

    # Unit edges: explicit unit bodies, plus pairs with one nullable side.
    unit_succ: dict[int, set[int]] = {i: set() for i in ids.values()}
    for h, body in bin_rules:
        if len(body) == 1:
            unit_succ[h].add(body[0])
        elif len(body) == 2:
            b, c = body
            if c in nullable:
                unit_succ[h].add(b)
            if b in nullable:
                unit_succ[h].add(c)

    preds: dict[int, int] = {i: 0 for i in ids.values()}  # bitmask of unit ancestors
    for p in ids.values():
        reach = {p}
        frontier = [p]
        while frontier:
            q = frontier.pop()
            for r in unit_succ[q]:
                if r not in reach:
                    reach.add(r)
                    frontier.append(r)
        for r in reach:
            preds[r] |= 1 << p

    term_masks: dict[str, int] = {}
    for a, t in term_rules:
        term_masks[t] = term_masks.get(t, 0) | preds[a]

    pair_heads: dict[tuple[int, int], int] = {}
    for h, body in bin_rules:
        if len(body) == 2:
            key = (body[0], body[1])
            pair_heads[key] = pair_heads.get(key, 0) | preds[h]
    rows: list[list[tuple[int, int]]] = [[] for _ in range(len(ids))]
    for (b, c), hm in pair_heads.items():
        rows[b].append((c, hm))

    start_id = nt[g.start]
    return _Recognizer(1 << start_id, start_id in nullable, term_masks, rows)


def cfg_member(g: GrammarSpec, s: Sequence[str]) -> bool:
    """Is ``s`` derivable from ``g.start``?"""
    for t in s:
        if t not in g.terminals:
            raise ValueError(f"unknown terminal {t!r}")
    r = _compile(g)
    n = len(s)
    if n == 0:
        return r.start_nullable
    term_masks = r.term_masks
    rows = r.rows
    cell = [[0] * (n + 1) for _ in range(n)]
    for i, t in enumerate(s):
        cell[i][i + 1] = term_masks.get(t, 0)
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            k = i + width
            acc = 0
            row_i = cell[i]
            for mid in range(i + 1, k):
                left = row_i[mid]
                if not left:
                    continue
                right = cell[mid][k]
                if not right:
                    continue
                m = left
                while m:
                    b = (m & -m).bit_length() - 1
                    m &= m - 1
                    for c, hm in rows[b]:
                        if (right >> c) & 1:
                            acc |= hm
            row_i[k] = acc
    return bool(cell[0][n] & r.start_mask)


def cfg_enumerate(g: GrammarSpec, max_len: int) -> set[tuple[str, ...]]:
    """Exactly the derivable strings of length ≤ ``max_len``.

    Breadth-first over derivation depth: each round extends every
    nonterminal's string set through every production, with concatenations
    pruned as soon as they exceed the bound, until nothing new appears.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    sets: dict[str, set[tuple[str, ...]]] = {n: set() for n in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for head, body in g.productions:
            acc: set[tuple[str, ...]] = {()}
            for sym in body:
                if sym in g.terminals:
                    acc = {a + (sym,) for a in acc if len(a) < max_len}
                else:
                    ss = sets[sym]
                    acc = {a + b for a in acc for b in ss if len(a) + len(b) <= max_len}
                if not acc:
                    break
            new = acc - sets[head]
            if new:
                sets[head].update(new)
                changed = True
    return sets[g.start]
