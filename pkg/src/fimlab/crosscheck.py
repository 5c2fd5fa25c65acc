"""Exhaustive machine-versus-oracle sweeps.

Every catalog machine has a semantic oracle computed straight from the
walk of the input (prefix extrema and endpoint), independent of grammars
and automata.  A sweep enumerates the machine's whole input domain up to a
bound — in length-lexicographic order with x < x̄ < #, so reports are
deterministic — runs the machine on each input, and records every
disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .csa import csa_accepts
from .grammars import cfg_member
from .machines import CatalogEntry, catalog
from .pda import pda_accepts
from .rank1 import Rank1Elem
from .words import HASH, SYM_X, SYM_XBAR

Symbols = tuple[str, ...]
Pair = tuple[Symbols, Symbols]

_LETTERS = (SYM_X, SYM_XBAR)
_MARKED_ALPHABET = (SYM_X, SYM_XBAR, HASH)


# ---------------------------------------------------------------------------
# Input enumeration
# ---------------------------------------------------------------------------

def words_up_to(bound: int) -> Iterator[Symbols]:
    for length in range(bound + 1):
        yield from product(_LETTERS, repeat=length)


def marked_strings_up_to(bound: int) -> Iterator[Symbols]:
    """Strings over {x, x̄, #} with ≤ 1 separator and ≤ ``bound`` letters."""
    for length in range(bound + 2):
        for tup in product(_MARKED_ALPHABET, repeat=length):
            hashes = tup.count(HASH)
            if hashes <= 1 and length - hashes <= bound:
                yield tup


def pairs_up_to(total: int) -> Iterator[Pair]:
    for length in range(total + 1):
        for left_len in range(length + 1):
            for u in product(_LETTERS, repeat=left_len):
                for v in product(_LETTERS, repeat=length - left_len):
                    yield (u, v)


# ---------------------------------------------------------------------------
# Oracles (walk statistics computed directly on symbol strings)
# ---------------------------------------------------------------------------

def scan_symbols(syms: Symbols) -> Rank1Elem:
    lo = hi = cur = 0
    for s in syms:
        cur += 1 if s == SYM_X else -1
        if cur > hi:
            hi = cur
        elif cur < lo:
            lo = cur
    return Rank1Elem(-lo, hi, cur)


def split_marked(syms: Symbols) -> tuple[Symbols, Symbols] | None:
    """Split u # w; None unless the separator occurs exactly once."""
    if syms.count(HASH) != 1:
        return None
    at = syms.index(HASH)
    return syms[:at], syms[at + 1 :]


def inverse_triple(t: Rank1Elem) -> Rank1Elem:
    """The triple of w^inv in terms of the triple of w."""
    return Rank1Elem(t.l + t.m, t.n - t.m, -t.m)


def oracle_eplus(syms: Symbols) -> bool:
    t = scan_symbols(syms)
    return t.l == 0 and t.m == 0


def oracle_eminus(syms: Symbols) -> bool:
    t = scan_symbols(syms)
    return t.n == 0 and t.m == 0


def _marked_oracle(cond: Callable[[Rank1Elem, Rank1Elem], bool]) -> Callable[[Symbols], bool]:
    def oracle(syms: Symbols) -> bool:
        parts = split_marked(syms)
        if parts is None:
            return False
        tu = scan_symbols(parts[0])
        tv = inverse_triple(scan_symbols(parts[1]))
        return cond(tu, tv)

    return oracle


oracle_l_nu = _marked_oracle(lambda tu, tv: tu.n == tv.n and tu.m == tv.m)
oracle_l_lambda = _marked_oracle(lambda tu, tv: tu.l == tv.l and tu.m == tv.m)
oracle_wp = _marked_oracle(lambda tu, tv: tu == tv)
oracle_cowp = _marked_oracle(lambda tu, tv: tu != tv)


def _pair_oracle(cond: Callable[[Rank1Elem, Rank1Elem], bool]) -> Callable[[Pair], bool]:
    def oracle(pair: Pair) -> bool:
        return cond(scan_symbols(pair[0]), scan_symbols(pair[1]))

    return oracle


oracle_pair_nu_mu = _pair_oracle(lambda a, b: a.n == b.n and a.m == b.m)
oracle_pair_lambda_mu = _pair_oracle(lambda a, b: a.l == b.l and a.m == b.m)
oracle_pair_mu_differs = _pair_oracle(lambda a, b: a.m != b.m)
oracle_pair_nu_differs = _pair_oracle(lambda a, b: a.n != b.n)
oracle_pair_lambda_differs = _pair_oracle(lambda a, b: a.l != b.l)
oracle_iota = _pair_oracle(lambda a, b: a == b)


ORACLES: dict[str, tuple[str, Callable]] = {
    "gamma_plus": ("positive-idempotent walk", oracle_eplus),
    "gamma_minus": ("negative-idempotent walk", oracle_eminus),
    "gamma_nu": ("ν/μ agreement", oracle_l_nu),
    "gamma_lambda": ("λ/μ agreement", oracle_l_lambda),
    "cowp_grammar_verbatim": ("co-word-problem predicate", oracle_cowp),
    "cowp_grammar_fixed": ("co-word-problem predicate", oracle_cowp),
    "pda_A_nu": ("pairwise ν/μ agreement", oracle_pair_nu_mu),
    "pda_A_lambda": ("pairwise λ/μ agreement", oracle_pair_lambda_mu),
    "pda_B_mu": ("μ differs", oracle_pair_mu_differs),
    "pda_B_nu": ("ν differs", oracle_pair_nu_differs),
    "pda_B_lambda": ("λ differs", oracle_pair_lambda_differs),
    "csa_wp": ("word-problem predicate", oracle_wp),
    "csa_iota": ("two-tape word-problem predicate", oracle_iota),
}


# ---------------------------------------------------------------------------
# Running machines on raw symbol inputs
# ---------------------------------------------------------------------------

def machine_accepts(entry: CatalogEntry, item) -> bool:
    if entry.kind == "grammar":
        return cfg_member(entry.spec, item)
    if entry.kind == "pda":
        return pda_accepts(entry.spec, item)
    if entry.kind == "csa":
        tapes = (item,) if entry.domain in ("words", "marked") else item
        return csa_accepts(entry.spec, tapes)
    raise ValueError(f"unknown machine kind {entry.kind!r}")


def render_input(entry: CatalogEntry, item) -> str:
    def text(syms: Symbols) -> str:
        return "".join("x" if s == SYM_X else "X" if s == SYM_XBAR else s for s in syms)

    if entry.domain == "pairs":
        return f"{text(item[0])},{text(item[1])}"
    return text(item)


def domain_inputs(entry: CatalogEntry, bound: int) -> Iterator:
    if entry.domain == "words":
        return words_up_to(bound)
    if entry.domain == "marked":
        return marked_strings_up_to(bound)
    if entry.domain == "pairs":
        return pairs_up_to(bound)
    raise ValueError(f"unknown domain {entry.domain!r}")


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class CrossCheckReport:
    machine: str
    oracle: str
    bound: int
    total: int
    mismatches: list[tuple[str, bool, bool]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.mismatches else "fail"

    def to_text(self) -> str:
        """Tab-separated: a fixed header block, then one line per mismatch."""
        lines = [
            f"machine\t{self.machine}",
            f"oracle\t{self.oracle}",
            f"bound\t{self.bound}",
            f"total\t{self.total}",
            f"mismatches\t{len(self.mismatches)}",
            f"status\t{self.status}",
        ]
        if self.mismatches:
            lines.append("input\tmachine\toracle")
            for text, got, want in self.mismatches:
                lines.append(f"{text}\t{_verdict(got)}\t{_verdict(want)}")
        return "\n".join(lines) + "\n"


def _verdict(b: bool) -> str:
    return "accept" if b else "reject"


def run_crosscheck(name: str, bound: int) -> CrossCheckReport:
    cat = catalog()
    if name not in cat:
        raise KeyError(f"unknown machine {name!r}; known: {', '.join(cat)}")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    entry = cat[name]
    oracle_name, oracle = ORACLES[name]
    report = CrossCheckReport(machine=name, oracle=oracle_name, bound=bound, total=0)
    for item in domain_inputs(entry, bound):
        report.total += 1
        got = machine_accepts(entry, item)
        want = oracle(item)
        if got != want:
            report.mismatches.append((render_input(entry, item), got, want))
    return report
