"""fimlab: word problems of free inverse monoids, executably.

An exact semantic core (Munn trees and the rank-1 interval model), generic
engines for context-free grammars, two-tape pushdown automata and checking
stack automata, a catalog of the concrete machines deciding the rank-1 word
and co-word problems, and a cross-check harness proving machine/oracle
agreement at desk scale.
"""

from .csa import CsaResult, CsaSpec, CsaTransition, csa_accepts, csa_run
from .grammars import (
    GrammarSpec,
    cfg_enumerate,
    cfg_member,
    make_grammar,
    marker_insertion_grammar,
    reverse_grammar,
)
from .machines import (
    CatalogEntry,
    build_cowp_grammars,
    build_csa_iota,
    build_csa_wp,
    build_gamma_lambda,
    build_gamma_minus,
    build_gamma_nu,
    build_gamma_plus,
    build_pda_A_lambda,
    build_pda_A_nu,
    build_pda_B_lambda,
    build_pda_B_mu,
    build_pda_B_nu,
    catalog,
    cowp_iota_member,
    machine_names,
    wp_member_via_2cf,
)
from .munn import (
    ALPHA,
    MunnTree,
    equal_in_fim,
    is_idempotent,
    iota_member,
    multiply_munn,
    munn_to_dot,
    munn_tree,
    validate_tree,
    wp_member,
)
from .crosscheck import CrossCheckReport, run_crosscheck
from .pda import EngineBudgetError, PdaSpec, PdaTransition, pda_accepts
from .rank1 import IDENTITY, Rank1Elem, evaluate_rank1, multiply_rank1, to_canonical_word
from .witnesses import PumpingCase, pumping_case_member, witness_Lk, witness_wn
from .words import (
    HASH,
    Letter,
    MarkedWord,
    RankError,
    Word,
    WordSyntaxError,
    parse_any,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "CatalogEntry",
    "CrossCheckReport",
    "CsaResult",
    "CsaSpec",
    "CsaTransition",
    "EngineBudgetError",
    "GrammarSpec",
    "HASH",
    "IDENTITY",
    "Letter",
    "MarkedWord",
    "MunnTree",
    "PdaSpec",
    "PdaTransition",
    "PumpingCase",
    "Rank1Elem",
    "RankError",
    "Word",
    "WordSyntaxError",
    "build_cowp_grammars",
    "build_csa_iota",
    "build_csa_wp",
    "build_gamma_lambda",
    "build_gamma_minus",
    "build_gamma_nu",
    "build_gamma_plus",
    "build_pda_A_lambda",
    "build_pda_A_nu",
    "build_pda_B_lambda",
    "build_pda_B_mu",
    "build_pda_B_nu",
    "catalog",
    "cfg_enumerate",
    "cfg_member",
    "cowp_iota_member",
    "csa_accepts",
    "csa_run",
    "equal_in_fim",
    "evaluate_rank1",
    "iota_member",
    "is_idempotent",
    "machine_names",
    "make_grammar",
    "marker_insertion_grammar",
    "multiply_munn",
    "multiply_rank1",
    "munn_to_dot",
    "munn_tree",
    "parse_any",
    "pda_accepts",
    "pumping_case_member",
    "reverse_grammar",
    "run_crosscheck",
    "to_canonical_word",
    "validate_tree",
    "witness_Lk",
    "witness_wn",
    "wp_member",
    "wp_member_via_2cf",
]
