"""Deciding, counting and ranking k-subsequence-universal words in regular
languages given as finite automata."""

from .automaton import (DEFAULT_STATE_BUDGET, Alphabet, Automaton, Path)
from .counting import (INFINITE, PathTable, UniversalTable, build_tables, count)
from .deciders import (DEFAULT_SIGMA_CAP, UNBOUNDED, arch_step_relation,
                       decide_asu, decide_esu, max_universality_index,
                       min_universality_index, witness_k_universal)
from .errors import (BudgetError, DeterminismError, OutOfRangeError,
                     ParseError, SubunivError, SymbolError)
from .ranking import prefix_set, rank, unrank
from .regex import compile_regex
from .universality import (ArchFactorization, arch_factorize, iota,
                           is_k_universal, is_perfect_k_universal)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Automaton", "Path", "ArchFactorization",
    "PathTable", "UniversalTable",
    "INFINITE", "UNBOUNDED",
    "DEFAULT_SIGMA_CAP", "DEFAULT_STATE_BUDGET",
    "SubunivError", "ParseError", "SymbolError", "DeterminismError",
    "BudgetError", "OutOfRangeError",
    "arch_factorize", "iota", "is_k_universal", "is_perfect_k_universal",
    "compile_regex",
    "arch_step_relation", "min_universality_index", "decide_asu",
    "max_universality_index", "decide_esu", "witness_k_universal",
    "build_tables", "count", "prefix_set", "rank", "unrank",
]
