"""Arch factorization of words and the subsequence-universality index.

A word splits uniquely into maximal-greedy *arches*, each containing every
alphabet symbol with its closing symbol occurring exactly once, followed by
a *rest* whose letters form a proper subset of the alphabet.  The number of
arches equals the largest k for which the word contains every length-k word
as a subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Alphabet


@dataclass(frozen=True)
class ArchFactorization:
    """The unique greedy factorization ``word == ''.join(arches) + rest``."""

    alphabet: Alphabet
    arches: tuple[str, ...]
    rest: str

    @property
    def index(self) -> int:
        """The universality index: the number of arches."""
        return len(self.arches)

    @property
    def rest_alphabet(self) -> frozenset[str]:
        return frozenset(self.rest)

    @property
    def word(self) -> str:
        return "".join(self.arches) + self.rest


def arch_factorize(word: str, alphabet: Alphabet) -> ArchFactorization:
    """Greedy left-to-right scan; O(len(word)) with a sigma-bit seen set.

    An arch closes exactly when the seen set becomes full, which realizes
    the uniqueness of the factorization without backtracking.
    """
    alphabet.check_word(word)
    full = alphabet.full_mask
    arches = []
    seen = 0
    start = 0
    for i, sym in enumerate(word):
        seen |= 1 << alphabet.index(sym)
        if seen == full:
            arches.append(word[start:i + 1])
            start = i + 1
            seen = 0
    return ArchFactorization(alphabet, tuple(arches), word[start:])


def iota(word: str, alphabet: Alphabet) -> int:
    """The largest k such that ``word`` is k-subsequence universal."""
    return arch_factorize(word, alphabet).index


def is_k_universal(word: str, alphabet: Alphabet, k: int) -> bool:
    """Every word of length k over the alphabet occurs as a subsequence."""
    return iota(word, alphabet) >= k


def is_perfect_k_universal(word: str, alphabet: Alphabet, k: int) -> bool:
    """Exactly k arches and an empty rest."""
    fact = arch_factorize(word, alphabet)
    return fact.index == k and not fact.rest
