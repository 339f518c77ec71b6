"""Brute-force reference implementations for tests and example derivation.

Everything here favours obviousness over speed and shares no code with the
production algorithms: universality is checked by enumerating subsequences,
acceptance by explicit path search, and languages by exhaustive word
exploration.  Production code never calls into this module.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass

from .automaton import Alphabet, Automaton
from .errors import BudgetError

DEFAULT_WORK_BUDGET = 1_000_000


def is_subsequence(u: str, w: str) -> bool:
    """Greedy left-to-right matching."""
    pos = 0
    for sym in u:
        pos = w.find(sym, pos) + 1
        if pos == 0:
            return False
    return True


def naive_universality(w: str, alphabet: Alphabet, k: int,
                       budget: int = DEFAULT_WORK_BUDGET) -> bool:
    """Enumerate every length-k word and test each as a subsequence."""
    alphabet.check_word(w)
    if alphabet.sigma ** k > budget:
        raise BudgetError(f"{alphabet.sigma}**{k} candidate subsequences exceed "
                          f"the budget of {budget}")
    return all(is_subsequence("".join(u), w)
               for u in itertools.product(alphabet.symbols, repeat=k))


def naive_iota(w: str, alphabet: Alphabet, budget: int = DEFAULT_WORK_BUDGET) -> int:
    """Largest k accepted by naive_universality; independent of arch logic."""
    k = 0
    while naive_universality(w, alphabet, k + 1, budget):
        k += 1
    return k


def naive_accepts(a: Automaton, w: str) -> bool:
    """Depth-first search over all paths labelled w."""

    def walk(state: int, pos: int) -> bool:
        if pos == len(w):
            return state in a.finals
        return any(walk(nxt, pos + 1) for nxt in sorted(a.delta(state, w[pos])))

    a.alphabet.check_word(w)
    return walk(a.initial, 0)


@dataclass(frozen=True)
class EnumeratedLanguage:
    """Accepted words up to a length bound, sorted in alphabet order."""

    alphabet: Alphabet
    max_len: int
    words: tuple[str, ...]
    iotas: tuple[int, ...]

    def members(self, k: int, *, length: int | None = None,
                max_length: int | None = None) -> list[str]:
        """The sorted k-universal words of the requested lengths."""
        out = []
        for w, i in zip(self.words, self.iotas):
            if i < k:
                continue
            if length is not None and len(w) != length:
                continue
            if max_length is not None and len(w) > max_length:
                continue
            out.append(w)
        return out


def enumerate_accepted(a: Automaton, max_len: int,
                       budget: int = DEFAULT_WORK_BUDGET) -> EnumeratedLanguage:
    """All accepted words of length <= max_len, by breadth-first exploration
    of (word, reachable state set) pairs."""
    explored = 0
    accepted = []
    queue = deque([("", frozenset({a.initial}))])
    while queue:
        word, states = queue.popleft()
        explored += 1
        if explored > budget:
            raise BudgetError(f"enumeration explored more than {budget} words")
        if states & a.finals:
            accepted.append(word)
        if len(word) == max_len:
            continue
        for sym in a.alphabet:
            nxt = frozenset(dst for q in states for dst in a.delta(q, sym))
            if nxt:
                queue.append((word + sym, nxt))
    accepted.sort(key=a.alphabet.sort_key)
    iotas = tuple(naive_iota(w, a.alphabet, budget) for w in accepted)
    return EnumeratedLanguage(a.alphabet, max_len, tuple(accepted), iotas)


def enumerate_accepting_path_labels(a: Automaton, max_len: int,
                                    budget: int = DEFAULT_WORK_BUDGET) -> list[str]:
    """Labels of every accepting path of length <= max_len, with multiplicity
    (one entry per path, so an NFA may repeat a label)."""
    out: list[str] = []
    explored = 0

    def walk(state: int, label: str) -> None:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise BudgetError(f"path enumeration explored more than {budget} nodes")
        if state in a.finals:
            out.append(label)
        if len(label) == max_len:
            return
        for sym in a.alphabet:
            for dst in sorted(a.delta(state, sym)):
                walk(dst, label + sym)

    walk(a.initial, "")
    out.sort(key=a.alphabet.sort_key)
    return out


def oracle_count_rank(a: Automaton, k: int, m: int,
                      budget: int = DEFAULT_WORK_BUDGET) -> tuple[list[int], list[str]]:
    """Ground truth from enumeration: per-length member counts up to m, and
    the sorted members themselves (position == at-most-m rank)."""
    language = enumerate_accepted(a, m, budget)
    members = language.members(k)
    counts = [0] * (m + 1)
    for w in members:
        counts[len(w)] += 1
    return counts, members


# ----------------------------------------------------------------------
# deep searches used to cross-check the deciders on lengths far beyond
# explicit enumeration; they work word-synchronously on the determinized
# view (state sets) with an inline arch counter


def _word_nodes(a: Automaton, k_cap: int):
    """Successor function over (state set, arches capped, rest mask) nodes."""
    full = a.alphabet.full_mask

    def successors(node):
        states, arches, mask = node
        for sym in a.alphabet:
            nxt = frozenset(dst for q in states for dst in a.delta(q, sym))
            if not nxt:
                continue
            if arches >= k_cap:
                yield (nxt, arches, 0)
                continue
            grown = mask | (1 << a.alphabet.index(sym))
            if grown == full:
                yield (nxt, arches + 1, 0)
            else:
                yield (nxt, arches, grown)

    return successors


def exists_k_universal_word(a: Automaton, k: int, max_len: int) -> bool:
    """Is some accepted word of length <= max_len k-universal?"""
    successors = _word_nodes(a, k)
    start = (frozenset({a.initial}), 0, 0)
    seen = {start}
    frontier = [start]
    for _ in range(max_len + 1):
        for states, arches, _ in frontier:
            if arches >= k and states & a.finals:
                return True
        nxt = []
        for node in frontier:
            for succ in successors(node):
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
        if not frontier:
            break
    return False


def min_language_iota(a: Automaton, max_len: int) -> int | None:
    """Minimum iota over accepted words of length <= max_len (None if none)."""
    successors = _word_nodes(a, max_len + 1)
    start = (frozenset({a.initial}), 0, 0)
    seen = {start}
    frontier = [start]
    best = None
    for _ in range(max_len + 1):
        for states, arches, _ in frontier:
            if states & a.finals and (best is None or arches < best):
                best = arches
        nxt = []
        for node in frontier:
            for succ in successors(node):
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
        if not frontier:
            break
    return best


def k_universal_lengths(a: Automaton, k: int, max_len: int) -> set[int]:
    """All lengths <= max_len at which a k-universal accepted word exists.

    Frontiers are full node sets per length (no cross-length merging), so a
    length is reported iff a word of exactly that length qualifies; stops
    early once the frontier repeats.
    """
    successors = _word_nodes(a, k)
    frontier = frozenset({(frozenset({a.initial}), 0, 0)})
    lengths = set()
    seen_frontiers = {frontier}
    repeated_at = None
    for level in range(max_len + 1):
        if any(arches >= k and states & a.finals for states, arches, _ in frontier):
            lengths.add(level)
        nxt = frozenset(succ for node in frontier for succ in successors(node))
        if not nxt:
            return lengths
        if nxt in seen_frontiers:
            repeated_at = level + 1
            frontier = nxt
            break
        seen_frontiers.add(nxt)
        frontier = nxt
    if repeated_at is not None:
        # the frontier sequence is now periodic; replay one period to fill in
        period_frontiers = [frontier]
        while True:
            frontier = frozenset(succ for node in period_frontiers[-1]
                                 for succ in successors(node))
            if frontier == period_frontiers[0]:
                break
            period_frontiers.append(frontier)
        hits = [any(arches >= k and states & a.finals for states, arches, _ in f)
                for f in period_frontiers]
        for level in range(repeated_at, max_len + 1):
            if hits[(level - repeated_at) % len(period_frontiers)]:
                lengths.add(level)
    return lengths


def has_universal_loop(a: Automaton) -> bool:
    """Some trimmed state loops to itself reading every alphabet symbol.

    Checked by chaining reachability through the letters in each possible
    first-occurrence order, which is independent of the product search used
    in production; exponential in sigma! by design.
    """
    t = a.trim()
    succ_any: dict[int, set[int]] = {q: set() for q in range(t.n)}
    succ_by: dict[str, dict[int, set[int]]] = {sym: {q: set() for q in range(t.n)}
                                               for sym in t.alphabet}
    for (src, sym), dsts in t._delta.items():
        succ_any[src] |= dsts
        succ_by[sym][src] |= dsts

    def closure(states: set[int]) -> set[int]:
        out = set(states)
        stack = list(states)
        while stack:
            for nxt in succ_any[stack.pop()]:
                if nxt not in out:
                    out.add(nxt)
                    stack.append(nxt)
        return out

    for q in range(t.n):
        for order in itertools.permutations(t.alphabet.symbols):
            current = {q}
            for sym in order:
                current = closure(current)
                current = {dst for state in current for dst in succ_by[sym][state]}
                if not current:
                    break
            if current and q in closure(current):
                return True
    return False


# ----------------------------------------------------------------------
# instance generation and plain path counting


def count_paths_by_length(a: Automaton, m: int) -> list[list[int]]:
    """counts[length][q]: paths of that length from the initial state to q,
    with no arch bookkeeping at all."""
    layer = [0] * a.n
    layer[a.initial] = 1
    layers = [layer]
    for _ in range(m):
        nxt = [0] * a.n
        for q, cnt in enumerate(layers[-1]):
            if cnt:
                for (src, _), dsts in a._delta.items():
                    if src == q:
                        for dst in dsts:
                            nxt[dst] += cnt
        layers.append(nxt)
    return layers


def random_automaton(n: int, sigma: int, density: float, seed: int,
                     deterministic: bool = False,
                     max_retries: int = 50) -> Automaton:
    """A reproducible random trimmed automaton with a nonempty language.

    Each transition is present independently with probability ``density``
    (for DFAs, each (state, symbol) gets one uniform target with that
    probability); finals are a uniform nonempty subset.  Redraws until
    trimming leaves something; after ``max_retries`` the canonical
    empty-language automaton is returned.
    """
    if n < 1 or sigma < 1:
        raise ValueError("need n >= 1 and sigma >= 1")
    alphabet = Alphabet("abcdefghijklmnopqrstuvwxyz"[:sigma])
    rng = random.Random(seed)
    for _ in range(max_retries):
        triples = []
        for q in range(n):
            for sym in alphabet:
                if deterministic:
                    if rng.random() < density:
                        triples.append((q, sym, rng.randrange(n)))
                else:
                    for dst in range(n):
                        if rng.random() < density:
                            triples.append((q, sym, dst))
        finals = [q for q in range(n) if rng.random() < 0.5]
        while not finals:
            finals = [q for q in range(n) if rng.random() < 0.5]
        candidate = Automaton(alphabet, n, 0, finals, triples).trim()
        if candidate.finals:
            return candidate
    return Automaton.empty(alphabet)
