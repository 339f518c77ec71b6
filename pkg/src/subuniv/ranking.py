"""Lexicographic ranking and unranking of k-universal accepted words.

The rank of ``w`` is the number of qualifying words strictly smaller than
``w`` in the alphabet's declaration order; ``w`` itself is never counted.
Smaller words either diverge below ``w`` at some position (their diverging
prefixes form the prefix set of ``w``) or are proper prefixes of ``w``.

Ranking and unranking are word-level notions, so they require a
deterministic automaton; rank an NFA's paths by determinizing first.
"""

from __future__ import annotations

from .automaton import Alphabet, Automaton
from .counting import (INFINITE, _Infinite, _iter_layers, _prefix_seeds,
                       saturating_total_count)
from .deciders import DEFAULT_SIGMA_CAP, check_sigma_cap
from .errors import DeterminismError, OutOfRangeError, SubunivError


def prefix_set(w: str, alphabet: Alphabet) -> frozenset[str]:
    """The diverging prefixes: every word below ``w`` extends exactly one.

    ``prefix_set(w) = { w[:i] + x : i < len(w), x before w[i] }``; no member
    is a prefix of another.
    """
    alphabet.check_word(w)
    out = []
    for i, sym in enumerate(w):
        for smaller in alphabet.symbols[: alphabet.index(sym)]:
            out.append(w[:i] + smaller)
    return frozenset(out)


def _require_dfa(a: Automaton) -> None:
    if not a.deterministic:
        raise DeterminismError("ranking is defined on words, which needs a "
                               "deterministic automaton; determinize first")


def _prefix_states(a: Automaton, w: str):
    """For each prefix length i, the state after w[:i] (None once dead)."""
    states: list[int | None] = [a.initial]
    q: int | None = a.initial
    for sym in w:
        q = a.step(q, sym) if q is not None else None
        states.append(q)
    return states


def _prefix_trackers(alphabet: Alphabet, w: str, k: int):
    """For each prefix length i, the (arches capped at k, rest mask) pair."""
    full = alphabet.full_mask
    arches, mask = 0, 0
    trackers = [(0, 0)]
    for sym in w:
        if arches < k:
            grown = mask | (1 << alphabet.index(sym))
            arches, mask = (arches + 1, 0) if grown == full else (arches, grown)
        trackers.append((arches, mask))
    return trackers


def _seeded_accept_sums(a: Automaton, w: str, k: int, m: int) -> list[int]:
    """Per length, the number of qualifying words with a diverging prefix."""
    t_seeds, u_seeds = _prefix_seeds(a, sorted(prefix_set(w, a.alphabet)), k, m)
    return [sum(u_layer[q] for q in a.finals)
            for _, _, u_layer, _ in _iter_layers(a, m, k, t_seeds, u_seeds, prune_to=m)]


def rank(a: Automaton, w: str, k: int, *, length: int | None = None,
         max_length: int | None = None,
         sigma_cap: int = DEFAULT_SIGMA_CAP) -> int | _Infinite:
    """Words below ``w``: of exact ``length``, of at most ``max_length``, or
    (neither given) in the whole language, where the answer may be INFINITE.

    ``w`` itself need not be a member and is never counted.
    """
    _require_dfa(a)
    if k < 0:
        raise SubunivError("k must be non-negative")
    if length is not None and max_length is not None:
        raise SubunivError("give at most one of length= and max_length=")
    check_sigma_cap(a.alphabet, sigma_cap)
    a.alphabet.check_word(w)
    sigma = a.alphabet.sigma

    if length is not None:
        m = length
        if m < 0:
            raise SubunivError("lengths must be non-negative")
        if k * sigma > m:
            return 0
        smaller = _seeded_accept_sums(a, w, k, m)[m]
        if len(w) > m:
            states = _prefix_states(a, w[:m])
            trackers = _prefix_trackers(a.alphabet, w[:m], k)
            if states[m] in a.finals and trackers[m][0] >= k:
                smaller += 1
        return smaller

    if max_length is not None:
        m = max_length
        if m < 0:
            raise SubunivError("lengths must be non-negative")
        if k * sigma > m:
            return 0
        smaller = sum(_seeded_accept_sums(a, w, k, m))
        states = _prefix_states(a, w)
        trackers = _prefix_trackers(a.alphabet, w, k)
        for i in range(min(len(w), m + 1)):
            if states[i] is not None and states[i] in a.finals and trackers[i][0] >= k:
                smaller += 1
        return smaller

    # whole-language scope
    t = a.trim()
    if not t.finals:
        return 0
    states = _prefix_states(t, w)
    trackers = _prefix_trackers(t.alphabet, w, k)
    total = 0
    for i in range(len(w)):
        if states[i] is not None and states[i] in t.finals and trackers[i][0] >= k:
            total += 1
    for i, sym in enumerate(w):
        if states[i] is None:
            break
        arches, mask = trackers[i]
        for smaller_sym in t.alphabet.symbols[: t.alphabet.index(sym)]:
            start = t.step(states[i], smaller_sym)
            if start is None:
                continue
            if arches < k:
                grown = mask | (1 << t.alphabet.index(smaller_sym))
                full = t.alphabet.full_mask
                arches2, mask2 = (arches + 1, 0) if grown == full else (arches, grown)
            else:
                arches2, mask2 = arches, mask
            part = saturating_total_count(t, start, arches2, mask2, k)
            if part is INFINITE:
                return INFINITE
            total += part
    return total


# ----------------------------------------------------------------------
# unranking


def _forward_tracker_step(tracker: tuple[int, int], bit: int, full: int,
                          k: int) -> tuple[int, int]:
    arches, mask = tracker
    if arches == k:
        return tracker
    grown = mask | bit
    if grown == full:
        return (arches + 1, 0)
    return (arches, grown)


def _completion_tables(a: Automaton, k: int, m: int):
    """Completion counts from every (state, arch progress) cell.

    Returns ``(layers, succ)``: ``layers[length][cell]`` is the number of
    length-``length`` words that lead from the cell to a final state having
    reached k arches, and ``succ[cell]`` lists the per-symbol successor
    cells (None where the transition is missing).  Only cells reachable
    from the start cell are kept; the descent never leaves them.
    """
    full = a.alphabet.full_mask
    sat = (k, 0)
    start = (a.initial, sat if k == 0 else (0, 0))
    succ: dict[tuple[int, tuple[int, int]], list] = {}
    stack = [start]
    while stack:
        cell = stack.pop()
        if cell in succ:
            continue
        q, tracker = cell
        row = []
        for sym in a.alphabet:
            dst = a.step(q, sym)
            if dst is None:
                row.append(None)
                continue
            bit = 1 << a.alphabet.index(sym)
            nxt = (dst, _forward_tracker_step(tracker, bit, full, k))
            row.append(nxt)
            stack.append(nxt)
        succ[cell] = row
    layers = [{cell: 1 for cell in succ
               if cell[1] == sat and cell[0] in a.finals}]
    for _ in range(m):
        prev = layers[-1]
        layer = {}
        for cell, row in succ.items():
            total = sum(prev.get(nxt, 0) for nxt in row if nxt is not None)
            if total:
                layer[cell] = total
        layers.append(layer)
    return layers, succ, start


def unrank(a: Automaton, k: int, index: int, *, length: int | None = None,
           max_length: int | None = None,
           sigma_cap: int = DEFAULT_SIGMA_CAP) -> str:
    """The word of the given rank within the scoped set.

    Descends symbol by symbol, at each step consuming the counts of
    qualifying completions from the reached (state, arch progress) cell.
    Raises :class:`OutOfRangeError` when ``index`` is at least the set size.
    """
    _require_dfa(a)
    if k < 0:
        raise SubunivError("k must be non-negative")
    if index < 0:
        raise SubunivError("index must be non-negative")
    if (length is None) == (max_length is None):
        raise SubunivError("give exactly one of length= and max_length=")
    check_sigma_cap(a.alphabet, sigma_cap)
    m = length if length is not None else max_length
    if m < 0:
        raise SubunivError("lengths must be non-negative")
    if k * a.alphabet.sigma > m:
        raise OutOfRangeError("the scoped set is empty")

    layers, succ, start = _completion_tables(a, k, m)
    if max_length is not None:
        tables = [dict(layers[0])]
        for layer in layers[1:]:
            nxt = dict(tables[-1])
            for cell, cnt in layer.items():
                nxt[cell] = nxt.get(cell, 0) + cnt
            tables.append(nxt)
    else:
        tables = layers

    size = tables[m].get(start, 0)
    if index >= size:
        raise OutOfRangeError(f"index {index} is out of range for a set of size {size}")

    sat = (k, 0)
    word = []
    cell = start
    budget = m
    while True:
        q, tracker = cell
        if max_length is not None and tracker == sat and q in a.finals:
            if index == 0:
                return "".join(word)
            index -= 1
        if budget == 0:
            if max_length is None and index == 0:
                return "".join(word)
            raise AssertionError("descent ran out of length with rank left over")
        advanced = False
        for sym, nxt in zip(a.alphabet.symbols, succ[cell]):
            if nxt is None:
                continue
            below = tables[budget - 1].get(nxt, 0)
            if index < below:
                word.append(sym)
                cell = nxt
                budget -= 1
                advanced = True
                break
            index -= below
        if not advanced:
            raise AssertionError("descent exhausted the alphabet with rank left over")
