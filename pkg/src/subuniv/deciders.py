"""Deciding k-universality of regular languages.

Two families of questions about the language of an automaton:

* does *every* accepted word have universality index at least k (ASU)?
  Answered through the minimum index over the language, found as a
  shortest path in the arch-step graph.
* does *some* accepted word have index at least k (ESU)?  Answered through
  the maximum index, which is unbounded exactly when a trimmed state
  carries a loop reading the whole alphabet, and otherwise found by a
  dynamic program over (state, rest-alphabet) cells.

Empty languages: ASU is vacuously true; ESU is false for every k, since
no word exists at all.
"""

from __future__ import annotations

from collections import deque

from .automaton import Alphabet, Automaton
from .errors import BudgetError, SubunivError

DEFAULT_SIGMA_CAP = 24


class _Unbounded:
    """Sentinel: accepted words of arbitrarily large universality index exist."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


def check_sigma_cap(alphabet: Alphabet, sigma_cap: int) -> None:
    if alphabet.sigma > sigma_cap:
        raise BudgetError(
            f"alphabet size {alphabet.sigma} exceeds the cap of {sigma_cap}; "
            f"subset tables scale with 2**sigma (raise the cap explicitly to proceed)")


# ----------------------------------------------------------------------
# minimum index / ASU


def _reach_avoiding(a: Automaton, avoid: str) -> list[set[int]]:
    """reach[q] = states reachable from q (reflexively) without reading ``avoid``."""
    succ: dict[int, set[int]] = {q: set() for q in range(a.n)}
    for (src, sym), dsts in a._delta.items():
        if sym != avoid:
            succ[src] |= dsts
    out = []
    for q in range(a.n):
        seen = {q}
        stack = [q]
        while stack:
            cur = stack.pop()
            for nxt in succ[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        out.append(seen)
    return out


def arch_step_relation(a: Automaton) -> dict[str, frozenset[tuple[int, int]]]:
    """Per symbol x, the pairs (q, q') joined by a path whose only x is last.

    Built by deleting the x-labelled transitions, taking reflexive-transitive
    reachability (one breadth-first search per state), and extending by a
    single x-transition.
    """
    relation = {}
    for sym in a.alphabet:
        reach = _reach_avoiding(a, sym)
        pairs = set()
        for q in range(a.n):
            for mid in reach[q]:
                for dst in a.delta(mid, sym):
                    pairs.add((q, dst))
        relation[sym] = frozenset(pairs)
    return relation


def min_universality_index(a: Automaton) -> int | None:
    """min { iota(w) : w accepted }, or None when the language is empty.

    The minimum equals the shortest-path length from the initial state to
    the set of states that reach a final state reading a proper subset of
    the alphabet, inside the graph whose edges are the arch-step relation.
    """
    t = a.trim()
    if not t.finals:
        return None
    adjacency: dict[int, set[int]] = {q: set() for q in range(t.n)}
    target = set()
    for sym in t.alphabet:
        reach = _reach_avoiding(t, sym)
        for q in range(t.n):
            if reach[q] & t.finals:
                target.add(q)
            for mid in reach[q]:
                for dst in t.delta(mid, sym):
                    adjacency[q].add(dst)
    dist = {t.initial: 0}
    queue = deque([t.initial])
    while queue:
        q = queue.popleft()
        if q in target:
            return dist[q]
        for nxt in sorted(adjacency[q]):
            if nxt not in dist:
                dist[nxt] = dist[q] + 1
                queue.append(nxt)
    raise AssertionError("trimmed nonempty automaton must reach the target set")


def decide_asu(a: Automaton, k: int) -> bool:
    """True iff every accepted word is k-universal (vacuously true when empty)."""
    if k < 0:
        raise SubunivError("k must be non-negative")
    if k == 0:
        return True
    minimum = min_universality_index(a)
    return minimum is None or k <= minimum


# ----------------------------------------------------------------------
# maximum index / ESU


def _loop_alphabets(t: Automaton) -> tuple[int | None, list[int]]:
    """Per state, the maximal letter mask realizable on a loop at that state.

    Returns ``(u, masks)`` where ``u`` is a state carrying a one-universal
    loop (then ``masks`` is unreliable past ``u``), or None when no such
    state exists; in that case each mask is a proper subset of the alphabet,
    unique-maximal because loop alphabets are closed under union.
    """
    full = t.alphabet.full_mask
    bit = {sym: 1 << i for i, sym in enumerate(t.alphabet.symbols)}
    edges: dict[int, list[tuple[int, int]]] = {q: [] for q in range(t.n)}
    for (src, sym), dsts in t._delta.items():
        for dst in dsts:
            edges[src].append((bit[sym], dst))
    masks = []
    for source in range(t.n):
        seen = {(source, 0)}
        queue = deque([(source, 0)])
        loop_mask = 0
        while queue:
            state, mask = queue.popleft()
            for b, dst in edges[state]:
                nxt = (dst, mask | b)
                if nxt in seen:
                    continue
                if dst == source:
                    loop_mask |= mask | b
                    if loop_mask == full:
                        return source, masks
                seen.add(nxt)
                queue.append(nxt)
        masks.append(loop_mask)
    return None, masks


def max_universality_index(a: Automaton,
                           sigma_cap: int = DEFAULT_SIGMA_CAP) -> int | _Unbounded | None:
    """The largest iota over accepted words: an int, UNBOUNDED, or None (empty).

    Unboundedness is equivalent to a one-universal loop at some trimmed
    state.  Otherwise a matrix over (state, rest alphabet) is iterated n
    times; each step extends a normal-form path by one letter and absorbs
    the target state's maximal loop alphabet twice, counting completed
    arches.
    """
    check_sigma_cap(a.alphabet, sigma_cap)
    t = a.trim()
    if not t.finals:
        return None
    universal_state, loop_masks = _loop_alphabets(t)
    if universal_state is not None:
        return UNBOUNDED
    full = t.alphabet.full_mask
    bit = {sym: 1 << i for i, sym in enumerate(t.alphabet.symbols)}
    edges: dict[int, list[tuple[int, int]]] = {q: [] for q in range(t.n)}
    for (src, sym), dsts in t._delta.items():
        for dst in dsts:
            edges[src].append((bit[sym], dst))

    # rest alphabets are proper subsets, so masks range over [0, full)
    width = full
    m = [[-1] * width for _ in range(t.n)]
    m[t.initial][loop_masks[t.initial]] = 0
    for _ in range(t.n):
        nxt = [row[:] for row in m]
        for q in range(t.n):
            row = m[q]
            for mask in range(width):
                arches = row[mask]
                if arches < 0:
                    continue
                for b, dst in edges[q]:
                    grown = mask | b
                    gained = 0
                    if grown == full:
                        grown = 0
                        gained = 1
                    grown |= loop_masks[dst]
                    if grown == full:
                        grown = 0
                        gained = 1
                    grown |= loop_masks[dst]
                    if arches + gained > nxt[dst][grown]:
                        nxt[dst][grown] = arches + gained
        m = nxt
    return max(m[q][mask] for q in t.finals for mask in range(width))


def decide_esu(a: Automaton, k: int, sigma_cap: int = DEFAULT_SIGMA_CAP) -> bool:
    """True iff some accepted word is k-universal (false on the empty language)."""
    if k < 0:
        raise SubunivError("k must be non-negative")
    maximum = max_universality_index(a, sigma_cap)
    if maximum is None:
        return False
    if k == 0:
        return True
    return maximum is UNBOUNDED or k <= maximum


# ----------------------------------------------------------------------
# witnesses


def _bfs_word(t: Automaton, sources: set[int], targets: set[int]) -> tuple[str, int] | None:
    """Shortest word from any source to any target; symbols tried in order."""
    parent: dict[int, tuple[int, str] | None] = {q: None for q in sorted(sources)}
    queue = deque(sorted(sources))
    while queue:
        q = queue.popleft()
        if q in targets:
            word = []
            cur = q
            while parent[cur] is not None:
                prev, sym = parent[cur]
                word.append(sym)
                cur = prev
            return "".join(reversed(word)), q
        for sym in t.alphabet:
            for dst in sorted(t.delta(q, sym)):
                if dst not in parent:
                    parent[dst] = (q, sym)
                    queue.append(dst)
    return None


def _universal_loop_word(t: Automaton, state: int) -> str:
    """Shortest loop at ``state`` whose letters cover the whole alphabet."""
    full = t.alphabet.full_mask
    start = (state, 0)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        q, mask = node
        for sym in t.alphabet:
            b = 1 << t.alphabet.index(sym)
            for dst in sorted(t.delta(q, sym)):
                nxt = (dst, mask | b)
                if nxt in parent:
                    continue
                parent[nxt] = (node, sym)
                if nxt == (state, full):
                    word = []
                    cur = nxt
                    while parent[cur] is not None:
                        prev, s = parent[cur]
                        word.append(s)
                        cur = prev
                    return "".join(reversed(word))
                queue.append(nxt)
    raise AssertionError("state was reported to carry a one-universal loop")


def witness_k_universal(a: Automaton, k: int,
                        sigma_cap: int = DEFAULT_SIGMA_CAP) -> str | None:
    """Some accepted word with iota >= k, or None when none exists.

    In the bounded case the witness is a shortest such word found over
    (state, arch count, rest alphabet) triples, so its length obeys the
    k*n*sigma - (n-1)(k-1) bound; in the unbounded case a one-universal
    loop is pumped k times.
    """
    if k < 1:
        raise SubunivError("witness construction requires k >= 1")
    check_sigma_cap(a.alphabet, sigma_cap)
    t = a.trim()
    if not t.finals:
        return None
    universal_state, _ = _loop_alphabets(t)
    if universal_state is not None:
        s = universal_state
        to_loop = _bfs_word(t, {t.initial}, {s})
        loop = _universal_loop_word(t, s)
        out = _bfs_word(t, {s}, set(t.finals))
        assert to_loop is not None and out is not None  # t is trimmed
        return to_loop[0] + loop * k + out[0]

    maximum = max_universality_index(t, sigma_cap)
    if maximum is None or maximum is UNBOUNDED or maximum < k:
        return None

    full = t.alphabet.full_mask
    start = (t.initial, 0, 0)
    parent: dict[tuple[int, int, int], tuple[tuple[int, int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        q, arches, mask = node
        if arches == k and q in t.finals:
            word = []
            cur = node
            while parent[cur] is not None:
                prev, sym = parent[cur]
                word.append(sym)
                cur = prev
            return "".join(reversed(word))
        for sym in t.alphabet:
            b = 1 << t.alphabet.index(sym)
            for dst in sorted(t.delta(q, sym)):
                if arches == k:
                    nxt = (dst, k, 0)
                else:
                    grown = mask | b
                    if grown == full:
                        nxt = (dst, arches + 1, 0)
                    else:
                        nxt = (dst, arches, grown)
                if nxt not in parent:
                    parent[nxt] = (node, sym)
                    queue.append(nxt)
    raise AssertionError("a k-universal word must exist when the maximum index is >= k")
