"""Counting k-universal accepting paths and words.

The workhorse is a layered dynamic program over cells ``(state, arches,
rest alphabet)``: appending a letter either extends the rest of the label
or, when the rest becomes full, closes an arch.  Cells that have closed k
arches are *saturated* and collapse into a per-state vector, since their
future no longer depends on the rest alphabet.  All counts are plain
Python integers, so they never overflow.

Layers are streamed: only two consecutive layers are alive while counting;
:func:`build_tables` materializes them for inspection and seeding-based
ranking.
"""

from __future__ import annotations

from collections.abc import Iterable

from .automaton import Alphabet, Automaton
from .deciders import DEFAULT_SIGMA_CAP, UNBOUNDED, check_sigma_cap, max_universality_index
from .errors import BudgetError, DeterminismError, SubunivError
from .universality import arch_factorize

PRODUCT_BUDGET = 5_000_000


class _Infinite:
    """The size of an unbounded set; larger than every integer."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return isinstance(other, _Infinite)

    def __hash__(self) -> int:
        return hash(_Infinite)

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _Infinite)

    def __gt__(self, other) -> bool:
        if isinstance(other, (_Infinite, int)):
            return not isinstance(other, _Infinite)
        return NotImplemented

    def __ge__(self, other) -> bool:
        if isinstance(other, (_Infinite, int)):
            return True
        return NotImplemented


INFINITE = _Infinite()


# ----------------------------------------------------------------------
# the layered engine


def _outgoing(a: Automaton) -> list[list[tuple[int, tuple[int, ...]]]]:
    """Per state, the (symbol bit, sorted targets) pairs."""
    out: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(a.n)]
    for (src, sym), dsts in a._delta.items():
        out[src].append((1 << a.alphabet.index(sym), tuple(sorted(dsts))))
    for lst in out:
        lst.sort()
    return out


def _iter_layers(a: Automaton, m: int, k: int,
                 t_seeds: dict[int, list[tuple[tuple[int, int, int], int]]],
                 u_seeds: dict[int, list[tuple[int, int]]],
                 prune_to: int | None = None):
    """Yield ``(level, t_layer, u_layer, perfect_layer)`` for levels 0..m.

    ``t_layer`` maps ``(state, arches, rest mask)`` to a path count for the
    not-yet-saturated paths, ``u_layer[q]`` counts saturated paths, and
    ``perfect_layer[q]`` counts paths whose k-th arch closes exactly at this
    level.  When ``prune_to`` is set, cells that cannot saturate within
    ``prune_to`` letters are dropped (sound for counting saturated paths up
    to that length; wrong for inspecting raw table entries).
    """
    n = a.n
    sigma = a.alphabet.sigma
    full = a.alphabet.full_mask
    out = _outgoing(a)

    def prune(layer: dict, level: int) -> dict:
        if prune_to is None:
            return layer
        budget = prune_to - level
        return {cell: cnt for cell, cnt in layer.items()
                if (k - cell[1]) * sigma - (cell[2]).bit_count() <= budget}

    t_layer: dict[tuple[int, int, int], int] = {}
    u_layer = [0] * n
    for cell, cnt in t_seeds.get(0, ()):
        t_layer[cell] = t_layer.get(cell, 0) + cnt
    for q, cnt in u_seeds.get(0, ()):
        u_layer[q] += cnt
    t_layer = prune(t_layer, 0)
    yield 0, t_layer, u_layer, [0] * n

    for level in range(1, m + 1):
        new_t: dict[tuple[int, int, int], int] = {}
        new_u = [0] * n
        new_p = [0] * n
        for (q, arches, mask), cnt in t_layer.items():
            for bit, targets in out[q]:
                grown = mask | bit
                if grown == full:
                    if arches + 1 == k:
                        for dst in targets:
                            new_u[dst] += cnt
                            new_p[dst] += cnt
                    else:
                        for dst in targets:
                            key = (dst, arches + 1, 0)
                            new_t[key] = new_t.get(key, 0) + cnt
                else:
                    for dst in targets:
                        key = (dst, arches, grown)
                        new_t[key] = new_t.get(key, 0) + cnt
        for q, cnt in enumerate(u_layer):
            if cnt:
                for bit, targets in out[q]:
                    for dst in targets:
                        new_u[dst] += cnt
        for cell, cnt in t_seeds.get(level, ()):
            new_t[cell] = new_t.get(cell, 0) + cnt
        for q, cnt in u_seeds.get(level, ()):
            new_u[q] += cnt
        t_layer = prune(new_t, level)
        u_layer = new_u
        yield level, t_layer, u_layer, new_p


def _standard_seeds(a: Automaton, k: int):
    """The empty word at the initial state."""
    if k == 0:
        return {}, {0: [(a.initial, 1)]}
    return {0: [((a.initial, 0, 0), 1)]}, {}


def _prefix_seeds(a: Automaton, prefixes: Iterable[str], k: int, m: int):
    """Seed each prefix at its own layer with per-state path counts."""
    t_seeds: dict[int, list[tuple[tuple[int, int, int], int]]] = {}
    u_seeds: dict[int, list[tuple[int, int]]] = {}
    for p in prefixes:
        if len(p) > m:
            continue
        a.alphabet.check_word(p)
        counts = {a.initial: 1}
        for sym in p:
            nxt: dict[int, int] = {}
            for q, cnt in counts.items():
                for dst in a.delta(q, sym):
                    nxt[dst] = nxt.get(dst, 0) + cnt
            counts = nxt
            if not counts:
                break
        if not counts:
            continue
        fact = arch_factorize(p, a.alphabet)
        if fact.index >= k:
            u_seeds.setdefault(len(p), []).extend(sorted(counts.items()))
        else:
            mask = a.alphabet.mask(fact.rest_alphabet)
            t_seeds.setdefault(len(p), []).extend(
                ((q, fact.index, mask), cnt) for q, cnt in sorted(counts.items()))
    return t_seeds, u_seeds


def _check_prefix_free(prefixes: tuple[str, ...]) -> None:
    pool = set(prefixes)
    for p in prefixes:
        for i in range(len(p)):
            if p[:i] in pool:
                raise SubunivError(
                    f"prefix set is not prefix-free: {p[:i]!r} is a prefix of {p!r}")


# ----------------------------------------------------------------------
# materialized tables


class PathTable:
    """T[q, length, arches, rest]: counts of not-yet-k-universal paths."""

    def __init__(self, alphabet: Alphabet, m: int, k: int,
                 layers: list[dict[tuple[int, int, int], int]]):
        self.alphabet = alphabet
        self.m = m
        self.k = k
        self._layers = layers

    def entry(self, state: int, length: int, arches: int, rest: Iterable[str]) -> int:
        mask = self.alphabet.mask(rest)
        return self._layers[length].get((state, arches, mask), 0)

    def sum_over_cells(self, state: int, length: int) -> int:
        """Sum of T[state, length, c, R] over every c and R."""
        return sum(cnt for (q, _, _), cnt in self._layers[length].items() if q == state)


class UniversalTable:
    """U[q, length]: counts of k-universal paths from the initial state."""

    def __init__(self, m: int, layers: list[list[int]]):
        self.m = m
        self._layers = layers

    def entry(self, state: int, length: int) -> int:
        return self._layers[length][state]


def build_tables(a: Automaton, m: int, k: int,
                 prefixes: Iterable[str] | None = None,
                 sigma_cap: int = DEFAULT_SIGMA_CAP) -> tuple[PathTable, UniversalTable]:
    """Materialize the path and universal tables for lengths 0..m.

    With ``prefixes`` (none a prefix of another), layer ``len(p)`` is seeded
    with the paths labelled ``p`` instead of starting from the empty word;
    only labels extending some prefix are then counted.
    """
    if k < 1:
        raise SubunivError("build_tables requires k >= 1; k = 0 reduces to "
                           "plain path counting")
    if m < 0:
        raise SubunivError("m must be non-negative")
    check_sigma_cap(a.alphabet, sigma_cap)
    if prefixes is None:
        t_seeds, u_seeds = _standard_seeds(a, k)
    else:
        prefixes = tuple(prefixes)
        _check_prefix_free(prefixes)
        t_seeds, u_seeds = _prefix_seeds(a, prefixes, k, m)
    t_layers = []
    u_layers = []
    for _, t_layer, u_layer, _ in _iter_layers(a, m, k, t_seeds, u_seeds):
        t_layers.append(t_layer)
        u_layers.append(u_layer)
    return PathTable(a.alphabet, m, k, t_layers), UniversalTable(m, u_layers)


# ----------------------------------------------------------------------
# counting


def _validate_scope(length, max_length):
    if length is not None and max_length is not None:
        raise SubunivError("give at most one of length= and max_length=")
    for value in (length, max_length):
        if value is not None and value < 0:
            raise SubunivError("lengths must be non-negative")


def _bounded_count(a: Automaton, k: int, m: int, *, cumulative: bool,
                   perfect: bool) -> int:
    t_seeds, u_seeds = _standard_seeds(a, k)
    total = 0
    for level, _, u_layer, p_layer in _iter_layers(a, m, k, t_seeds, u_seeds, prune_to=m):
        source = p_layer if perfect else u_layer
        if cumulative or level == m:
            total += sum(source[q] for q in a.finals)
    return total


def _cumulative_sums(a: Automaton, k: int, m: int) -> list[int]:
    """Per length, the number of saturated accepting paths of that length."""
    t_seeds, u_seeds = _standard_seeds(a, k)
    return [sum(u_layer[q] for q in a.finals)
            for _, _, u_layer, _ in _iter_layers(a, m, k, t_seeds, u_seeds, prune_to=m)]


def _perfect_total(t: Automaton, k: int) -> int | _Infinite:
    """Total count of accepting paths with exactly k arches and empty rest.

    Perfect labels are concatenations of k arch words, so they correspond to
    paths of a product with an arch-progress tracker whose completion state
    is terminal.  The set is infinite iff the trimmed product has a cycle;
    otherwise the product is a DAG and paths are counted exactly.
    """
    full = t.alphabet.full_mask
    if k * (t.n * max(1, full)) > PRODUCT_BUDGET:
        raise BudgetError("total perfect counting needs a product of about "
                          f"k * n * 2**sigma = {k * t.n * max(1, full)} nodes; "
                          f"budget is {PRODUCT_BUDGET}")
    out = _outgoing(t)
    done = (k, 0)
    init = (t.initial, 0, 0)
    nodes = {init}
    edges: dict[tuple[int, int, int], list[tuple[int, int, int]]] = {}
    stack = [init]
    while stack:
        node = stack.pop()
        q, arches, mask = node
        if (arches, mask) == done:
            edges[node] = []
            continue
        succ = []
        for bit, targets in out[q]:
            grown = mask | bit
            tracker = (arches + 1, 0) if grown == full else (arches, grown)
            for dst in targets:
                nxt = (dst, *tracker)
                succ.append(nxt)
                if nxt not in nodes:
                    nodes.add(nxt)
                    stack.append(nxt)
        edges[node] = succ
    accepting = {(q, *done) for q in t.finals if (q, *done) in nodes}
    return _dag_or_infinite(init, edges, accepting)


def _dag_or_infinite(init, edges: dict, accepting: set) -> int | _Infinite:
    """Count init->accepting paths; INFINITE when the trimmed graph has a cycle."""
    if not accepting:
        return 0
    preds: dict = {node: [] for node in edges}
    for node, succ in edges.items():
        for nxt in succ:
            preds[nxt].append(node)
    co_reach = set(accepting)
    stack = list(accepting)
    while stack:
        node = stack.pop()
        for prev in preds[node]:
            if prev not in co_reach:
                co_reach.add(prev)
                stack.append(prev)
    if init not in co_reach:
        return 0
    kept_edges = {node: [nxt for nxt in succ if nxt in co_reach]
                  for node, succ in edges.items() if node in co_reach}
    indegree = {node: 0 for node in kept_edges}
    for node, succ in kept_edges.items():
        for nxt in succ:
            indegree[nxt] += 1
    ready = [node for node, deg in indegree.items() if deg == 0]
    order = []
    while ready:
        node = ready.pop()
        order.append(node)
        for nxt in kept_edges[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
    if len(order) != len(kept_edges):
        return INFINITE
    paths = {node: 0 for node in kept_edges}
    paths[init] = 1
    for node in order:
        cnt = paths[node]
        if cnt:
            for nxt in kept_edges[node]:
                paths[nxt] += cnt
    return sum(paths[node] for node in accepting)


def saturating_total_count(t: Automaton, start: int, arches0: int, mask0: int,
                           k: int) -> int | _Infinite:
    """Total count of accepting paths from ``start`` whose label, appended to
    a prefix with ``arches0`` arches and rest mask ``mask0``, reaches k arches.

    Saturation is absorbing, so the tracker never needs more than the
    remaining ``k - arches0`` arch levels; when that exceeds n + 1 the answer
    is decided by unboundedness of the index from ``start`` alone.
    """
    remaining = k - arches0
    if remaining > t.n + 1:
        reachable_max = max_universality_index(t.with_initial(start).trim(),
                                               sigma_cap=t.alphabet.sigma)
        return INFINITE if reachable_max is UNBOUNDED else 0
    full = t.alphabet.full_mask
    out = _outgoing(t)
    sat = (k, 0)
    start_tracker = sat if remaining <= 0 else (arches0, mask0)
    init = (start, *start_tracker)
    nodes = {init}
    edges: dict[tuple[int, int, int], list[tuple[int, int, int]]] = {}
    stack = [init]
    while stack:
        node = stack.pop()
        q, arches, mask = node
        succ = []
        for bit, targets in out[q]:
            if arches == k:
                tracker = sat
            else:
                grown = mask | bit
                tracker = (arches + 1, 0) if grown == full else (arches, grown)
                if tracker[0] == k:
                    tracker = sat
            for dst in targets:
                nxt = (dst, *tracker)
                succ.append(nxt)
                if nxt not in nodes:
                    nodes.add(nxt)
                    stack.append(nxt)
        edges[node] = succ
    accepting = {(q, *sat) for q in t.finals if (q, *sat) in nodes}
    return _dag_or_infinite(init, edges, accepting)


def count(a: Automaton, k: int, *, length: int | None = None,
          max_length: int | None = None, perfect: bool = False,
          unit: str = "paths",
          sigma_cap: int = DEFAULT_SIGMA_CAP) -> int | _Infinite:
    """Count k-universal accepting paths or words.

    Scope is exact ``length``, ``max_length``, or (neither) the whole
    language, in which case the answer may be INFINITE.  ``perfect``
    restricts to labels with exactly k arches and empty rest.  Counting
    words requires a deterministic automaton, where paths and words
    coincide; determinize first for NFAs.
    """
    if k < 0:
        raise SubunivError("k must be non-negative")
    if unit not in ("paths", "words"):
        raise SubunivError(f"unit must be 'paths' or 'words', got {unit!r}")
    if unit == "words" and not a.deterministic:
        raise DeterminismError("counting words needs a deterministic automaton; "
                               "determinize first or count paths")
    _validate_scope(length, max_length)
    check_sigma_cap(a.alphabet, sigma_cap)
    sigma = a.alphabet.sigma

    if length is not None or max_length is not None:
        m = length if length is not None else max_length
        cumulative = max_length is not None
        if k * sigma > m:
            return 0
        if perfect and k == 0:
            # the empty word is the only perfect 0-universal word
            return 1 if (m == 0 or cumulative) and a.accepts("") else 0
        return _bounded_count(a, k, m, cumulative=cumulative, perfect=perfect)

    # whole-language scope
    t = a.trim()
    if not t.finals:
        return 0
    if perfect:
        if k == 0:
            return 1 if t.accepts("") else 0
        if k > t.n and max_universality_index(t, sigma_cap) is not UNBOUNDED:
            return 0
        return _perfect_total(t, k)
    if k == 0 or sigma == 1:
        # sigma == 1: any cycle pumps members beyond every length
        if t.has_cycle():
            return INFINITE
        return _bounded_count(t, k, t.n - 1, cumulative=True, perfect=False)
    if k > t.n:
        return INFINITE if max_universality_index(t, sigma_cap) is UNBOUNDED else 0
    horizon = k * t.n * sigma
    sums = _cumulative_sums(t, k, horizon)
    if any(sums[level] for level in range(t.n + 1, horizon + 1)):
        return INFINITE
    return sum(sums[: t.n + 1])
