"""Finite automata: representation, text format, and structural operations.

States are integers ``0..n-1``; a parallel tuple of names is kept for the
text format and for display.  Transitions are a partial relation: a missing
``(state, symbol)`` pair simply rejects.  An automaton with at most one
successor per pair is treated as a (partial) DFA.

All objects are immutable after construction; every operation returns a new
automaton.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import BudgetError, ParseError, SymbolError

DEFAULT_STATE_BUDGET = 1 << 20


class Alphabet:
    """An ordered alphabet of distinct single-character symbols.

    The declaration order defines the lexicographic order used everywhere
    (ranking, prefix sets, witness tie-breaking), and gives each symbol a
    stable index so that symbol subsets can be stored as bit masks.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ParseError("alphabet must contain at least one symbol")
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise ParseError(f"alphabet symbols must be single characters, got {s!r}")
        if len(set(syms)) != len(syms):
            raise ParseError(f"alphabet symbols must be distinct: {' '.join(syms)}")
        self.symbols = syms
        self._index = {s: i for i, s in enumerate(syms)}

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(text)

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.symbols)) - 1

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise SymbolError(f"symbol {symbol!r} is not in the alphabet "
                              f"{{{', '.join(self.symbols)}}}") from None

    def mask(self, symbols: Iterable[str]) -> int:
        m = 0
        for s in symbols:
            m |= 1 << self.index(s)
        return m

    def unmask(self, mask: int) -> frozenset[str]:
        return frozenset(s for i, s in enumerate(self.symbols) if mask >> i & 1)

    def check_word(self, word: str) -> None:
        for s in word:
            if s not in self._index:
                raise SymbolError(f"symbol {s!r} in word {word!r} is not in the "
                                  f"alphabet {{{', '.join(self.symbols)}}}")

    def sort_key(self, word: str):
        """Key for lexicographic comparison in declaration order."""
        return tuple(self._index[s] for s in word)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"


@dataclass(frozen=True)
class Path:
    """A run through an automaton: ``len(labels) == len(states) - 1``."""

    states: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.states) - 1:
            raise ValueError("a path over l labels visits l+1 states")

    @property
    def word(self) -> str:
        return "".join(self.labels)

    def is_valid(self, automaton: "Automaton") -> bool:
        return all(self.states[i + 1] in automaton.delta(self.states[i], x)
                   for i, x in enumerate(self.labels))


class Automaton:
    """An NFA ``(Q, alphabet, initial, delta, finals)`` with integer states.

    ``transitions`` is any iterable of ``(source, symbol, target)`` triples;
    duplicates are idempotent.  ``names`` defaults to ``q0..q{n-1}``.
    """

    __slots__ = ("alphabet", "names", "initial", "finals", "_delta", "deterministic")

    def __init__(self, alphabet: Alphabet, n: int,
                 initial: int, finals: Iterable[int],
                 transitions: Iterable[tuple[int, str, int]],
                 names: Iterable[str] | None = None):
        if n < 1:
            raise ParseError("an automaton needs at least one state")
        self.alphabet = alphabet
        self.names = tuple(names) if names is not None else tuple(f"q{i}" for i in range(n))
        if len(self.names) != n:
            raise ParseError(f"{n} states but {len(self.names)} names")
        if not 0 <= initial < n:
            raise ParseError(f"initial state {initial} out of range")
        self.initial = initial
        self.finals = frozenset(finals)
        for q in self.finals:
            if not 0 <= q < n:
                raise ParseError(f"final state {q} out of range")
        delta: dict[tuple[int, str], set[int]] = {}
        for src, sym, dst in transitions:
            if not 0 <= src < n:
                raise ParseError(f"transition source {src} out of range")
            if not 0 <= dst < n:
                raise ParseError(f"transition target {dst} out of range")
            alphabet.index(sym)
            delta.setdefault((src, sym), set()).add(dst)
        self._delta = {key: frozenset(dsts) for key, dsts in delta.items()}
        self.deterministic = all(len(d) <= 1 for d in self._delta.values())

    @property
    def n(self) -> int:
        return len(self.names)

    def delta(self, state: int, symbol: str) -> frozenset[int]:
        return self._delta.get((state, symbol), frozenset())

    def transitions(self) -> list[tuple[int, str, int]]:
        """All triples, sorted by (source, symbol index, target)."""
        out = []
        for (src, sym), dsts in self._delta.items():
            for dst in dsts:
                out.append((src, sym, dst))
        out.sort(key=lambda t: (t[0], self.alphabet.index(t[1]), t[2]))
        return out

    def step(self, state: int, symbol: str) -> int | None:
        """Deterministic single step; None when the transition is missing."""
        dsts = self._delta.get((state, symbol))
        if not dsts:
            return None
        if len(dsts) > 1:
            raise ValueError("step() on a nondeterministic transition")
        return next(iter(dsts))

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Automaton":
        """The canonical empty-language automaton."""
        return cls(alphabet, 1, 0, (), ())

    @classmethod
    def parse(cls, text: str) -> "Automaton":
        """Parse the line-oriented automaton format.

        ``#`` starts a comment; keys may appear in any order; ``trans``
        lines may repeat and duplicates are idempotent::

            alphabet: a b c
            states: q0 q1
            initial: q0
            final: q1
            trans: q0 a q1
        """
        alphabet_syms: list[str] | None = None
        state_names: list[str] | None = None
        initial_name: str | None = None
        final_names: list[tuple[str, int]] = []
        trans_lines: list[tuple[str, str, str, int]] = []

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise ParseError(f"expected 'key: values', got {line!r}", line=lineno)
            key, _, rest = line.partition(":")
            key = key.strip()
            fields = rest.split()
            if key == "alphabet":
                if alphabet_syms is None:
                    alphabet_syms = []
                alphabet_syms.extend(fields)
            elif key == "states":
                if state_names is None:
                    state_names = []
                state_names.extend(fields)
            elif key == "initial":
                for name in fields:
                    if initial_name is not None and name != initial_name:
                        raise ParseError(f"multiple initial states: {initial_name} and {name}",
                                         line=lineno)
                    initial_name = name
            elif key == "final":
                final_names.extend((name, lineno) for name in fields)
            elif key == "trans":
                if len(fields) != 3:
                    raise ParseError(f"trans needs 'source symbol target', got {rest.strip()!r}",
                                     line=lineno)
                trans_lines.append((fields[0], fields[1], fields[2], lineno))
            else:
                raise ParseError(f"unknown key {key!r}", line=lineno)

        if alphabet_syms is None or not alphabet_syms:
            raise ParseError("empty or missing alphabet")
        if state_names is None or not state_names:
            raise ParseError("missing states declaration")
        if len(set(state_names)) != len(state_names):
            raise ParseError("duplicate state names")
        if initial_name is None:
            raise ParseError("missing initial state")
        alphabet = Alphabet(alphabet_syms)
        index = {name: i for i, name in enumerate(state_names)}
        if initial_name not in index:
            raise ParseError(f"initial state {initial_name!r} is not declared")
        finals = set()
        for name, lineno in final_names:
            if name not in index:
                raise ParseError(f"final state {name!r} is not declared", line=lineno)
            finals.add(index[name])
        triples = []
        for src, sym, dst, lineno in trans_lines:
            if src not in index:
                raise ParseError(f"transition source {src!r} is not declared", line=lineno)
            if dst not in index:
                raise ParseError(f"transition target {dst!r} is not declared", line=lineno)
            if sym not in alphabet:
                raise ParseError(f"transition symbol {sym!r} is not in the alphabet",
                                 line=lineno)
            triples.append((index[src], sym, index[dst]))
        return cls(alphabet, len(state_names), index[initial_name], finals, triples,
                   names=state_names)

    def serialize(self) -> str:
        """Canonical text form; ``Automaton.parse`` inverts it exactly."""
        lines = [
            "alphabet: " + " ".join(self.alphabet.symbols),
            "states: " + " ".join(self.names),
            "initial: " + self.names[self.initial],
            "final:" + "".join(" " + self.names[q] for q in sorted(self.finals)),
        ]
        for src, sym, dst in self.transitions():
            lines.append(f"trans: {self.names[src]} {sym} {self.names[dst]}")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # structural operations

    def accepts(self, word: str) -> bool:
        """Subset simulation of one word."""
        self.alphabet.check_word(word)
        current = {self.initial}
        for sym in word:
            current = {dst for q in current for dst in self.delta(q, sym)}
            if not current:
                return False
        return bool(current & self.finals)

    def reverse_transitions(self) -> dict[tuple[int, str], frozenset[int]]:
        """The reverse relation: ``q' in result[q, x]`` iff ``q in delta(q', x)``."""
        rev: dict[tuple[int, str], set[int]] = {
            (q, x): set() for q in range(self.n) for x in self.alphabet
        }
        for (src, sym), dsts in self._delta.items():
            for dst in dsts:
                rev[dst, sym].add(src)
        return {key: frozenset(preds) for key, preds in rev.items()}

    def successors(self, state: int) -> set[int]:
        out = set()
        for (src, _), dsts in self._delta.items():
            if src == state:
                out |= dsts
        return out

    def trim(self) -> "Automaton":
        """Keep states that are both accessible and co-accessible.

        The language is preserved.  When nothing survives, the canonical
        empty-language automaton over the same alphabet is returned.
        """
        forward = {self.initial}
        stack = [self.initial]
        succ: dict[int, set[int]] = {}
        pred: dict[int, set[int]] = {}
        for (src, _), dsts in self._delta.items():
            succ.setdefault(src, set()).update(dsts)
            for dst in dsts:
                pred.setdefault(dst, set()).add(src)
        while stack:
            q = stack.pop()
            for nxt in succ.get(q, ()):
                if nxt not in forward:
                    forward.add(nxt)
                    stack.append(nxt)
        backward = set(self.finals)
        stack = list(self.finals)
        while stack:
            q = stack.pop()
            for prv in pred.get(q, ()):
                if prv not in backward:
                    backward.add(prv)
                    stack.append(prv)
        keep = forward & backward
        if self.initial not in keep:
            return Automaton.empty(self.alphabet)
        order = sorted(keep)
        remap = {old: i for i, old in enumerate(order)}
        triples = [(remap[src], sym, remap[dst])
                   for (src, sym), dsts in self._delta.items() if src in keep
                   for dst in dsts if dst in keep]
        return Automaton(self.alphabet, len(order), remap[self.initial],
                         (remap[q] for q in self.finals if q in keep),
                         triples, names=(self.names[old] for old in order))

    def determinize(self, state_budget: int = DEFAULT_STATE_BUDGET) -> "Automaton":
        """Subset construction (partial: the empty subset is never created).

        Raises :class:`BudgetError` once more than ``state_budget`` subset
        states have been discovered.
        """
        start = frozenset({self.initial})
        subsets = {start: 0}
        order = [start]
        triples = []
        queue = [start]
        while queue:
            subset = queue.pop(0)
            src = subsets[subset]
            for sym in self.alphabet:
                target = frozenset(dst for q in subset for dst in self.delta(q, sym))
                if not target:
                    continue
                if target not in subsets:
                    if len(subsets) >= state_budget:
                        raise BudgetError(
                            f"determinization exceeded the state budget of {state_budget}")
                    subsets[target] = len(order)
                    order.append(target)
                    queue.append(target)
                triples.append((src, sym, subsets[target]))
        names = ["+".join(self.names[q] for q in sorted(subset)) for subset in order]
        finals = [i for i, subset in enumerate(order) if subset & self.finals]
        return Automaton(self.alphabet, len(order), 0, finals, triples, names=names)

    def with_initial(self, state: int) -> "Automaton":
        """The same automaton started from ``state``."""
        return Automaton(self.alphabet, self.n, state, self.finals,
                         ((s, x, t) for (s, x), dsts in self._delta.items() for t in dsts),
                         names=self.names)

    def has_cycle(self) -> bool:
        """True iff some state is reachable from itself via >= 1 transition."""
        succ = {q: set() for q in range(self.n)}
        for (src, _), dsts in self._delta.items():
            succ[src] |= dsts
        color = {}
        for root in range(self.n):
            if root in color:
                continue
            stack = [(root, iter(sorted(succ[root])))]
            color[root] = "grey"
            while stack:
                q, it = stack[-1]
                advanced = False
                for nxt in it:
                    if color.get(nxt) == "grey":
                        return True
                    if nxt not in color:
                        color[nxt] = "grey"
                        stack.append((nxt, iter(sorted(succ[nxt]))))
                        advanced = True
                        break
                if not advanced:
                    color[q] = "black"
                    stack.pop()
        return False

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Automaton)
                and self.alphabet == other.alphabet
                and self.names == other.names
                and self.initial == other.initial
                and self.finals == other.finals
                and self._delta == other._delta)

    def __repr__(self) -> str:
        kind = "DFA" if self.deterministic else "NFA"
        return (f"<{kind} n={self.n} sigma={self.alphabet.sigma} "
                f"initial={self.names[self.initial]} "
                f"finals={{{', '.join(self.names[q] for q in sorted(self.finals))}}} "
                f"transitions={sum(len(d) for d in self._delta.values())}>")
