"""Regular expressions over a declared alphabet, compiled to epsilon-free NFAs.

Grammar: literals, concatenation, union ``|``, star ``*`` and parentheses.
An empty expression (or empty union branch) denotes the empty word.
Epsilon transitions exist only inside this module; they are eliminated
before an :class:`~subuniv.automaton.Automaton` is returned.
"""

from __future__ import annotations

from .automaton import Alphabet, Automaton
from .errors import ParseError, SymbolError

EPSILON = None  # transient label inside the Thompson construction


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, str | None, int]] = []

    def state(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, src: int, label: str | None, dst: int) -> None:
        self.edges.append((src, label, dst))


class _Parser:
    """Recursive descent over  expr := branch ('|' branch)* ."""

    def __init__(self, pattern: str, alphabet: Alphabet, nfa: _Builder):
        self.pattern = pattern
        self.alphabet = alphabet
        self.nfa = nfa
        self.pos = 0

    def peek(self) -> str | None:
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self) -> tuple[int, int]:
        start, end = self.expr()
        if self.pos != len(self.pattern):
            raise ParseError(f"unexpected {self.pattern[self.pos]!r}", column=self.pos)
        return start, end

    def expr(self) -> tuple[int, int]:
        starts_ends = [self.branch()]
        while self.peek() == "|":
            self.pos += 1
            starts_ends.append(self.branch())
        if len(starts_ends) == 1:
            return starts_ends[0]
        start, end = self.nfa.state(), self.nfa.state()
        for s, e in starts_ends:
            self.nfa.edge(start, EPSILON, s)
            self.nfa.edge(e, EPSILON, end)
        return start, end

    def branch(self) -> tuple[int, int]:
        start = self.nfa.state()
        end = start
        while self.peek() not in (None, "|", ")"):
            f_start, f_end = self.factor()
            self.nfa.edge(end, EPSILON, f_start)
            end = f_end
        return start, end

    def factor(self) -> tuple[int, int]:
        ch = self.peek()
        if ch == "(":
            open_at = self.pos
            self.pos += 1
            start, end = self.expr()
            if self.peek() != ")":
                raise ParseError("unbalanced '('", column=open_at)
            self.pos += 1
        elif ch == "*":
            raise ParseError("'*' must follow a literal or group", column=self.pos)
        else:
            if ch not in self.alphabet:
                raise SymbolError(f"literal {ch!r} at column {self.pos} is not in the "
                                  f"alphabet {{{', '.join(self.alphabet.symbols)}}}")
            start, end = self.nfa.state(), self.nfa.state()
            self.nfa.edge(start, ch, end)
            self.pos += 1
        while self.peek() == "*":
            self.pos += 1
            outer_s, outer_e = self.nfa.state(), self.nfa.state()
            self.nfa.edge(outer_s, EPSILON, start)
            self.nfa.edge(outer_s, EPSILON, outer_e)
            self.nfa.edge(end, EPSILON, start)
            self.nfa.edge(end, EPSILON, outer_e)
            start, end = outer_s, outer_e
        return start, end


def compile_regex(pattern: str, alphabet: Alphabet) -> Automaton:
    """Compile ``pattern`` to an epsilon-free NFA with the same language."""
    builder = _Builder()
    start, accept = _Parser(pattern, alphabet, builder).parse()

    eps: dict[int, set[int]] = {q: set() for q in range(builder.n)}
    labelled: dict[int, list[tuple[str, int]]] = {q: [] for q in range(builder.n)}
    for src, label, dst in builder.edges:
        if label is EPSILON:
            eps[src].add(dst)
        else:
            labelled[src].append((label, dst))

    def closure(q: int) -> set[int]:
        seen = {q}
        stack = [q]
        while stack:
            for nxt in eps[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    closures = {q: closure(q) for q in range(builder.n)}
    triples = set()
    finals = set()
    for q in range(builder.n):
        for mid in closures[q]:
            for label, dst in labelled[mid]:
                triples.add((q, label, dst))
        if accept in closures[q]:
            finals.add(q)

    # drop states unreachable from the start under the epsilon-free relation
    reach = {start}
    stack = [start]
    while stack:
        q = stack.pop()
        for src, _, dst in triples:
            if src == q and dst not in reach:
                reach.add(dst)
                stack.append(dst)
    order = sorted(reach)
    remap = {old: i for i, old in enumerate(order)}
    kept = [(remap[s], x, remap[d]) for s, x, d in triples if s in reach and d in reach]
    return Automaton(alphabet, len(order), remap[start],
                     (remap[q] for q in finals if q in reach), kept,
                     names=(f"r{i}" for i in range(len(order))))
