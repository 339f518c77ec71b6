import pytest

from subuniv import (Alphabet, Automaton, BudgetError, ParseError, Path,
                     SymbolError)
from subuniv import oracle


def test_parse_fig_a(fig_a):
    assert fig_a.alphabet.symbols == ("a", "b", "c")
    assert fig_a.n == 3
    assert fig_a.names == ("q0", "q1", "q2")
    assert fig_a.initial == 0
    assert fig_a.finals == {2}
    assert fig_a.delta(0, "c") == {1}
    assert fig_a.delta(1, "b") == frozenset()
    assert fig_a.deterministic  # at most one successor everywhere


def test_parse_minimal_epsilon_only():
    a = Automaton.parse("alphabet: a\nstates: s\ninitial: s\nfinal: s\n")
    assert a.accepts("")
    assert not a.accepts("a")


def test_parse_errors_report_line():
    text = "alphabet: a\nstates: q0\ninitial: q0\ntrans: q0 a q9\n"
    with pytest.raises(ParseError) as err:
        Automaton.parse(text)
    assert "line 4" in str(err.value)
    assert "q9" in str(err.value)


@pytest.mark.parametrize("text, fragment", [
    ("alphabet:\nstates: q\ninitial: q\n", "alphabet"),
    ("alphabet: a\nstates: q r\ninitial: q\ninitial: r\n", "multiple initial"),
    ("alphabet: a\nstates: q\ninitial: r\n", "not declared"),
    ("alphabet: a a\nstates: q\ninitial: q\n", "distinct"),
    ("alphabet: a\nstates: q\ninitial: q\nbogus: x\n", "bogus"),
])
def test_parse_rejections(text, fragment):
    with pytest.raises(ParseError) as err:
        Automaton.parse(text)
    assert fragment in str(err.value)


def test_serialize_parse_round_trip(fig_a, fig_b):
    for a in (fig_a, fig_b):
        again = Automaton.parse(a.serialize())
        assert again == a
        # serialized form is a fixpoint
        assert again.serialize() == a.serialize()


def test_serialize_is_canonically_ordered(fig_a):
    lines = fig_a.serialize().splitlines()
    assert lines[0].startswith("alphabet:")
    assert lines[1].startswith("states:")
    assert lines[2] == "initial: q0"
    assert lines[3] == "final: q2"
    assert lines[4:] == sorted(lines[4:])


def test_accepts_fig_a(fig_a):
    assert fig_a.accepts("abca")
    assert not fig_a.accepts("cb")
    assert not fig_a.accepts("")
    with pytest.raises(SymbolError):
        fig_a.accepts("abd")


def test_accepts_epsilon_when_initial_final():
    a = Automaton(Alphabet("ab"), 2, 0, {0}, [(0, "a", 1)])
    assert a.accepts("")


def test_trim_keeps_fig_a_unchanged(fig_a):
    assert fig_a.trim() == fig_a


def test_trim_drops_unreachable_state(fig_a):
    bigger = Automaton(fig_a.alphabet, 4, 0, {2},
                       fig_a.transitions() + [(3, "a", 2)],
                       names=("q0", "q1", "q2", "junk"))
    assert bigger.trim() == fig_a


def test_trim_to_empty_language():
    a = Automaton(Alphabet("ab"), 3, 0, {2}, [(0, "a", 1)])  # q2 unreachable
    t = a.trim()
    assert t == Automaton.empty(a.alphabet)
    assert not t.finals
    assert t.trim() == t


def test_reverse_transitions_fig_a(fig_a):
    rev = fig_a.reverse_transitions()
    assert rev[1, "c"] == {0}
    assert rev[0, "a"] == {0}
    assert rev[0, "c"] == frozenset()


def test_reverse_transitions_no_transitions():
    a = Automaton(Alphabet("ab"), 2, 0, {1}, [])
    rev = a.reverse_transitions()
    assert all(not preds for preds in rev.values())


def test_reverse_transitions_self_loop():
    a = Automaton(Alphabet("a"), 1, 0, {0}, [(0, "a", 0)])
    assert 0 in a.reverse_transitions()[0, "a"]


def test_reverse_of_reverse_rebuilds_relation(fig_a, fig_b):
    for a in (fig_a, fig_b):
        rev = a.reverse_transitions()
        rebuilt = Automaton(a.alphabet, a.n, a.initial, a.finals,
                            ((src, sym, q) for (q, sym), preds in rev.items()
                             for src in preds),
                            names=a.names)
        assert rebuilt == a


def test_determinize_already_deterministic(fig_a):
    d = fig_a.determinize()
    assert d.deterministic
    for w in ("abca", "cb", "", "cabc", "bbca"):
        assert d.accepts(w) == fig_a.accepts(w)


def test_determinize_sigma_star_a():
    # delta(q0, a) = {q0, q1}: language = words ending in a over {a}
    a = Automaton(Alphabet("a"), 2, 0, {1}, [(0, "a", 0), (0, "a", 1)])
    d = a.determinize()
    assert d.deterministic
    for length in range(7):
        word = "a" * length
        assert d.accepts(word) == (length >= 1)
        assert d.accepts(word) == a.accepts(word)


def test_determinize_language_equal_on_random_instances():
    for seed in range(25):
        a = oracle.random_automaton(4, 2, 0.35, seed)
        d = a.determinize()
        assert d.deterministic
        for word, _ in zip(oracle.enumerate_accepted(a, 6).words, range(200)):
            assert d.accepts(word)
        lang_a = oracle.enumerate_accepted(a, 6).words
        lang_d = oracle.enumerate_accepted(d, 6).words
        assert lang_a == lang_d


def test_determinize_budget_error():
    # (a|b)* a (a|b)^12 needs 2^13 subset states
    chain = 12
    triples = [(0, "a", 0), (0, "b", 0), (0, "a", 1)]
    for i in range(1, chain + 1):
        triples += [(i, "a", i + 1), (i, "b", i + 1)]
    a = Automaton(Alphabet("ab"), chain + 2, 0, {chain + 1}, triples)
    with pytest.raises(BudgetError):
        a.determinize(state_budget=1000)


def test_trim_preserves_language_on_random_instances():
    for seed in range(25):
        alphabet = Alphabet("ab")
        a = oracle.random_automaton(5, 2, 0.3, seed)
        extra = Automaton(a.alphabet, a.n + 1, a.initial, a.finals,
                          a.transitions() + [(a.n, "a", a.n)],
                          names=a.names + ("sink",))
        t = extra.trim()
        assert oracle.enumerate_accepted(t, 6).words == \
            oracle.enumerate_accepted(extra, 6).words


def test_accepts_agrees_with_naive_path_search():
    import itertools
    for seed in range(15):
        a = oracle.random_automaton(4, 3, 0.25, seed)
        for length in range(5):
            for tup in itertools.product(a.alphabet.symbols, repeat=length):
                word = "".join(tup)
                assert a.accepts(word) == oracle.naive_accepts(a, word)


def test_path_validity(fig_a):
    good = Path((0, 0, 1, 2), ("a", "c", "a"))
    assert good.is_valid(fig_a)
    assert good.word == "aca"
    bad = Path((0, 2), ("a",))
    assert not bad.is_valid(fig_a)
    with pytest.raises(ValueError):
        Path((0, 1), ("a", "b"))


def test_alphabet_rejects_bad_symbols():
    with pytest.raises(ParseError):
        Alphabet([])
    with pytest.raises(ParseError):
        Alphabet(["ab"])
    with pytest.raises(ParseError):
        Alphabet("aa")


def test_alphabet_order_is_declaration_order():
    alphabet = Alphabet("cab")
    assert alphabet.index("c") == 0
    words = ["abc", "cab", "bac", "cc"]
    words.sort(key=alphabet.sort_key)
    assert words == ["cc", "cab", "abc", "bac"]
