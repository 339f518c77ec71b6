import itertools

import pytest

from subuniv import Alphabet, ParseError, SymbolError, compile_regex
from subuniv import oracle


def all_words(alphabet, max_len):
    for length in range(max_len + 1):
        for tup in itertools.product(alphabet.symbols, repeat=length):
            yield "".join(tup)


def test_abc_star():
    abc = Alphabet("abc")
    a = compile_regex("(abc)*", abc)
    for word in all_words(abc, 6):
        assert a.accepts(word) == (len(word) % 3 == 0 and word == "abc" * (len(word) // 3))


def test_union():
    a = compile_regex("a|b", Alphabet("ab"))
    accepted = [w for w in all_words(Alphabet("ab"), 3) if a.accepts(w)]
    assert accepted == ["a", "b"]


def test_a_star_b_by_enumeration():
    ab = Alphabet("ab")
    a = compile_regex("a*b", ab)
    expected = sorted(("a" * j + "b" for j in range(5)), key=ab.sort_key)
    assert list(oracle.enumerate_accepted(a, 5).words) == expected


def test_empty_pattern_is_epsilon():
    a = compile_regex("", Alphabet("ab"))
    assert a.accepts("")
    assert not a.accepts("a")


def test_union_with_empty_branch():
    a = compile_regex("ab|", Alphabet("ab"))
    assert a.accepts("")
    assert a.accepts("ab")
    assert not a.accepts("a")


def test_nested_stars_and_groups():
    ab = Alphabet("ab")
    a = compile_regex("(a|b*a)*", ab)
    # language: all words ending in a, plus the empty word
    for word in all_words(ab, 6):
        assert a.accepts(word) == (word == "" or word.endswith("a"))


def test_no_epsilon_transitions_leak():
    a = compile_regex("(ab)*|b", Alphabet("ab"))
    for (_, sym), _ in a._delta.items():
        assert sym in ("a", "b")


def test_parse_errors():
    with pytest.raises(ParseError):
        compile_regex("(ab", Alphabet("ab"))
    with pytest.raises(ParseError):
        compile_regex("a)b", Alphabet("ab"))
    with pytest.raises(ParseError):
        compile_regex("*a", Alphabet("ab"))
    with pytest.raises(SymbolError):
        compile_regex("axb", Alphabet("ab"))


def test_matches_python_re_on_random_patterns():
    import random
    import re
    ab = Alphabet("ab")
    rng = random.Random(7)

    def random_pattern(depth=0):
        pieces = []
        for _ in range(rng.randint(1, 3)):
            roll = rng.random()
            if roll < 0.55 or depth >= 2:
                piece = rng.choice("ab")
            else:
                piece = "(" + random_pattern(depth + 1) + ")"
            if rng.random() < 0.3:
                piece += "*"
            pieces.append(piece)
        expr = "".join(pieces)
        if rng.random() < 0.3:
            expr += "|" + (rng.choice("ab") if depth else random_pattern(depth + 1))
        return expr

    for _ in range(40):
        pattern = random_pattern()
        ours = compile_regex(pattern, ab)
        theirs = re.compile(f"(?:{pattern})\\Z")
        for word in all_words(ab, 5):
            assert ours.accepts(word) == bool(theirs.match(word)), (pattern, word)
