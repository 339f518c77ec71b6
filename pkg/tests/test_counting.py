import pytest

from subuniv import (Alphabet, Automaton, BudgetError, DeterminismError,
                     INFINITE, SubunivError, build_tables, compile_regex,
                     count, is_perfect_k_universal)
from subuniv import oracle


def test_fig_a_length_four_count_is_nine(fig_a):
    assert count(fig_a, 1, length=4) == 9
    # fig A is deterministic, so words and paths coincide
    assert count(fig_a, 1, length=4, unit="words") == 9


def test_fig_a_nine_words_listed(fig_a):
    members = oracle.enumerate_accepted(fig_a, 4).members(1, length=4)
    assert members == ["abca", "acab", "baca", "bbca", "bcab", "bcac",
                       "cabb", "cabc", "cacb"]


def test_tables_fig_a(fig_a):
    tables, universal = build_tables(fig_a, 4, 1)
    assert sum(universal.entry(q, 4) for q in fig_a.finals) == 9
    assert universal.entry(0, 0) == 0
    assert tables.entry(fig_a.initial, 0, 0, ()) == 1
    assert tables.entry(2, 0, 0, ()) == 0


def test_tables_reject_k_zero(fig_a):
    with pytest.raises(SubunivError):
        build_tables(fig_a, 3, 0)


def test_layer_sum_conservation_random():
    # sum over (arches, rest) cells plus saturated counts equals the plain
    # number of paths, which an independent DP provides
    for seed in range(20):
        a = oracle.random_automaton(5, 3, 0.25, seed)
        if not a.finals:
            continue
        plain = oracle.count_paths_by_length(a, 8)
        for k in (1, 2, 3):
            tables, universal = build_tables(a, 8, k)
            for level in range(9):
                for q in range(a.n):
                    combined = tables.sum_over_cells(q, level) + universal.entry(q, level)
                    assert combined == plain[level][q], (seed, k, level, q)


def test_count_matches_enumeration_random():
    for seed in range(25):
        a = oracle.random_automaton(4, 2, 0.35, seed)
        if not a.finals:
            continue
        labels = oracle.enumerate_accepting_path_labels(a, 7)
        iotas = {w: oracle.naive_iota(w, a.alphabet) for w in set(labels)}
        for k in (0, 1, 2, 3):
            qualifying = [w for w in labels if iotas[w] >= k]
            for m in (0, 2, 4, 7):
                assert count(a, k, length=m) == \
                    sum(1 for w in qualifying if len(w) == m), (seed, k, m)
                assert count(a, k, max_length=m) == \
                    sum(1 for w in qualifying if len(w) <= m), (seed, k, m)
                perfect = [w for w in qualifying if len(w) == m
                           and is_perfect_k_universal(w, a.alphabet, k)]
                assert count(a, k, length=m, perfect=True) == len(perfect), \
                    (seed, k, m)


def test_at_most_is_sum_of_exacts(fig_a):
    for k in (1, 2):
        assert count(fig_a, k, max_length=6) == \
            sum(count(fig_a, k, length=m) for m in range(7))


def test_ksigma_exceeding_length_gives_zero(fig_a):
    assert count(fig_a, 3, length=8) == 0  # 3 * 3 > 8
    assert count(fig_a, 5, max_length=14) == 0


def test_total_single_word():
    a = compile_regex("abc", Alphabet("abc")).determinize()
    assert count(a, 1, unit="words") == 1


def test_total_abc_star_infinite():
    a = compile_regex("(abc)*", Alphabet("abc")).determinize()
    assert count(a, 1, unit="words") is INFINITE
    assert count(a, 7, unit="words") is INFINITE  # k above n, loop is universal


def test_total_empty_language():
    empty = Automaton.empty(Alphabet("ab"))
    assert count(empty, 0) == 0
    assert count(empty, 2) == 0


def test_total_finite_language():
    a = compile_regex("ab|aab|b", Alphabet("ab")).determinize()
    assert count(a, 1, unit="words") == 2  # ab and aab
    assert count(a, 0, unit="words") == 3
    assert count(a, 2, unit="words") == 0


def test_total_k_zero_infinite_iff_cycle():
    ab = Alphabet("ab")
    assert count(compile_regex("a*", ab).determinize(), 0, unit="words") is INFINITE
    assert count(compile_regex("a|b", ab).determinize(), 0, unit="words") == 2


def test_total_sigma_one():
    a = Alphabet("a")
    assert count(compile_regex("a*", a).determinize(), 1, unit="words") is INFINITE
    assert count(compile_regex("aaa", a).determinize(), 2, unit="words") == 1
    assert count(compile_regex("aaa", a).determinize(), 4, unit="words") == 0


def test_total_perfect_of_loop_language():
    # (ab)* holds exactly one perfect 3-universal word: ababab
    a = compile_regex("(ab)*", Alphabet("ab")).determinize()
    assert count(a, 3, perfect=True, unit="words") == 1
    assert count(a, 3, unit="words") is INFINITE


def test_total_perfect_infinite():
    # a*b over {a,b}: every a^j b with j >= 1 is perfect 1-universal
    a = compile_regex("a*b", Alphabet("ab")).determinize()
    assert count(a, 1, perfect=True, unit="words") is INFINITE


def test_total_perfect_matches_enumeration_random():
    for seed in range(25):
        a = oracle.random_automaton(4, 2, 0.3, seed, deterministic=True)
        if not a.finals:
            continue
        for k in (1, 2):
            got = count(a, k, perfect=True, unit="words")
            members = [w for w in oracle.enumerate_accepted(a, 14).words
                       if is_perfect_k_universal(w, a.alphabet, k)]
            if got is INFINITE:
                assert len(members) >= 1
            elif got != len(members):
                # a finite perfect set can hold members past the first horizon
                deeper = [w for w in
                          oracle.enumerate_accepted(a, 20, budget=5_000_000).words
                          if is_perfect_k_universal(w, a.alphabet, k)]
                assert got == len(deeper), (seed, k)


def test_total_matches_oracle_lengths_random():
    for seed in range(30):
        a = oracle.random_automaton(4, 2, 0.35, seed)
        if not a.finals:
            continue
        for k in (1, 2):
            horizon = k * a.n * a.alphabet.sigma
            lengths = oracle.k_universal_lengths(a, k, horizon)
            expect_infinite = any(level > a.n for level in lengths)
            got = count(a, k)
            if expect_infinite:
                assert got is INFINITE, (seed, k)
            else:
                labels = oracle.enumerate_accepting_path_labels(a, a.n)
                want = sum(1 for w in labels
                           if oracle.naive_iota(w, a.alphabet) >= k)
                assert got == want, (seed, k)


def test_words_unit_requires_dfa():
    nfa = Automaton(Alphabet("a"), 2, 0, {1}, [(0, "a", 0), (0, "a", 1)])
    with pytest.raises(DeterminismError):
        count(nfa, 1, length=3, unit="words")
    assert count(nfa.determinize(), 1, length=3, unit="words") == 1


def test_sigma_cap_enforced(fig_a):
    with pytest.raises(BudgetError):
        count(fig_a, 1, length=4, sigma_cap=2)


def test_prefix_seeded_tables(fig_a):
    # seeding with {"b"} counts only labels that start with b
    tables, universal = build_tables(fig_a, 4, 1, prefixes=["b"])
    got = sum(universal.entry(q, 4) for q in fig_a.finals)
    members = oracle.enumerate_accepted(fig_a, 4).members(1, length=4)
    assert got == sum(1 for w in members if w.startswith("b"))


def test_prefix_seeds_must_be_prefix_free(fig_a):
    with pytest.raises(SubunivError):
        build_tables(fig_a, 4, 1, prefixes=["a", "ab"])


def test_infinite_sentinel_behaves_like_a_top_element():
    assert INFINITE == INFINITE
    assert INFINITE > 10 ** 100
    assert not (INFINITE < 5)
    assert INFINITE >= INFINITE
    assert 3 < INFINITE and 3 <= INFINITE
