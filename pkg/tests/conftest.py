import pytest

from subuniv import Automaton

FIG_A_TEXT = """\
# a 2-existence-universal NFA over {a, b, c}
alphabet: a b c
states: q0 q1 q2
initial: q0
final: q2
trans: q0 a q0
trans: q0 b q0
trans: q0 c q1
trans: q1 a q2
trans: q2 b q2
trans: q2 c q2
"""

# accepts exactly the six permutations of abc
FIG_B_TEXT = """\
alphabet: a b c
states: q0 q1 q2 q3 q4 q5 q6 q7 q8 q9 q10 q11 q12 q13 q14 q15
initial: q0
final: q3 q5 q8 q10 q13 q15
trans: q0 a q1
trans: q0 b q6
trans: q0 c q11
trans: q1 b q2
trans: q1 c q4
trans: q2 c q3
trans: q4 b q5
trans: q6 a q7
trans: q6 c q9
trans: q7 c q8
trans: q9 a q10
trans: q11 a q12
trans: q11 b q14
trans: q12 b q13
trans: q14 a q15
"""

# an a-chain with a return edge on the other letters; accepts words whose
# universality index can be pumped arbitrarily high
FIG_WORST_TEXT = """\
alphabet: a b c
states: q1 q2 q3 q4
initial: q1
final: q4
trans: q1 a q2
trans: q2 a q3
trans: q3 a q4
trans: q4 b q1
trans: q4 c q1
"""


@pytest.fixture
def fig_a():
    return Automaton.parse(FIG_A_TEXT)


@pytest.fixture
def fig_b():
    return Automaton.parse(FIG_B_TEXT)


@pytest.fixture
def fig_worst():
    return Automaton.parse(FIG_WORST_TEXT)


@pytest.fixture
def fig_a_file(tmp_path):
    path = tmp_path / "figA.aut"
    path.write_text(FIG_A_TEXT)
    return str(path)
