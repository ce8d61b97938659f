import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syncwords.automata import Instance
from syncwords.families import cerny, debruijn_counter
from syncwords.textio import ParseError, parse, serialize

from test_automata import dfas, nfas, pfas

MINIMAL = """\
kind dfa
states 1
letters a
0 a 0
"""


def test_minimal_roundtrip():
    inst = parse(MINIMAL)
    assert inst.automaton.kind == "dfa"
    assert inst.automaton.n == 1
    assert serialize(inst) == MINIMAL


def test_comments_and_blank_lines():
    text = "# header comment\n\nkind dfa\nstates 1\nletters a\n0 a 0  # loop\n"
    assert parse(text).automaton.n == 1


def test_sections():
    text = MINIMAL.replace("states 1", "states 4").replace(
        "0 a 0",
        "0 a 1\n1 a 0\n2 a 3\n3 a 3\n"
        "subset 0 2\npartition 0,1|2,3\npairs 3:0 1:2\nlabels 0=p 1=q 2=r 3=s",
    )
    inst = parse(text)
    assert inst.subset == frozenset({0, 2})
    assert inst.partition == (frozenset({0, 1}), frozenset({2, 3}))
    assert inst.pairs == ((3, 0), (1, 2))
    assert inst.automaton.state_labels == ("p", "q", "r", "s")
    assert parse(serialize(inst)) == inst


def test_nfa_multi_successors():
    text = "kind nfa\nstates 2\nletters a\n0 a 0,1\n1 a -\n"
    inst = parse(text)
    assert inst.automaton.delta[0][0] == frozenset({0, 1})
    assert inst.automaton.delta[1][0] == frozenset()
    assert serialize(inst) == text


def test_nfa_duplicate_lines_union():
    text = "kind nfa\nstates 2\nletters a\n0 a 0\n0 a 1\n1 a -\n"
    assert parse(text).automaton.delta[0][0] == frozenset({0, 1})


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("kind wat\nstates 1\nletters a\n0 a 0\n", 1, "unknown kind"),
        ("kind dfa\nstates x\nletters a\n0 a 0\n", 2, "not an integer"),
        ("kind dfa\nstates 1\nalpha a\n0 a 0\n", 3, "letters"),
        ("kind dfa\nstates 1\nletters a\n0 b 0\n", 4, "unknown letter"),
        ("kind dfa\nstates 1\nletters a\n0 a 5\n", 4, "out of range"),
        ("kind dfa\nstates 1\nletters a\n0 a 0\n0 a 0\n", 5, "duplicate"),
        ("kind pfa\nstates 1\nletters a\n0 a 0\n0 a -\n", 5, "duplicate"),
        ("kind dfa\nstates 2\nletters a\nsubset 0 9\n0 a 0\n1 a 1\n", 4, "out of range"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_dfa_must_be_total():
    text = "kind dfa\nstates 2\nletters a\n0 a 1\n"
    with pytest.raises(ParseError, match="dfa must be total"):
        parse(text)


def test_pfa_undefined_marker():
    text = "kind pfa\nstates 2\nletters a b\n0 a 1\n0 b -\n1 b 0\n"
    inst = parse(text)
    assert inst.automaton.delta[0][1] == frozenset()
    assert inst.automaton.delta[1][0] == frozenset()  # omitted defaults to empty


def test_counter_instance_roundtrips():
    inst = debruijn_counter(2).instance
    assert parse(serialize(inst)) == inst
    assert serialize(parse(serialize(inst))) == serialize(inst)


def test_unicode_tokens_roundtrip():
    inst = debruijn_counter(4).instance
    text = serialize(inst)
    assert "κ" in text and "ω" in text and "↓" in text
    assert parse(text) == inst


def test_cerny_roundtrip():
    inst = cerny(5)
    assert parse(serialize(inst)) == inst


@settings(max_examples=60)
@given(st.data())
def test_random_instances_roundtrip(data):
    a = data.draw(st.one_of(dfas(), pfas(), nfas()))
    subset = data.draw(st.one_of(
        st.none(), st.sets(st.integers(0, a.n - 1), min_size=1).map(frozenset)))
    inst = Instance(a, subset)
    assert parse(serialize(inst)) == inst


def test_serialization_is_deterministic():
    inst = debruijn_counter(2).instance
    assert serialize(inst) == serialize(inst)
    rebuilt = parse(serialize(inst))
    assert serialize(rebuilt) == serialize(inst)
