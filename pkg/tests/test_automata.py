import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syncwords.automata import (Alphabet, Automaton, Instance,
                                augmentation_connects, augmenting_pairs,
                                condensation, dfa_from_table,
                                is_strongly_connected, nfa_from_sets,
                                pfa_from_table, run, sink_states, step)


@st.composite
def dfas(draw, max_states=6, max_letters=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    table = [[draw(st.integers(0, n - 1)) for _ in range(k)] for _ in range(n)]
    return dfa_from_table(table, string.ascii_lowercase[:k])


@st.composite
def pfas(draw, max_states=6, max_letters=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    table = [
        [draw(st.one_of(st.none(), st.integers(0, n - 1))) for _ in range(k)]
        for _ in range(n)
    ]
    return pfa_from_table(table, string.ascii_lowercase[:k])


@st.composite
def nfas(draw, max_states=5, max_letters=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    table = [
        [draw(st.sets(st.integers(0, n - 1), max_size=n)) for _ in range(k)]
        for _ in range(n)
    ]
    return nfa_from_sets(table, string.ascii_lowercase[:k])


def words(a, max_len=6):
    return st.lists(st.integers(0, len(a.alphabet) - 1), max_size=max_len).map(tuple)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(())
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(("a b",))
    with pytest.raises(ValueError):
        Alphabet(("-",))
    assert Alphabet(("0", "1", "κ", "ω")).index("κ") == 2


def test_kind_invariants():
    with pytest.raises(ValueError):
        dfa_from_table([[0, None]], "ab")  # type: ignore[list-item]
    with pytest.raises(ValueError):
        Automaton("pfa", 2, Alphabet(("a",)),
                  ((frozenset((0, 1)),), (frozenset((0,)),)))
    with pytest.raises(ValueError):
        dfa_from_table([[5]], "a")
    pfa_from_table([[None]], "a")  # undefined cell is fine for pfa


def test_step_examples():
    a = pfa_from_table([[1, None], [1, 0]], "ab")
    assert step(a, 0, 0) == frozenset({1})
    assert step(a, 0, 1) == frozenset()
    with pytest.raises(IndexError):
        step(a, 2, 0)
    with pytest.raises(IndexError):
        step(a, 0, 2)


def test_run_identity_and_extension():
    a = dfa_from_table([[1, 0], [0, 1]], "ab")
    assert run(a, {0, 1}, ()) == frozenset({0, 1})
    assert run(a, {0}, (0, 1)) == run(a, run(a, {0}, (0,)), (1,))


@settings(max_examples=60)
@given(st.data())
def test_extension_law(data):
    a = data.draw(dfas())
    s = data.draw(st.integers(0, a.n - 1))
    u = data.draw(words(a))
    v = data.draw(words(a))
    assert run(a, {s}, u + v) == run(a, run(a, {s}, u), v)


@settings(max_examples=60)
@given(st.data())
def test_dfa_monotonicity(data):
    a = data.draw(dfas())
    start = data.draw(st.sets(st.integers(0, a.n - 1), min_size=1))
    w = data.draw(words(a))
    assert len(run(a, start, w)) <= len(start)


@settings(max_examples=60)
@given(st.data())
def test_nfa_union_distribution(data):
    a = data.draw(nfas())
    t1 = data.draw(st.sets(st.integers(0, a.n - 1)))
    t2 = data.draw(st.sets(st.integers(0, a.n - 1)))
    w = data.draw(words(a))
    assert run(a, t1 | t2, w) == run(a, t1, w) | run(a, t2, w)


def test_sink_states():
    a = dfa_from_table([[0, 0], [1, 1], [0, 1]], "ab")
    assert sink_states(a) == frozenset({0, 1})
    trivial = dfa_from_table([[0]], "a")
    assert sink_states(trivial) == frozenset({0})
    # pfa: an undefined letter disqualifies a sink
    p = pfa_from_table([[0, None]], "ab")
    assert sink_states(p) == frozenset()


@settings(max_examples=60)
@given(dfas(max_states=6))
def test_sink_excludes_strong_connectivity(a):
    if a.n >= 2 and sink_states(a):
        assert not is_strongly_connected(a)


def test_strongly_connected_small():
    assert is_strongly_connected(dfa_from_table([[0]], "a"))
    cycle = dfa_from_table([[1], [2], [0]], "a")
    assert is_strongly_connected(cycle)
    chain = dfa_from_table([[1], [1]], "a")
    assert not is_strongly_connected(chain)


def test_condensation_topological():
    # two states feeding a sink
    a = dfa_from_table([[1, 2], [1, 2], [2, 2]], "ab")
    cond = condensation(a)
    order = {comp: i for i, comp in enumerate(cond.components)}
    for i, j in cond.dag_edges:
        assert i < j
    assert sorted(sum(map(list, cond.components), [])) == list(a.states)
    assert all(cond.component_of[s] == ci
               for ci, comp in enumerate(cond.components) for s in comp)


def test_condensation_disjoint_cycles():
    a = pfa_from_table([[1], [0], [3], [2]], "a")
    cond = condensation(a)
    assert len(cond.components) == 2
    assert not cond.dag_edges
    pairs = augmenting_pairs(a)
    assert len(pairs) == 2
    assert augmentation_connects(a, pairs)


def test_augmenting_pairs_sc_is_empty():
    cycle = dfa_from_table([[1], [2], [0]], "a")
    assert augmenting_pairs(cycle) == []
    assert augmentation_connects(cycle, [])


def test_augmentation_examples():
    chain = dfa_from_table([[1], [1]], "a")
    assert not augmentation_connects(chain, [])
    assert augmentation_connects(chain, [(1, 0)])


@settings(max_examples=80)
@given(st.one_of(dfas(), pfas(), nfas()))
def test_augmenting_pairs_always_connect(a):
    pairs = augmenting_pairs(a)
    assert augmentation_connects(a, pairs)
    if is_strongly_connected(a):
        assert pairs == []


def test_word_tokens_rendering():
    from syncwords.automata import Alphabet, word_tokens
    tight = Alphabet(("0", "1", "κ"))
    assert word_tokens(tight, (0, 2, 1)) == "0κ1"
    wide = Alphabet(("a", "ψ1"))
    assert word_tokens(wide, (0, 1, 0)) == "a ψ1 a"
    assert word_tokens(tight, ()) == ""


def test_instance_validation():
    a = dfa_from_table([[1], [0]], "a")
    with pytest.raises(ValueError):
        Instance(a, frozenset())
    with pytest.raises(ValueError):
        Instance(a, frozenset({5}))
    with pytest.raises(ValueError):
        Instance(a, frozenset({0}), (frozenset({0, 1}), frozenset({1})))
    with pytest.raises(ValueError):
        Instance(a, frozenset({0}), None, ((0, 7),))
    Instance(a, frozenset({0, 1}), (frozenset({0}), frozenset({1})), ((0, 1),))
