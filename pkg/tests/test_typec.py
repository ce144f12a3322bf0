import pytest
from hypothesis import given
from hypothesis import strategies as st

from plactic.diagnostics import NotDecreasing
from plactic.typec import (
    closure,
    congruent,
    erasable_pairs,
    is_strictly_decreasing,
    parse_signed_word,
    signed_weight,
    sp4_erase,
    sp_neighbors,
    validate,
)


def signed_words(rank: int, max_len: int = 4):
    letters = [x for x in range(-rank, rank + 1) if x]
    return st.lists(st.sampled_from(letters), max_size=max_len).map(tuple)


def test_parsing_and_validation():
    assert parse_signed_word("1,-1,1") == (1, -1, 1)
    assert parse_signed_word("") == ()
    with pytest.raises(ValueError):
        validate((3,), 2)
    with pytest.raises(ValueError):
        validate((0,), 2)
    assert signed_weight((1, -1, 2, 2), 2) == (0, 2)


def test_erasure():
    assert erasable_pairs((1, -1), 1) == [(1, 2)]
    assert sp4_erase((1, -1), 1) == ()
    # in rank 2 the pair a1 a1bar is too close to the end to be erased alone
    assert sp4_erase((1, -1), 2) == (1, -1)
    assert sp4_erase((2, 1, -1), 2) == (2,)
    with pytest.raises(NotDecreasing):
        sp4_erase((-1, 1), 1)
    assert is_strictly_decreasing((2, 1, -1, -2))


def test_relations_by_hand():
    # SP3: a1 a1bar x <-> a2bar a2 x when |x| <= 1
    assert (-2, 2, 1) in sp_neighbors((1, -1, 1), 2)
    assert (1, -1, 1) in sp_neighbors((-2, 2, 1), 2)
    # SP1 with x < y < z: y x z <-> y z x
    assert (2, 3, 1) in sp_neighbors((2, 1, 3), 3)
    # SP2 with x < y: y x x <-> x y x
    assert (1, 2, 1) in sp_neighbors((2, 1, 1), 2)
    # SP1 is blocked when x = zbar: y x z = 1 2bar 2 does not become 1 2 2bar
    assert (1, 2, -2) not in sp_neighbors((1, -2, 2), 2)


@given(signed_words(2))
def test_neighbourhood_is_symmetric(w):
    for v in sp_neighbors(w, 2, max_len=len(w) + 4):
        assert w in sp_neighbors(v, 2, max_len=len(v) + 4)


@given(signed_words(2, 3))
def test_closures_preserve_signed_weight(w):
    members, _ = closure(w, 2, max_len=6, max_states=5000)
    assert {signed_weight(m, 2) for m in members} == {signed_weight(w, 2)}


def test_congruence_verdicts():
    assert congruent((1, -1), (), 1) == "true"
    assert congruent((1, -1, 1), (-2, 2, 1), 2) == "true"
    assert congruent((1,), (-1,), 1) == "false"
    assert congruent((2, 1), (1, 2), 2) == "false"
    assert congruent((1, 2), (1, 2), 2) == "true"
    # a budget of two states cannot settle anything non-trivial
    assert congruent((1, -1, 1, 2), (2, 1, -1, 1), 2, max_states=2) == "unknown"


def test_closure_completeness_flag():
    members, complete = closure((1,), 1, max_len=8)
    assert members == {(1,)} and complete
    members, complete = closure((1, -1), 1, max_len=8, max_states=1)
    assert not complete
