import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import DegreeOverflowError, InputError, InvalidProfileError
from multiset_core.helpers import (
    FERRERS_CELL, FERRERS_RULE, difference, from_sigma, is_graphical, is_trivial, make_degree_sequence, mu,
    parse_degree_sequence, render_ferrers, sigma, union,
)
from multiset_core.multiset_types import DegreeSequence, SigmaProfile
from strategies import degree_sequences

RUNNING = make_degree_sequence([1, 2, 2, 4, 4, 5, 6])

def test_make_degree_sequence_counts():
    assert dict(RUNNING.counts) == {1: 1, 2: 2, 4: 2, 5: 1, 6: 1}
    assert RUNNING.order == 7
    assert RUNNING.total == 24
    assert RUNNING.max_value == 6

def test_make_degree_sequence_empty():
    D = make_degree_sequence([])
    assert D.order == 0
    assert D.is_empty
    assert D.values() == []

def test_make_degree_sequence_ignores_order():
    assert make_degree_sequence([3, 1, 3]) == make_degree_sequence([1, 3, 3])
    assert hash(make_degree_sequence([3, 1, 3])) == hash(make_degree_sequence([1, 3, 3]))

def test_make_degree_sequence_rejects_negative():
    with pytest.raises(InputError):
        make_degree_sequence([1, -1])

def test_make_degree_sequence_rejects_non_integers():
    with pytest.raises(InputError):
        make_degree_sequence([1, 2.5])
    with pytest.raises(InputError):
        make_degree_sequence([True])

def test_degree_cap():
    with pytest.raises(DegreeOverflowError):
        make_degree_sequence([2**31])

def test_canonical_text_and_json():
    assert RUNNING.to_text() == '1,2,2,4,4,5,6'
    assert RUNNING.to_json() == [1, 2, 2, 4, 4, 5, 6]
    assert str(RUNNING) == '{1,2,2,4,4,5,6}'

def test_parse_degree_sequence_forms():
    assert parse_degree_sequence('1,2,2,4,4,5,6') == RUNNING
    assert parse_degree_sequence('[6, 5, 4, 4, 2, 2, 1]') == RUNNING
    assert parse_degree_sequence('') == make_degree_sequence([])

@pytest.mark.parametrize('text', ['1,a', '[1, 2', '{"a": 1}', '1,,2'])
def test_parse_degree_sequence_rejects_garbage(text):
    with pytest.raises(InputError):
        parse_degree_sequence(text)

@pytest.mark.parametrize('values, expected', [
    ([1, 2, 2, 4, 4, 5, 6], True),
    ([3], False),
    ([5, 1], False),
    ([], True),
    ([0, 0, 0], True),
    ([2, 2], True),
    ([1, 1, 1], False),
])
def test_is_graphical(values, expected):
    assert is_graphical(make_degree_sequence(values)) == expected

@given(st.integers(1, 1000))
def test_single_positive_element_is_not_graphical(x):
    assert not is_graphical(make_degree_sequence([x]))

@pytest.mark.parametrize('values, k, expected', [
    ([0, 0, 0, 0], 3, True),
    ([0, 0, 0, 3, 3], 3, False),
    ([], 1, True),
    ([2, 2], 3, True),
])
def test_is_trivial(values, k, expected):
    assert is_trivial(make_degree_sequence(values), k) == expected

@pytest.mark.parametrize('k', [0, -1, 1.5, True])
def test_is_trivial_rejects_bad_k(k):
    with pytest.raises(InputError):
        is_trivial(RUNNING, k)

def test_sigma_examples():
    assert sigma(make_degree_sequence([0, 1, 1, 3, 3])).to_list() == [5, 4, 2, 2]
    assert sigma(make_degree_sequence([0, 0])).to_list() == [2]
    assert sigma(RUNNING).to_list() == [7, 7, 6, 4, 4, 2, 1]
    assert sigma(make_degree_sequence([])).to_list() == [0]

def test_sigma_is_zero_past_the_maximum():
    profile = sigma(make_degree_sequence([0, 1, 1, 3, 3]))
    assert profile(4) == 0
    assert profile(100) == 0

def test_from_sigma_examples():
    assert from_sigma([5, 4, 2, 2]) == make_degree_sequence([0, 1, 1, 3, 3])
    assert from_sigma([0]) == make_degree_sequence([])
    assert from_sigma(SigmaProfile([3, 1])) == make_degree_sequence([0, 0, 1])

def test_from_sigma_rejects_increasing_profile():
    with pytest.raises(InvalidProfileError):
        from_sigma([1, 2])

def test_mu():
    D = make_degree_sequence([0, 1, 1, 3, 3])
    assert mu(D, 1) == 2
    assert mu(D, 2) == 0
    assert mu(D, 3) == 2

@settings(max_examples=300)
@given(degree_sequences())
def test_sigma_profile_invariants(D):
    profile = sigma(D)
    values = profile.to_list()
    assert all(values[z] >= values[z + 1] for z in range(len(values) - 1))
    assert profile(0) == D.order
    assert sum(values[1:]) == D.total

@settings(max_examples=300)
@given(degree_sequences())
def test_sigma_round_trip(D):
    assert from_sigma(sigma(D)) == D

@given(st.lists(st.integers(0, 10), min_size=1, max_size=8))
def test_profile_round_trip(raw):
    profile = SigmaProfile(sorted(raw, reverse=True))
    assert sigma(from_sigma(profile)) == profile

@given(degree_sequences(), st.integers(0, 14))
def test_mu_is_difference_of_sigma(D, z):
    profile = sigma(D)
    assert mu(D, z) == profile(z) - profile(z + 1)

@given(degree_sequences(), degree_sequences(), st.integers(0, 13))
def test_union_and_difference_pointwise(D, E, z):
    assert mu(union(D, E), z) == mu(D, z) + mu(E, z)
    assert mu(difference(D, E), z) == max(0, mu(D, z) - mu(E, z))

@given(degree_sequences().filter(lambda D: not D.is_empty), st.data())
def test_increment_adds_indicator(D, data):
    x = data.draw(st.sampled_from(sorted(D.counts)))
    assert sigma(D.replace_one(x, x + 1)) == sigma(D).add_indicator(x + 1)

def test_add_indicator_rejects_broken_profile():
    with pytest.raises(InvalidProfileError):
        SigmaProfile([2, 2]).add_indicator(3)

def test_render_ferrers_shape():
    assert render_ferrers(make_degree_sequence([2, 1])) == FERRERS_CELL * 2 + '\n' + FERRERS_CELL

def test_render_ferrers_with_rule():
    rows = render_ferrers(make_degree_sequence([0, 1, 2, 3, 3, 3]), 3).split('\n')
    assert len(rows) == 6
    assert rows[0] == FERRERS_CELL * 3 + FERRERS_RULE
    assert rows[3] == FERRERS_CELL * 2 + ' ' + FERRERS_RULE
    assert rows[5] == '   ' + FERRERS_RULE
    assert all(row.index(FERRERS_RULE) == 3 for row in rows)

@given(degree_sequences(max_value=9), st.integers(1, 5))
def test_render_ferrers_parses_back(D, k):
    rows = render_ferrers(D, k).split('\n') if not D.is_empty else []
    assert [row.count(FERRERS_CELL) for row in rows] == sorted(D.values(), reverse=True)

def test_degree_sequence_is_immutable():
    with pytest.raises(TypeError):
        RUNNING.counts[1] = 5
    with pytest.raises(AttributeError):
        RUNNING.extra = 1

def test_zeros():
    assert DegreeSequence.zeros(3) == make_degree_sequence([0, 0, 0])
    assert DegreeSequence.zeros(0).is_empty
