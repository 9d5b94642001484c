import pytest
from hypothesis import given, settings, strategies as st

from hallshell.errors import EmptyMemberError, InvalidInputError, OracleLimitError
from hallshell.family import (
    AugmentingMatcher,
    SetFamily,
    Transversal,
    all_transversals,
    count_transversals,
    find_transversal,
    is_critical_block,
    marriage_condition_by_subsets,
    satisfies_marriage_condition,
)


@st.composite
def family_strategy(draw, max_n=6, max_size=6, allow_empty=False):
    n = draw(st.integers(min_value=1, max_value=max_n))
    size = draw(st.integers(min_value=1, max_value=max_size))
    min_member = 0 if allow_empty else 1
    members = draw(st.lists(
        st.sets(st.integers(min_value=1, max_value=n), min_size=min_member, max_size=n),
        min_size=size, max_size=size,
    ))
    return SetFamily.of(n, members)


def test_family_rejects_out_of_range_elements():
    with pytest.raises(InvalidInputError):
        SetFamily.of(2, [[1, 3]])
    with pytest.raises(InvalidInputError):
        SetFamily.of(0, [])


def test_family_keeps_duplicate_members_apart():
    fam = SetFamily.of(2, [[1, 2], [2, 1]])
    assert fam.size == 2
    assert fam.members[0] == fam.members[1]


def test_family_dict_round_trip():
    fam = SetFamily.of(3, [[3, 1], [2]])
    assert fam.to_dict() == {'n': 3, 'members': [[1, 3], [2]]}
    assert SetFamily.from_dict(fam.to_dict()) == fam


def test_from_dict_requires_fields():
    with pytest.raises(InvalidInputError):
        SetFamily.from_dict({'members': [[1]]})
    with pytest.raises(InvalidInputError):
        SetFamily.from_dict({'n': 1, 'members': [1]})


def test_marriage_condition_examples():
    assert satisfies_marriage_condition(SetFamily.of(2, [[1, 2], [1, 2]])) is True
    assert satisfies_marriage_condition(SetFamily.of(2, [[1, 2], [1, 2], [1, 2]])) is False
    assert satisfies_marriage_condition(SetFamily.of(1, [[1]])) is True


def test_marriage_condition_false_with_empty_member():
    fam = SetFamily.of(2, [[1], []])
    assert satisfies_marriage_condition(fam) is False
    assert marriage_condition_by_subsets(fam) is False


def test_find_transversal_examples():
    t = find_transversal(SetFamily.of(2, [[1, 2], [1, 2]]))
    assert sorted(t.values) == [1, 2]

    assert find_transversal(SetFamily.of(2, [[1, 2], [1, 2], [1, 2]])) is None

    t = find_transversal(SetFamily.of(3, [[2], [1, 2, 3]]))
    assert t.element(0) == 2
    assert t.element(1) in (1, 3)


def test_find_transversal_rejects_empty_member():
    with pytest.raises(EmptyMemberError) as exc:
        find_transversal(SetFamily.of(2, [[1], []]))
    assert exc.value.index == 2


def test_all_transversals_examples():
    assert [t.values for t in all_transversals(SetFamily.of(2, [[1, 2], [1, 2]]))] == [(1, 2), (2, 1)]
    assert [t.values for t in all_transversals(SetFamily.of(1, [[1]]))] == [(1,)]
    assert [t.values for t in all_transversals(SetFamily.of(3, [[1], [1, 2], [1, 2, 3]]))] == [(1, 2, 3)]


def test_all_transversals_respects_bound():
    fam = SetFamily.of(3, [[1, 2, 3]] * 3)
    with pytest.raises(OracleLimitError) as exc:
        all_transversals(fam, bound=2)
    assert exc.value.limit == 2
    assert exc.value.actual == 3


def test_count_transversals_stops_at_limit():
    fam = SetFamily.of(4, [[1, 2, 3, 4]] * 4)
    assert count_transversals(fam) == 24
    assert count_transversals(fam, limit=2) == 2


def test_transversal_validity():
    fam = SetFamily.of(2, [[1, 2], [2]])
    assert Transversal((1, 2)).is_valid_for(fam)
    assert not Transversal((2, 2)).is_valid_for(fam)
    assert not Transversal((1,)).is_valid_for(fam)
    with pytest.raises(InvalidInputError):
        Transversal((2, 1)).check(fam)


def test_matcher_reports_pairs():
    count, pairs = AugmentingMatcher(SetFamily.of(3, [[1, 2], [1], [3]])).get_maximum_matching_num()
    assert count == 3
    assert pairs == {0: 2, 1: 1, 2: 3}


def test_critical_block():
    assert is_critical_block(SetFamily.of(2, [[1], [1, 2]]))
    assert not is_critical_block(SetFamily.of(3, [[1], [1, 2]]))


@settings(max_examples=200, deadline=None)
@given(family_strategy(allow_empty=True))
def test_matching_agrees_with_subset_oracle(fam):
    assert satisfies_marriage_condition(fam) == marriage_condition_by_subsets(fam)


@settings(max_examples=100, deadline=None)
@given(family_strategy())
def test_found_transversal_is_valid(fam):
    t = find_transversal(fam)
    if t is None:
        assert count_transversals(fam) == 0
    else:
        assert t.is_valid_for(fam)
        assert t in all_transversals(fam)
