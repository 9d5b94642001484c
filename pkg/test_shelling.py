import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hallshell import shelling
from hallshell.configs import m_range
from hallshell.errors import HypothesisError, InvalidInputError, OracleLimitError
from hallshell.family import SetFamily, Transversal, count_transversals, find_transversal
from hallshell.shapes import SkewShape, hook_family
from hallshell.shelling import (
    ShellingOrder,
    has_unique_transversal,
    is_shellable,
    reverse_order,
    shelling_order,
    shelling_order_exhaustive,
    shelling_order_from_witness,
    unique_element_set,
    verify_shelling_order,
)
from hallshell.verify import random_shellable
from hallshell.words import SurjectiveWord, f1, satisfies, surjections

from test_family import family_strategy

CHAIN = SetFamily.of(3, [[1], [1, 2], [1, 2, 3]])


def test_verify_shelling_order_examples():
    assert verify_shelling_order(CHAIN, ShellingOrder((1, 2, 3)))
    assert not verify_shelling_order(CHAIN, ShellingOrder((3, 2, 1)))
    assert verify_shelling_order(SetFamily.of(1, [[1]]), ShellingOrder((1,)))


def test_verify_shelling_order_rejects_non_permutation():
    with pytest.raises(InvalidInputError):
        verify_shelling_order(CHAIN, ShellingOrder((1, 1, 2)))


def test_shelling_order_examples():
    assert shelling_order(SetFamily.of(2, [[1, 2], [1, 2]])) is None
    assert shelling_order(SetFamily.of(1, [[1]])) == ShellingOrder((1,))

    fam, _ = hook_family(SkewShape((3, 2, 1)))
    order = shelling_order(fam)
    assert order is not None
    assert verify_shelling_order(fam, order)


def test_is_shellable_examples():
    assert is_shellable(SetFamily.of(2, [[1, 2], [1, 2]])) is False
    assert is_shellable(CHAIN) is True
    assert is_shellable(SetFamily.of(2, [[2], [1, 2]])) is True


def test_unique_element_set_examples():
    shape = SkewShape((3, 2, 1))
    fam, _ = hook_family(shape)
    assert {shape.cell_at(x) for x in unique_element_set(fam)} == {(1, 1)}

    shape = SkewShape((6, 5, 4, 3, 2, 1), (2, 1))
    fam, _ = hook_family(shape)
    assert {shape.cell_at(x) for x in unique_element_set(fam)} == {(1, 3), (2, 2), (3, 1)}

    assert unique_element_set(SetFamily.of(2, [[1, 2], [1, 2]])) == frozenset()


def test_unique_element_set_counts_duplicate_members():
    assert unique_element_set(SetFamily.of(2, [[1], [1], [2]])) == frozenset({2})


def test_exhaustive_bound():
    with pytest.raises(OracleLimitError):
        shelling_order_exhaustive(SetFamily.of(3, [[1]] * 3), bound=2)


def test_reverse_order():
    assert reverse_order(ShellingOrder((2, 3, 1))) == ShellingOrder((1, 3, 2))


def test_witness_examples():
    assert shelling_order_from_witness(
        SetFamily.of(1, [[1]]), Transversal((1,)), SurjectiveWord(1, (1,))
    ) == ShellingOrder((1,))

    order = shelling_order_from_witness(CHAIN, Transversal((1, 2, 3)), SurjectiveWord(3, (1, 2, 3)))
    assert order == ShellingOrder((1, 2, 3))


def test_witness_from_brute_force_search():
    fam, t = hook_family(SkewShape((2, 1)))
    witnesses = [
        SurjectiveWord(3, w) for w in surjections(3, 3)
        if satisfies(SurjectiveWord(3, w), fam, t, f1(fam))
    ]
    assert witnesses
    for w in witnesses:
        assert verify_shelling_order(fam, shelling_order_from_witness(fam, t, w))


def test_witness_must_satisfy_f1():
    with pytest.raises(HypothesisError):
        shelling_order_from_witness(CHAIN, Transversal((1, 2, 3)), SurjectiveWord(3, (3, 2, 1)))


@settings(max_examples=300, deadline=None)
@given(family_strategy(max_n=6, max_size=6))
def test_shellable_iff_unique_transversal(fam):
    assert is_shellable(fam) == has_unique_transversal(fam)
    assert has_unique_transversal(fam) == (count_transversals(fam) == 1)


@settings(max_examples=200, deadline=None)
@given(family_strategy(max_n=5, max_size=5))
def test_greedy_matches_exhaustive(fam):
    greedy = shelling_order(fam)
    exhaustive = shelling_order_exhaustive(fam)
    assert (greedy is None) == (exhaustive is None)
    if greedy is not None:
        assert verify_shelling_order(fam, greedy)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=9), st.integers(min_value=0, max_value=2**32 - 1))
def test_square_shellable_family_has_a_unique_element(n, seed):
    fam = random_shellable(np.random.default_rng(seed), n)
    assert unique_element_set(fam) != frozenset()


@settings(max_examples=200, deadline=None)
@given(family_strategy(max_n=5, max_size=5))
def test_unique_element_exists_whenever_square_and_shellable(fam):
    if fam.size == fam.n and is_shellable(fam):
        assert unique_element_set(fam) != frozenset()


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=2**32 - 1))
def test_every_f1_witness_gives_a_shelling(n, seed):
    fam = random_shellable(np.random.default_rng(seed), n)
    t = find_transversal(fam)
    lower, upper = m_range(fam)
    found = 0
    for m in range(lower, upper + 1):
        for values in surjections(n, m):
            w = SurjectiveWord(m, values)
            if satisfies(w, fam, t, f1(fam)):
                found += 1
                assert verify_shelling_order(fam, shelling_order_from_witness(fam, t, w)), values
    assert found >= 1


def test_witness_order_failing_verification_is_an_internal_error(monkeypatch):
    monkeypatch.setattr(shelling, 'verify_shelling_order', lambda fam, order: False)
    with pytest.raises(RuntimeError):
        shelling_order_from_witness(CHAIN, Transversal((1, 2, 3)), SurjectiveWord(3, (1, 2, 3)))
