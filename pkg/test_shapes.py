from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hallshell.configs import count_satisfying, configuration_count
from hallshell.errors import InvalidInputError, OracleLimitError
from hallshell.shapes import (
    SkewShape,
    Tableau,
    balanced_configuration,
    conjugate,
    corner_peeling_order,
    count_balanced,
    count_standard,
    hook,
    hook_family,
    hook_length,
    hook_length_formula,
    inner_corners,
    is_balanced,
    is_generalized_semistandard,
    is_generalized_standard,
    is_standard,
    is_standard_by_configuration,
    outer_corner_cells,
    partitions,
    skew_shapes,
    tableau_satisfies,
)
from hallshell.shelling import is_shellable, verify_shelling_order
from hallshell.words import Configuration, f0

SKEW = SkewShape((4, 3, 1), (2,))


@st.composite
def partition_strategy(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def test_shape_validation():
    with pytest.raises(InvalidInputError):
        SkewShape((2, 3))
    with pytest.raises(InvalidInputError):
        SkewShape((2, 1), (3,))
    with pytest.raises(InvalidInputError):
        SkewShape((2, 1), (2, 1))
    with pytest.raises(InvalidInputError):
        SkewShape(())


def test_shape_cells_are_row_major():
    assert SKEW.cells == ((1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1))
    assert SKEW.n == 6
    assert SKEW.index_of((2, 2)) == 4
    assert (1, 1) not in SKEW
    with pytest.raises(InvalidInputError):
        SKEW.index_of((1, 1))


def test_shape_dict_round_trip():
    data = {'lambda': [4, 3, 1], 'mu': [2]}
    assert SkewShape.from_dict(data) == SKEW
    assert SKEW.to_dict() == data
    assert SkewShape.from_dict({'lambda': [2, 1]}).mu == ()


def test_conjugate_and_partitions():
    assert conjugate((4, 2, 2)) == (3, 3, 1, 1)
    assert conjugate(conjugate((5, 3, 1))) == (5, 3, 1)
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_hook_length_examples():
    assert hook_length(SkewShape((5, 4, 3, 3), (2, 2, 1)), (2, 3)) == 4
    assert hook_length(SkewShape((1,)), (1, 1)) == 1
    shape = SkewShape((3, 2, 1))
    assert hook(shape, (1, 1)) == {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)}
    assert [hook_length(shape, c) for c in shape.cells] == [5, 3, 1, 3, 1, 1]


def test_hook_outside_lambda():
    with pytest.raises(InvalidInputError):
        hook(SkewShape((2, 1)), (2, 2))


def test_hook_family_examples():
    fam, t = hook_family(SkewShape((3, 2, 1)))
    assert [len(member) for member in fam.members] == [5, 3, 1, 3, 1, 1]
    assert t.values == (1, 2, 3, 4, 5, 6)
    assert is_shellable(fam)

    fam, _ = hook_family(SkewShape((1,)))
    assert fam.members == (frozenset({1}),)

    fam, _ = hook_family(SkewShape((6, 5, 4, 3, 2, 1), (2, 1)))
    assert fam.size == 18
    assert configuration_count(fam) == 52093125


def test_corners():
    assert inner_corners((4, 2, 2)) == {(1, 4), (3, 2)}
    assert inner_corners((1,)) == {(1, 1)}
    assert outer_corner_cells(SkewShape((3, 2, 1))) == {(1, 1)}
    assert outer_corner_cells(SkewShape((6, 5, 4, 3, 2, 1), (2, 1))) == {(1, 3), (2, 2), (3, 1)}


def test_outer_corners_have_no_upper_or_left_neighbour():
    for shape in skew_shapes(6):
        expected = {
            (i, j) for i, j in shape.cells
            if (i - 1, j) not in shape and (i, j - 1) not in shape
        }
        assert outer_corner_cells(shape) == expected, shape


def test_corner_peeling_order_is_a_shelling():
    for shape in skew_shapes(5):
        fam, _ = hook_family(shape)
        assert verify_shelling_order(fam, corner_peeling_order(shape)), shape


def test_skew_shapes_respect_limits():
    shapes = list(skew_shapes(3, max_size=4))
    assert shapes
    assert all(1 <= s.n <= 3 and sum(s.lam) <= 4 for s in shapes)
    assert SkewShape((2, 1), (1,)) in shapes


def test_balanced_example():
    shape = SkewShape((4, 3, 2))
    T = Tableau.from_rows(shape, [[4, 5, 8, 3], [6, 7, 9], [1, 2]])
    assert is_generalized_standard(T)
    assert not is_standard(T)
    assert is_balanced(T)


def test_balanced_configuration_values():
    assert balanced_configuration(SkewShape((2, 1))).demands == (2, 1, 1)
    with pytest.raises(InvalidInputError):
        balanced_configuration(SKEW)


def test_skew_fillings():
    standard = Tableau.from_rows(SKEW, [[None, None, 2, 3], [1, 5, 6], [4]])
    assert is_standard(standard)
    assert is_standard_by_configuration(standard)

    generalized = Tableau.from_rows(SKEW, [[None, None, 3, 5], [6, 1, 2], [4]])
    assert is_generalized_standard(generalized)
    assert not is_standard(generalized)

    semistandard = Tableau.from_rows(SKEW, [[None, None, 2, 3], [3, 1, 2], [2]])
    assert is_generalized_semistandard(semistandard)
    assert not is_generalized_standard(semistandard)


def test_tableau_rows_and_flat_lists_agree():
    rows = [[None, None, 2, 3], [1, 5, 6], [4]]
    flat = [None, None, 2, 3, 1, 5, 6, 4]
    assert Tableau.from_list(SKEW, rows) == Tableau.from_list(SKEW, flat)
    assert Tableau.from_list(SKEW, flat).to_rows() == rows


def test_tableau_rejects_filled_mu_cell():
    with pytest.raises(InvalidInputError):
        Tableau.from_rows(SKEW, [[1, None, 2, 3], [1, 5, 6], [4]])


def test_semistandard_tableau_satisfies_all_ones():
    shape = SkewShape((4, 3, 2))
    T = Tableau.from_rows(shape, [[1, 2, 3, 3], [1, 2, 3], [3, 3]])
    fam, _ = hook_family(shape)
    assert tableau_satisfies(T, f0(fam))
    assert not tableau_satisfies(T, Configuration((2,) + (1,) * 8))


def test_hook_length_formula_examples():
    assert hook_length_formula(SkewShape((3, 2, 1))) == 16
    assert count_standard(SkewShape((3, 2, 1))) == 16
    assert hook_length_formula(SkewShape((2, 2))) == 2
    assert count_standard(SkewShape((2, 2))) == 2
    assert hook_length_formula(SkewShape((4, 3, 2))) == 168
    with pytest.raises(InvalidInputError):
        hook_length_formula(SKEW)


def test_count_standard_skew_and_bound():
    # (2, 1)/(1) is two disconnected cells
    assert count_standard(SkewShape((2, 1), (1,))) == 2
    with pytest.raises(OracleLimitError):
        count_standard(SkewShape((3, 2, 1)), bound=5)


def test_balanced_counts():
    assert count_balanced(SkewShape((2, 2))) == 2
    assert count_balanced(SkewShape((3, 2, 1))) == 16


@settings(max_examples=60, deadline=None)
@given(partition_strategy())
def test_standard_count_matches_formula_and_f0(lam):
    shape = SkewShape(lam)
    fam, t = hook_family(shape)
    expected = hook_length_formula(shape)
    assert count_standard(shape) == expected
    assert count_satisfying(fam, t, f0(fam), shape.n) == expected


@settings(max_examples=40, deadline=None)
@given(partition_strategy(max_n=6))
def test_balanced_count_matches_standard_count(lam):
    shape = SkewShape(lam)
    assert count_balanced(shape) == count_standard(shape)
