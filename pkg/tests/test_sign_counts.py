import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittpaths.counters.path_counts import theta
from wittpaths.counters.sign_counts import (
    SignConditions,
    equal_sign_conditions,
    h_value,
    p_value,
    theta_minus,
    theta_plus,
    witt_G,
)
from wittpaths.kernels.numth import MultiDegree, compositions

multidegrees = st.lists(st.integers(min_value=1, max_value=5), min_size=2, max_size=3)


@pytest.mark.parametrize(
    "m, plus, minus",
    [
        ((1, 1), 2, 2),
        ((1, 2), 2, 2),
        ((1, 3), 2, 2),
        ((1, 4), 2, 2),
        ((1, 5), 2, 2),
        ((2, 2), 6, 4),
        ((2, 3), 10, 10),
        ((2, 4), 14, 12),
        ((3, 3), 28, 28),
        ((1, 1, 1), 8, 8),
        ((1, 1, 2), 16, 16),
        ((1, 2, 2), 56, 56),
        ((1, 1, 3), 24, 24),
        ((1, 1, 4), 32, 32),
        ((1, 2, 3), 128, 128),
        ((2, 2, 2), 256, 248),
    ],
)
def test_signed_class_counts(m, plus, minus):
    for permutation in set(itertools.permutations(m)):
        assert theta_plus(permutation) == plus
        assert theta_minus(permutation) == minus


def test_single_edge():
    assert theta_plus((1,)) == 2
    assert theta_minus((1,)) == 0
    assert theta_plus((3,)) == 0
    assert theta_minus((3,)) == 0


def test_auxiliary_functions():
    assert witt_G((2, 2)) == 6
    assert p_value((2, 2)) == -1
    assert p_value((2, 3)) == 0
    assert h_value((2, 2)) == 7
    assert h_value((2, 3)) == witt_G((2, 3))
    assert p_value((2, 2, 2)) == -4
    assert h_value((2, 2, 2)) == 260


def test_auxiliary_functions_need_two_entries():
    with pytest.raises(ValueError):
        p_value((2,))
    with pytest.raises(ValueError):
        h_value((2,))


@settings(max_examples=60, deadline=None)
@given(multidegrees)
def test_signed_counts_split_theta(entries):
    plus, minus = theta_plus(entries), theta_minus(entries)
    assert plus >= 0 and minus >= 0
    assert plus + minus == theta(entries)


def small_multidegrees(max_total=10):
    for r in (2, 3):
        for total in range(r, max_total + 1):
            yield from compositions(total, r)


def test_equal_counts_exactly_when_not_all_even():
    for entries in small_multidegrees():
        m = MultiDegree(entries)
        equal = theta_plus(m) == theta_minus(m)
        assert equal == (not m.all_even), m
        assert equal_sign_conditions(m).holds == (not m.all_even), m


def test_all_even_difference_is_halved_count():
    for entries in small_multidegrees():
        m = MultiDegree(entries)
        if m.all_even:
            assert theta_plus(m) - theta_minus(m) == theta_plus(m.divide(2)), m


def test_H_equals_G_unless_all_even():
    for entries in small_multidegrees():
        m = MultiDegree(entries)
        if not m.all_even:
            assert h_value(m) == witt_G(m)
            assert p_value(m) == Fraction(0)


@pytest.mark.parametrize(
    "m, expected",
    [
        ((1, 1), SignConditions(True, True, False, True)),
        ((2, 3), SignConditions(False, True, True, False)),
        ((3, 3), SignConditions(False, False, False, True)),
        ((2, 4), SignConditions(False, False, False, False)),
        ((2, 2, 3), SignConditions(False, True, True, False)),
    ],
)
def test_equal_sign_conditions(m, expected):
    assert equal_sign_conditions(m) == expected
