import itertools
from fractions import Fraction

import pytest

from wittpaths.counters.lie_dims import (
    dimension,
    dims_faa,
    dims_series,
    vector_partitions,
    witt_from_dims,
    witt_partition_function,
    witt_series,
)
from wittpaths.counters.path_counts import (
    WittFunctionKind,
    theta,
    witt_Fc_closed,
)
from wittpaths.counters.sign_counts import theta_plus
from wittpaths.kernels.numth import bounded_vectors, compositions
from wittpaths.utilities import EnumerationBoundError

F, G, H = WittFunctionKind.F, WittFunctionKind.G, WittFunctionKind.H


@pytest.mark.parametrize(
    "kind, k, expected",
    [
        (F, (2, 2), 4),
        (F, (2, 3), 4),
        (F, (3, 3), 4),
        (G, (2, 2), 4),
        (G, (2, 3), 6),
        (G, (3, 3), 14),
        (H, (2, 2), 5),
        (H, (2, 3), 6),
        (H, (3, 3), 12),
        (H, (2, 4), 9),
        (G, (1, 1, 1), 8),
        (G, (1, 1, 2), 16),
    ],
)
def test_generator_dimensions(kind, k, expected):
    assert dims_faa(kind, k) == expected


@pytest.mark.parametrize("kind", [G, H])
@pytest.mark.parametrize(
    "k, expected",
    [
        ((1, 1, 1), 8),
        ((1, 1, 2), 16),
        ((1, 2, 2), 56),
        ((1, 1, 3), 24),
        ((1, 1, 4), 32),
        ((1, 2, 3), 128),
    ],
)
def test_three_edge_dimensions(kind, k, expected):
    for permutation in set(itertools.permutations(k)):
        assert dims_faa(kind, permutation) == expected


def test_two_edge_H_dimensions():
    for k in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (4, 1), (1, 5)]:
        assert dims_faa(H, k) == 2
    # H(2,3) - H(1,1) H(1,2) = 10 - 2 * 2
    assert dims_faa(H, (2, 3)) == dims_faa(H, (3, 2)) == 6
    assert dims_faa(H, (4, 2)) == 9


@pytest.mark.parametrize("kind, expected", [(F, 384), (G, 224), (H, 228)])
def test_generator_dimensions_two_triple(kind, expected):
    assert dims_faa(kind, (2, 2, 2)) == expected
    assert dims_series(kind, (2, 2, 2)) == expected


def test_two_edge_F_dimensions_are_constant():
    for k in [(1, 1), (1, 4), (2, 5), (4, 4), (3, 5)]:
        assert dims_faa(F, k) == 4


@pytest.mark.parametrize("kind", [F, G, H])
def test_expansion_and_series_agree(kind):
    for total in range(2, 9):
        for k in compositions(total, 2):
            assert dims_faa(kind, k) == dims_series(kind, k, degree_bound=8)
    for total in range(3, 7):
        for k in compositions(total, 3):
            assert dims_faa(kind, k) == dims_series(kind, k)


@pytest.mark.parametrize("kind", [F, G, H])
def test_dimensions_are_nonnegative_integers(kind):
    for total in range(2, 11):
        for k in compositions(total, 2):
            value = dims_faa(kind, k)
            assert value.denominator == 1
            assert value >= 0


def test_graded_dimensions():
    for k in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 1, 2), (2, 2, 2)]:
        assert dimension(F, k) == theta(k)
        assert dimension(G, k) == Fraction(theta(k), 2)
        assert dimension(H, k) == theta_plus(k)


def test_witt_partition_function_vanishes_on_zero_entries():
    h = witt_partition_function(H)
    assert h((2, 0)) == 0
    assert h((2, 2)) == 7


def test_witt_series_coefficients():
    g = witt_series(F, 2, 4)
    assert g.coefficient((1, 1)) == 4
    assert g.coefficient((2, 2)) == 12
    assert g.coefficient((2, 0)) == 0
    assert g.coefficient((3, 1)) == 4


def test_vector_partitions():
    partitions = list(vector_partitions((2, 2), bounded_vectors((2, 2))))
    assert sorted(partitions) == sorted([[((2, 2), 1)], [((1, 1), 2)]])
    unrestricted = list(vector_partitions((1, 1), bounded_vectors((1, 1), False)))
    assert len(unrestricted) == 2


def test_series_bound():
    with pytest.raises(EnumerationBoundError):
        dims_series(H, (3, 3), degree_bound=5)


def test_single_edge_rejected():
    with pytest.raises(ValueError):
        dims_faa(H, (3,))
    with pytest.raises(ValueError):
        dims_series(H, (3,))


@pytest.mark.parametrize("kind", [F, G, H])
def test_witt_from_dims_inverts_dimensions(kind):
    def d(v):
        return dims_faa(kind, v) if min(v) >= 1 else 0

    witt = witt_partition_function(kind)
    for k in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 1, 1), (2, 1, 2)]:
        assert witt_from_dims(d, k) == witt(k)


def test_free_generators_give_counterclockwise_function():
    def d(v):
        return 1 if sum(v) == 1 else 0

    for k in [(1,), (3,), (1, 1), (2, 3), (2, 2, 1)]:
        assert witt_from_dims(d, k) == witt_Fc_closed(k)


def test_fractional_kinds_are_allowed():
    assert dims_faa(WittFunctionKind.F_C, (2, 2)) == 1
    assert dims_faa(WittFunctionKind.F_PRIME, (1, 1)) == 8


@pytest.mark.parametrize("kind", [F, G, H])
def test_low_degree_expansions(kind):
    w = witt_partition_function(kind)
    assert dims_faa(kind, (1, 1)) == w((1, 1))
    assert dims_faa(kind, (2, 3)) == w((2, 3)) - w((1, 1)) * w((1, 2))
    assert dims_faa(kind, (3, 3)) == (
        w((3, 3))
        - w((1, 1)) * w((2, 2))
        - w((1, 2)) * w((2, 1))
        + w((1, 1)) ** 3 / 6
    )


def test_dimensions_supported_on_one_vector():
    c = Fraction(3)

    def d(v):
        return c if v == (1, 1) else 0

    assert witt_from_dims(d, (1, 1)) == c
    assert witt_from_dims(d, (2, 2)) == c**2 / 2
