import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittpaths.kernels.numth import (
    MultiDegree,
    binomial_conv,
    bounded_vectors,
    common_divisors,
    compositions,
    degree_vectors,
    div_inverse,
    div_transform,
    moebius,
    stirling2,
)


class TestMultiDegree:
    def test_properties(self):
        m = MultiDegree((2, 4, 6))
        assert m.total == 12
        assert m.rank == 3
        assert m.all_even
        assert m.divide(2) == (1, 2, 3)
        assert MultiDegree((3, 1, 2)).sorted() == (1, 2, 3)

    def test_gcd_of_many_entries(self):
        assert MultiDegree((2, 4, 6)).gcd == 2
        assert MultiDegree((6, 10, 15)).gcd == 1
        assert MultiDegree((12, 18, 24, 30)).gcd == 6
        assert MultiDegree((7,)).gcd == 7

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            MultiDegree(())
        with pytest.raises(ValueError):
            MultiDegree((1, 0))
        with pytest.raises(TypeError):
            MultiDegree((1, 2.0))
        with pytest.raises(TypeError):
            MultiDegree((True, 2))

    def test_divide_requires_common_divisor(self):
        with pytest.raises(ValueError):
            MultiDegree((2, 3)).divide(2)

    def test_parse_strips_zeros(self):
        assert MultiDegree.parse("2,0,2") == (2, 2)
        assert MultiDegree.parse(" 3 ,1") == (3, 1)

    @pytest.mark.parametrize("text", ["", "a,b", "0,0", "1,-1", "1.5,2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            MultiDegree.parse(text)


@pytest.mark.parametrize(
    "g, expected",
    [(1, 1), (2, -1), (3, -1), (4, 0), (6, 1), (12, 0), (30, -1), (210, 1)],
)
def test_moebius_values(g, expected):
    assert moebius(g) == expected


def test_moebius_rejects_bad_input():
    with pytest.raises(ValueError):
        moebius(0)
    with pytest.raises(TypeError):
        moebius(2.0)


def test_moebius_divisor_sum():
    for n in range(1, 1001):
        total = sum(moebius(d) for d in range(1, n + 1) if n % d == 0)
        assert total == (1 if n == 1 else 0)


def test_common_divisors():
    assert common_divisors((4, 6)) == [1, 2]
    assert common_divisors((12, 18, 24)) == [1, 2, 3, 6]
    assert common_divisors((5,)) == [1, 5]
    assert common_divisors((3, 4)) == [1]


def test_binomial_conv_vanishes_outside_range():
    assert binomial_conv(4, 2) == 6
    assert binomial_conv(0, 0) == 1
    assert binomial_conv(2, 3) == 0
    assert binomial_conv(3, -1) == 0
    assert binomial_conv(-1, 0) == 0


def _surjections(n, r):
    return sum(1 for f in itertools.product(range(r), repeat=n) if len(set(f)) == r)


@pytest.mark.parametrize("n", range(1, 9))
def test_stirling2_counts_set_partitions(n):
    for r in range(1, min(n, 4) + 1):
        assert stirling2(n, r) * math.factorial(r) == _surjections(n, r)
    assert stirling2(n, n) == 1
    assert stirling2(n, n + 1) == 0


def test_stirling2_known_values():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(3, 4) == 0
    with pytest.raises(ValueError):
        stirling2(0, 1)


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []
    assert len(list(compositions(7, 3))) == math.comb(6, 2)
    with pytest.raises(ValueError):
        list(compositions(3, 0))


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=3),
    st.integers(min_value=-50, max_value=50),
)
def test_divisor_transform_round_trip(entries, seed):
    m = MultiDegree(entries)

    def f(v):
        return Fraction(seed * sum(v) + len(v), 1 + v[0])

    assert div_inverse(lambda v: div_transform(f, v), m) == f(m)
    assert div_transform(lambda v: div_inverse(f, v), m) == f(m)


def test_divisor_transform_inverts_period_decomposition():
    # Counting all words of length N over l letters by their primitive root
    # recovers l^N = sum over d | N of d * L(d).
    for letters in range(1, 6):
        for n in range(1, 13):

            def primitive(v, letters=letters):
                return div_transform(lambda w: Fraction(letters ** w[0], w[0]), v)

            value = primitive(MultiDegree((n,)))
            assert value.denominator == 1
            total = sum(
                d * primitive(MultiDegree((d,))) for d in range(1, n + 1) if n % d == 0
            )
            assert total == letters**n


def test_degree_vectors_order():
    assert degree_vectors(2, 2) == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert degree_vectors(2, 3, positive=True) == [(1, 1), (1, 2), (2, 1)]


def test_bounded_vectors():
    assert bounded_vectors((1, 2)) == [(1, 1), (1, 2)]
    assert bounded_vectors((1, 1), positive=False) == [(0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("length", range(1, 6))
def test_binomial_products_over_compositions(length):
    for alpha in range(length, 13):
        for parts in compositions(alpha, length):
            for n in range(alpha, 13):
                total = 0
                for k in compositions(n, length):
                    product = 1
                    for k_i, n_i in zip(k, parts):
                        product *= binomial_conv(k_i - 1, n_i - 1)
                    total += product
                assert total == binomial_conv(n - 1, alpha - 1)


def test_divisor_transform_examples():
    assert div_transform(lambda v: 0, (4, 2)) == 0
    assert div_transform(lambda v: Fraction(v[0], 7), (2, 3)) == Fraction(2, 7)
