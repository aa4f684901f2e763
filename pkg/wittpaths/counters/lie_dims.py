"""Generator dimensions of graded Lie algebras built from a Witt partition function.

Given a Witt partition function W, the graded dimensions are the Moebius
divisor transform of W, and the generator dimensions d(k) are the
coefficients of f = 1 - exp(-g) where g = sum_k W(k) z^k. Two independent
routes compute d(k): direct expansion over vector partitions of k, and
coefficient extraction from the truncated series.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from wittpaths.counters.path_counts import (
    WittFunctionKind,
    witt_F,
    witt_F_prime,
    witt_Fc,
)
from wittpaths.counters.sign_counts import h_value, witt_G
from wittpaths.kernels.numth import (
    MultiDegree,
    MultiDegreeLike,
    as_multidegree,
    bounded_vectors,
    degree_vectors,
    div_transform,
)
from wittpaths.kernels.series import TruncatedSeries, series_exp
from wittpaths.utilities import (
    ConsistencyError,
    EnumerationBoundError,
    Exact,
    format_exact,
)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Vector = Tuple[int, ...]

# Kinds whose generator dimensions are integers.
INTEGRAL_KINDS = (WittFunctionKind.F, WittFunctionKind.G, WittFunctionKind.H)


def _scaled_F(m: MultiDegree) -> Fraction:
    return Fraction(witt_F_prime(m))


_WITT_FUNCTIONS: Dict[WittFunctionKind, Callable[[MultiDegree], Fraction]] = {
    WittFunctionKind.F: witt_F,
    WittFunctionKind.F_PRIME: _scaled_F,
    WittFunctionKind.G: witt_G,
    WittFunctionKind.H: h_value,
    WittFunctionKind.F_C: witt_Fc,
}


def witt_partition_function(kind: WittFunctionKind) -> Callable[[Vector], Fraction]:
    """Witt partition function of the given kind on raw exponent vectors.

    The returned function is zero on vectors with a zero entry.
    """
    function = _WITT_FUNCTIONS[WittFunctionKind(kind)]

    def evaluate(k: Vector) -> Fraction:
        if min(k) < 1:
            return Fraction(0)
        return function(MultiDegree(k))

    return evaluate


def dimension(kind: WittFunctionKind, k: MultiDegreeLike) -> Fraction:
    """Graded dimension sum over g | k of (mu(g)/g) W(k/g).

    Kind F gives theta and kind H gives theta_+.
    """
    k = as_multidegree(k)
    return div_transform(witt_partition_function(kind), k)


def vector_partitions(
    k: Sequence[int], parts: Sequence[Vector]
) -> Iterator[List[Tuple[Vector, int]]]:
    """Multisets of vectors from `parts` summing to k, as (vector, multiplicity) lists.

    Multiplicities are chosen vector by vector with running-sum pruning.
    """
    target = tuple(k)
    parts = list(parts)

    def extend(index: int, remainder: Vector) -> Iterator[List[Tuple[Vector, int]]]:
        if not any(remainder):
            yield []
            return
        if index == len(parts):
            return
        vector = parts[index]
        limit = min(
            (rem // v for rem, v in zip(remainder, vector) if v > 0), default=0
        )
        for count in range(limit, -1, -1):
            rest = tuple(rem - count * v for rem, v in zip(remainder, vector))
            for tail in extend(index + 1, rest):
                yield ([(vector, count)] + tail) if count else tail

    yield from extend(0, target)


def _check_kind_rank(k: MultiDegree) -> None:
    if k.rank < 2:
        raise ValueError(f"Generator dimensions need r >= 2, got {tuple(k)}.")


def _integral(kind: WittFunctionKind, k: MultiDegree, value: Fraction) -> Fraction:
    if WittFunctionKind(kind) in INTEGRAL_KINDS and value.denominator != 1:
        raise ConsistencyError(
            f"Generator dimension d{tuple(k)} = {format_exact(value)} for kind "
            f"{WittFunctionKind(kind).value} is not an integer."
        )
    return value


def dims_faa(kind: WittFunctionKind, k: MultiDegreeLike) -> Fraction:
    """Generator dimension d(k) by expansion over vector partitions of k.

    Sums (-1)^(lambda+1) prod W(l_i)^a_i / a_i! over all multisets {l_i^a_i} of
    componentwise positive vectors with sum a_i l_i = k and lambda = sum a_i.

    Raises:
        ConsistencyError: if an integral kind yields a non-integer.
    """
    k = as_multidegree(k)
    _check_kind_rank(k)
    witt = witt_partition_function(kind)
    total = Fraction(0)
    for partition in vector_partitions(k, bounded_vectors(k)):
        size = sum(count for _, count in partition)
        term = Fraction((-1) ** (size + 1))
        for vector, count in partition:
            term *= witt(vector) ** count / math.factorial(count)
        total += term
    return _integral(kind, k, total)


def witt_series(
    kind: WittFunctionKind, num_vars: int, degree_bound: int
) -> TruncatedSeries:
    """Generating function g = sum over positive k, |k| <= D, of W(k) z^k."""
    witt = witt_partition_function(kind)
    return TruncatedSeries(
        num_vars,
        degree_bound,
        {v: witt(v) for v in degree_vectors(num_vars, degree_bound, positive=True)},
    )


def dims_series(
    kind: WittFunctionKind, k: MultiDegreeLike, degree_bound: int = 0
) -> Fraction:
    """Generator dimension d(k) as a coefficient of 1 - exp(-g).

    Args:
        kind: Witt partition function.
        k: multidegree.
        degree_bound: series degree bound; 0 means |k|.

    Raises:
        EnumerationBoundError: if |k| exceeds `degree_bound`.
        ConsistencyError: if an integral kind yields a non-integer.
    """
    k = as_multidegree(k)
    _check_kind_rank(k)
    bound = degree_bound or k.total
    if k.total > bound:
        raise EnumerationBoundError(
            f"|k| = {k.total} exceeds the series degree bound {bound}."
        )
    g = witt_series(kind, k.rank, bound)
    one = TruncatedSeries.one(k.rank, bound)
    f = one - series_exp(-g)
    return _integral(kind, k, f.coefficient(k))


def witt_from_dims(d: Callable[[Vector], Exact], k: MultiDegreeLike) -> Fraction:
    """Witt partition value from generator dimensions.

    Sums (|s|-1)!/s! prod d(v)^s_v over all multisets s of nonzero vectors
    v <= k with weighted sum k. `d` receives raw vectors, which may contain
    zero entries.
    """
    k = as_multidegree(k)
    total = Fraction(0)
    for partition in vector_partitions(k, bounded_vectors(k, positive=False)):
        size = sum(count for _, count in partition)
        term = Fraction(math.factorial(size - 1))
        for vector, count in partition:
            term *= Fraction(d(vector)) ** count / math.factorial(count)
        total += term
    return total
