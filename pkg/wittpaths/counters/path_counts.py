"""Closed-form unsigned counters on bouquet graphs.

The Witt partition function F, its integral rescaling F', the class count
theta of nonperiodic closed non-backtracking paths, the counterclockwise
variant F_c and the classical Witt formula M. All counters are symmetric in
the entries of the multidegree, so results are memoized under the sorted
multidegree.
"""

from __future__ import annotations

import functools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from threading import Lock
from typing import Callable, Dict, Iterator, Tuple, TypeVar

from wittpaths.kernels.numth import (
    MultiDegree,
    MultiDegreeLike,
    as_multidegree,
    binomial_conv,
    common_divisors,
    moebius,
)
from wittpaths.utilities import ConsistencyError, require_integer

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

T = TypeVar("T")

_cache: Dict[Tuple[str, MultiDegree], object] = {}
_cache_lock = Lock()


def symmetric_cache(
    func: Callable[[MultiDegree], T]
) -> Callable[[MultiDegreeLike], T]:
    """Memoize a counter that is invariant under permutation of the entries.

    The wrapped function receives a validated MultiDegree; the cache is keyed
    by the sorted multidegree and guarded by a lock.
    """
    name = func.__qualname__

    @functools.wraps(func)
    def wrapper(m: MultiDegreeLike) -> T:
        m = as_multidegree(m)
        key = (name, m.sorted())
        with _cache_lock:
            if key in _cache:
                return _cache[key]  # type: ignore[return-value]
        value = func(key[1])
        with _cache_lock:
            _cache.setdefault(key, value)
        return value

    return wrapper


def clear_caches() -> None:
    """Drop every memoized counter value."""
    with _cache_lock:
        _cache.clear()
    _sequence_profile.cache_clear()
    log.debug("Counter caches cleared.")


class WittFunctionKind(Enum):
    """Selects the Witt partition function used for dimensions and identities."""

    F = "F"
    F_PRIME = "F_PRIME"
    G = "G"
    H = "H"
    F_C = "F_C"


@dataclass(frozen=True)
class CyclicSequence:
    """Edge sequence (j_1, ..., j_a) with cyclically distinct neighbours."""

    symbols: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.symbols) < 2:
            raise ValueError(f"Cyclic sequence needs length >= 2, got {self.symbols}.")
        symbols = self.symbols
        for current, following in zip(symbols, symbols[1:] + symbols[:1]):
            if current == following:
                raise ValueError(
                    f"Adjacent symbols must differ cyclically, got {self.symbols}."
                )

    @property
    def length(self) -> int:
        return len(self.symbols)

    def multiplicities(self, r: int) -> Tuple[int, ...]:
        """How many times each edge 1..r occurs in the sequence."""
        counts = Counter(self.symbols)
        return tuple(counts.get(i, 0) for i in range(1, r + 1))


def cyclic_tuples(r: int, a: int) -> Iterator[Tuple[int, ...]]:
    """Backtracking over length-a words on 1..r with cyclically distinct neighbours."""
    if a < 2:
        return
    word = [0] * a

    def extend(position: int) -> Iterator[Tuple[int, ...]]:
        for symbol in range(1, r + 1):
            if position > 0 and symbol == word[position - 1]:
                continue
            if position == a - 1 and symbol == word[0]:
                continue
            word[position] = symbol
            if position == a - 1:
                yield tuple(word)
            else:
                yield from extend(position + 1)

    yield from extend(0)


def cyclic_sequences(r: int, a: int) -> Iterator[CyclicSequence]:
    """Every cyclic sequence of length a over edges 1..r, in lexicographic order.

    Sequences need not use every edge. Nothing is emitted for a < 2.
    """
    if r < 2:
        raise ValueError(f"Cyclic sequences need at least two edges, got r={r}.")
    for symbols in cyclic_tuples(r, a):
        yield CyclicSequence(symbols)


@functools.lru_cache(maxsize=None)
def _sequence_profile(r: int, a: int) -> Dict[Tuple[int, ...], int]:
    """Number of cyclic sequences of length a per multiplicity vector t."""
    profile: Counter = Counter()
    for symbols in cyclic_tuples(r, a):
        counts = Counter(symbols)
        profile[tuple(counts.get(i, 0) for i in range(1, r + 1))] += 1
    log.debug("Cyclic sequence profile (r=%d, a=%d): %d classes.", r, a, len(profile))
    return dict(profile)


def rw_count(r: int, a: int) -> int:
    """Number of cyclic sequences of length a using all r edges.

    Evaluates sum_j (-1)^(r+j) C(r, j) (j-1)^a + (-1)^(a+r).
    """
    if r < 2 or a < 2:
        raise ValueError(f"rw_count expects r >= 2 and a >= 2, got ({r}, {a}).")
    total = sum(
        (-1) ** (r + j) * math.comb(r, j) * (j - 1) ** a for j in range(1, r + 1)
    )
    return total + (-1) ** (a + r)


def _sequence_sum(m: MultiDegree, weight: Callable[[int], Fraction]) -> Fraction:
    """Sum over a of weight(a) times the cyclic-sequence sum of prod C(m_c-1, t_c-1)."""
    total = Fraction(0)
    for a in range(m.rank, m.total + 1):
        inner = 0
        for t, count in _sequence_profile(m.rank, a).items():
            product = count
            for m_c, t_c in zip(m, t):
                product *= binomial_conv(m_c - 1, t_c - 1)
                if product == 0:
                    break
            inner += product
        if inner:
            total += weight(a) * inner
    return total


def _check_rank(m: MultiDegree, name: str) -> None:
    if m.rank < 2:
        raise ValueError(f"{name} needs at least two nonzero entries, got {tuple(m)}.")


@symmetric_cache
def witt_F(m: MultiDegree) -> Fraction:
    """Witt partition function F of a multidegree with r >= 2 entries.

    For r = 2 the double-binomial closed form with weights 4^a/a is used; for
    r >= 3 the weighted sum over cyclic edge sequences.

    Args:
        m: multidegree, already divided by any common divisor of interest.

    Returns:
        F(m) as an exact rational.

    Raises:
        ValueError: if m has fewer than two entries.
    """
    _check_rank(m, "witt_F")
    if m.rank == 2:
        m1, m2 = m
        return sum(
            (
                Fraction(4**a, a)
                * binomial_conv(m1 - 1, a - 1)
                * binomial_conv(m2 - 1, a - 1)
                for a in range(1, min(m1, m2) + 1)
            ),
            Fraction(0),
        )
    return _sequence_sum(m, lambda a: Fraction(2**a, a))


def witt_F_prime(m: MultiDegreeLike) -> int:
    """Number N * F(m) of words with multidegree m; always a positive integer."""
    m = as_multidegree(m)
    value = m.total * witt_F(m)
    result = require_integer(value, f"N*F{tuple(m)}")
    if result <= 0:
        raise ConsistencyError(f"N*F{tuple(m)} = {result} is not positive.")
    return result


@symmetric_cache
def theta(m: MultiDegree) -> int:
    """Number of classes of nonperiodic closed non-backtracking paths.

    A single edge gives 2 classes when traversed once and none otherwise.
    """
    if m.rank == 1:
        return 2 if m[0] == 1 else 0
    value = sum(
        (Fraction(moebius(g), g) * witt_F(m.divide(g)) for g in common_divisors(m)),
        Fraction(0),
    )
    return require_integer(value, f"theta{tuple(m)}")


@symmetric_cache
def witt_Fc(m: MultiDegree) -> Fraction:
    """Counterclockwise Witt partition function, summed over cyclic sequences.

    Same sum as :func:`witt_F` without the powers of two; it must agree with
    :func:`witt_Fc_closed`.
    """
    _check_rank(m, "witt_Fc")
    value = _sequence_sum(m, lambda a: Fraction(1, a))
    closed = witt_Fc_closed(m)
    if value != closed:
        raise ConsistencyError(
            f"F_c{tuple(m)} sequence sum {value} differs from closed form {closed}."
        )
    return value


def witt_Fc_closed(m: MultiDegreeLike) -> Fraction:
    """Closed form (1/N) N!/(m_1! ... m_r!) of the counterclockwise Witt function."""
    m = as_multidegree(m)
    denominator = m.total
    for m_i in m:
        denominator *= math.factorial(m_i)
    return Fraction(math.factorial(m.total), denominator)


@symmetric_cache
def witt_M(m: MultiDegree) -> int:
    """Classical multivariate Witt formula: number of nonperiodic necklaces."""
    value = sum(
        (
            Fraction(moebius(g), g) * witt_Fc_closed(m.divide(g))
            for g in common_divisors(m)
        ),
        Fraction(0),
    )
    return require_integer(value, f"M{tuple(m)}")
