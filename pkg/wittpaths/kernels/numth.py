"""Number-theoretic and combinatorial primitives shared by all counters.

Contains the :class:`MultiDegree` grading type, the Moebius function, divisor
lattices of multidegrees, binomials with a vanishing convention, Stirling
numbers of the second kind, compositions, the divisor transform pair used for
Moebius inversion over multidegrees, and lattice-box enumeration of exponent
vectors.
"""

from __future__ import annotations

import functools
import logging
import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np
from sympy import factorint

from wittpaths.utilities import Exact

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class MultiDegree(tuple):
    """Vector (m_1, ..., m_r) of edge multiplicities, all entries strictly positive.

    Zero entries are rejected here; use :meth:`stripped` at the API boundary to
    drop them first.
    """

    def __new__(cls, entries: Iterable[int]) -> MultiDegree:
        values = tuple(entries)
        if len(values) == 0:
            raise ValueError("MultiDegree needs at least one entry.")
        for value in values:
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(
                    f"MultiDegree entries must be integers, got {type(value).__name__}."
                )
            if value < 1:
                raise ValueError(f"MultiDegree entries must be positive, got {values}.")
        return super().__new__(cls, (int(v) for v in values))

    @classmethod
    def stripped(cls, entries: Iterable[int]) -> MultiDegree:
        """Build a MultiDegree after removing zero entries.

        Raises:
            ValueError: if no nonzero entry remains or an entry is negative.
        """
        values = tuple(entries)
        nonzero = tuple(v for v in values if v != 0)
        if not nonzero:
            raise ValueError(f"Multidegree {values} has no nonzero entry.")
        if len(nonzero) != len(values):
            log.debug("Stripped zero entries from %s.", values)
        return cls(nonzero)

    @classmethod
    def parse(cls, text: str) -> MultiDegree:
        """Parse a comma-separated list such as ``"2,0,2"``, stripping zeros."""
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(
                f"Multidegree `{text}` must be a comma-separated list of integers."
            ) from None
        return cls.stripped(values)

    @property
    def total(self) -> int:
        """Total degree N = m_1 + ... + m_r."""
        return sum(self)

    @property
    def rank(self) -> int:
        """Number of entries r."""
        return len(self)

    @property
    def all_even(self) -> bool:
        return all(v % 2 == 0 for v in self)

    @property
    def gcd(self) -> int:
        """Greatest common divisor of the entries."""
        return functools.reduce(math.gcd, self)

    def divide(self, g: int) -> MultiDegree:
        """Return m/g; g must divide every entry."""
        if g < 1 or any(v % g for v in self):
            raise ValueError(f"{g} is not a common divisor of {tuple(self)}.")
        return MultiDegree(v // g for v in self)

    def sorted(self) -> MultiDegree:
        return MultiDegree(sorted(self))

    def __repr__(self) -> str:
        return f"MultiDegree({tuple(self)})"


MultiDegreeLike = Union[MultiDegree, Sequence[int]]


def as_multidegree(m: MultiDegreeLike) -> MultiDegree:
    """Return m as a MultiDegree, validating plain sequences."""
    if isinstance(m, MultiDegree):
        return m
    return MultiDegree(m)


def moebius(g: int) -> int:
    """Moebius function of a positive integer.

    Args:
        g: positive integer.

    Returns:
        +1 for g = 1, 0 if a squared prime divides g, (-1)^q for a product of q
        distinct primes.

    Raises:
        TypeError: if g is not an integer.
        ValueError: if g < 1.
    """
    if isinstance(g, bool) or not isinstance(g, int):
        raise TypeError(f"moebius expects an integer, got {type(g).__name__}.")
    if g < 1:
        raise ValueError(f"moebius is defined for positive integers, got {g}.")
    exponents = factorint(g)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def common_divisors(m: MultiDegreeLike) -> List[int]:
    """Ascending list of positive integers dividing every entry of m."""
    m = as_multidegree(m)
    gcd = m.gcd
    return [d for d in range(1, gcd + 1) if gcd % d == 0]


def binomial_conv(n: int, k: int) -> int:
    """Binomial coefficient that vanishes outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling2(n: int, r: int) -> int:
    """Stirling number of the second kind from the alternating-sum formula.

    Args:
        n: size of the set, n >= 1.
        r: number of blocks, r >= 1.

    Returns:
        (1/r!) * sum_j (-1)^(r-j) C(r, j) j^n, which is 0 when r > n.
    """
    if n < 1 or r < 1:
        raise ValueError(f"stirling2 expects positive arguments, got ({n}, {r}).")
    if r > n:
        return 0
    total = sum((-1) ** (r - j) * math.comb(r, j) * j**n for j in range(r + 1))
    return total // math.factorial(r)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Generate ordered vectors of `parts` positive integers summing to `total`.

    Vectors are emitted in lexicographic order; nothing is emitted when
    total < parts.
    """
    if parts < 1:
        raise ValueError(f"Number of parts must be positive, got {parts}.")
    if total < parts:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def div_transform(f: Callable[[MultiDegree], Exact], m: MultiDegreeLike) -> Fraction:
    """Moebius divisor transform: sum over d | m of (mu(d)/d) f(m/d)."""
    m = as_multidegree(m)
    return sum(
        (Fraction(moebius(d), d) * f(m.divide(d)) for d in common_divisors(m)),
        Fraction(0),
    )


def div_inverse(g: Callable[[MultiDegree], Exact], m: MultiDegreeLike) -> Fraction:
    """Inverse of :func:`div_transform`: sum over d | m of (1/d) g(m/d)."""
    m = as_multidegree(m)
    return sum(
        (Fraction(1, d) * g(m.divide(d)) for d in common_divisors(m)), Fraction(0)
    )


def box_vectors(bounds: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Every integer vector v with 0 <= v_i <= bounds_i, in lexicographic order."""
    for index in np.ndindex(*(b + 1 for b in bounds)):
        yield tuple(int(i) for i in index)


def degree_vectors(
    num_vars: int, degree_bound: int, positive: bool = False
) -> List[Tuple[int, ...]]:
    """Nonzero exponent vectors of total degree <= degree_bound.

    Args:
        num_vars: vector length r.
        degree_bound: maximal total degree D.
        positive: if True only vectors with every entry >= 1 are returned.

    Returns:
        Vectors sorted by total degree, then lexicographically.
    """
    low = 1 if positive else 0
    vectors = [
        v
        for v in box_vectors((degree_bound,) * num_vars)
        if 0 < sum(v) <= degree_bound and min(v) >= low
    ]
    return sorted(vectors, key=lambda v: (sum(v), v))


def bounded_vectors(k: Sequence[int], positive: bool = True) -> List[Tuple[int, ...]]:
    """Nonzero vectors componentwise <= k, ordered by total degree then lexically."""
    low = 1 if positive else 0
    vectors = [v for v in box_vectors(k) if any(v) and min(v) >= low]
    return sorted(vectors, key=lambda v: (sum(v), v))
