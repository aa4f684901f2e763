"""Signed class counts theta_+ and theta_- and the auxiliary functions G, P, H."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import NamedTuple

from wittpaths.counters.path_counts import symmetric_cache, theta, witt_F
from wittpaths.kernels.numth import (
    MultiDegree,
    MultiDegreeLike,
    as_multidegree,
    common_divisors,
    moebius,
)
from wittpaths.utilities import ConsistencyError, format_exact, require_integer

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


class SignConditions(NamedTuple):
    """Conditions under which positive and negative class counts coincide."""

    short: bool
    coprime: bool
    mixed_parity: bool
    all_odd: bool

    @property
    def holds(self) -> bool:
        return any(self)


def equal_sign_conditions(m: MultiDegreeLike) -> SignConditions:
    """Evaluate the four sufficient conditions for theta_+(m) = theta_-(m).

    Returns:
        Flags for N < 2r, coprime entries, mixed parity and all entries odd.
    """
    m = as_multidegree(m)
    parities = {v % 2 for v in m}
    return SignConditions(
        short=m.total < 2 * m.rank,
        coprime=m.gcd == 1,
        mixed_parity=len(parities) == 2,
        all_odd=parities == {1},
    )


@symmetric_cache
def witt_G(m: MultiDegree) -> Fraction:
    """Half of the Witt partition function F."""
    return witt_F(m) / 2


@symmetric_cache
def p_value(m: MultiDegree) -> Fraction:
    """Sum over even common divisors g of (mu(g)/g) G(m/g); zero unless all even."""
    if m.rank < 2:
        raise ValueError(f"p_value needs at least two entries, got {tuple(m)}.")
    if not m.all_even:
        return Fraction(0)
    return sum(
        (
            Fraction(moebius(g), g) * witt_G(m.divide(g))
            for g in common_divisors(m)
            if g % 2 == 0
        ),
        Fraction(0),
    )


@symmetric_cache
def h_value(m: MultiDegree) -> Fraction:
    """Witt partition function whose divisor transform is theta_+."""
    if m.rank < 2:
        raise ValueError(f"h_value needs at least two entries, got {tuple(m)}.")
    if not m.all_even:
        return witt_G(m)
    correction = sum(
        (Fraction(1, k) * p_value(m.divide(k)) for k in common_divisors(m)),
        Fraction(0),
    )
    return witt_G(m) - correction


@symmetric_cache
def theta_plus(m: MultiDegree) -> int:
    """Number of classes of positive nonperiodic paths.

    Computed from H over all common divisors and checked against the sum of G
    over odd common divisors. A single edge traversed once gives 2.

    Raises:
        ConsistencyError: if the two divisor sums disagree or are not a
            nonnegative integer.
    """
    if m.rank == 1:
        return 2 if m[0] == 1 else 0
    divisors = common_divisors(m)
    from_h = sum(
        (Fraction(moebius(g), g) * h_value(m.divide(g)) for g in divisors),
        Fraction(0),
    )
    from_g = sum(
        (Fraction(moebius(g), g) * witt_G(m.divide(g)) for g in divisors if g % 2),
        Fraction(0),
    )
    if from_h != from_g:
        raise ConsistencyError(
            f"theta_+{tuple(m)}: H divisor sum {format_exact(from_h)} differs from "
            f"odd G divisor sum {format_exact(from_g)}."
        )
    return require_integer(from_h, f"theta_+{tuple(m)}")


@symmetric_cache
def theta_minus(m: MultiDegree) -> int:
    """Number of classes of negative nonperiodic paths, theta - theta_+.

    Cross-checked against theta_+ when the entries are not all even, and
    against theta_+(m) - theta_+(m/2) when they are.

    Raises:
        ConsistencyError: if the routes disagree.
    """
    if m.rank == 1:
        return 0
    plus = theta_plus(m)
    value = require_integer(theta(m) - plus, f"theta_-{tuple(m)}")
    if m.all_even:
        expected = plus - theta_plus(m.divide(2))
    else:
        conditions = equal_sign_conditions(m)
        if not conditions.holds:
            raise ConsistencyError(f"No equal-sign condition holds for {tuple(m)}.")
        expected = plus
    if value != expected:
        raise ConsistencyError(
            f"theta_-{tuple(m)} = {value} disagrees with cross-check {expected}."
        )
    return value
