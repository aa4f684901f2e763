"""Coefficientwise verification of product identities as truncated power series.

Each verifier expands both sides up to a total degree bound and compares them
in graded-lexicographic order. Failures are reported, never raised.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from time import monotonic
from typing import Callable, NamedTuple, Optional, Tuple

from wittpaths.counters.lie_dims import dimension, witt_series
from wittpaths.counters.path_counts import WittFunctionKind, witt_M
from wittpaths.counters.sign_counts import theta_minus, theta_plus
from wittpaths.kernels.numth import MultiDegree, degree_vectors
from wittpaths.kernels.series import TruncatedSeries, product_expand, series_exp
from wittpaths.utilities import Exact, format_exact

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Vector = Tuple[int, ...]


class Mismatch(NamedTuple):
    """First exponent where an identity fails, with both sides' coefficients.

    `rhs` is None when the failure is a non-integral or negative extracted value
    rather than a coefficient disagreement.
    """

    exponent: Vector
    lhs: Fraction
    rhs: Optional[Fraction]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check."""

    identity: str
    num_vars: int
    degree_bound: int
    passed: bool
    first_mismatch: Optional[Mismatch] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.passed != (self.first_mismatch is None):
            raise ValueError("A report passes exactly when it has no mismatch.")

    def summary(self) -> str:
        if self.passed:
            return f"{self.identity}: pass (r={self.num_vars}, D={self.degree_bound})"
        exponent, lhs, rhs = self.first_mismatch  # type: ignore[misc]
        right = "n/a" if rhs is None else format_exact(rhs)
        return (
            f"{self.identity}: fail at {exponent} "
            f"(lhs={format_exact(lhs)}, rhs={right}) {self.detail}".rstrip()
        )


@dataclass(frozen=True)
class Corruption:
    """Shift of one factor exponent, used to demonstrate verifier sensitivity.

    Attrs:
        multidegree: exponent vector whose factor is altered, zeros included.
        delta: amount added to the exponent.
        target: "plus" or "minus" for sign-split identities; ignored otherwise.
    """

    multidegree: Vector
    delta: int = 1
    target: str = "minus"

    def __post_init__(self) -> None:
        if self.target not in ("plus", "minus"):
            raise ValueError(f"Corruption target must be plus or minus: {self.target}.")

    def apply(self, k: Vector, value: Exact, target: str = "minus") -> Exact:
        if tuple(k) == tuple(self.multidegree) and target == self.target:
            return value + self.delta
        return value


def _check_vars(num_vars: int, degree_bound: int, minimum: int = 2) -> None:
    if num_vars < minimum:
        raise ValueError(f"Need at least {minimum} variables, got {num_vars}.")
    if degree_bound < 1:
        raise ValueError(f"Degree bound must be positive, got {degree_bound}.")


def _compare(
    identity: str,
    lhs: TruncatedSeries,
    rhs: TruncatedSeries,
    detail: str = "",
) -> VerificationReport:
    exponent = lhs.first_difference(rhs)
    if exponent is None:
        log.info("Identity %s verified up to degree %d.", identity, lhs.degree_bound)
        return VerificationReport(identity, lhs.num_vars, lhs.degree_bound, True)
    mismatch = Mismatch(exponent, lhs.coefficient(exponent), rhs.coefficient(exponent))
    log.warning("Identity %s fails at %s.", identity, exponent)
    return VerificationReport(
        identity, lhs.num_vars, lhs.degree_bound, False, mismatch, detail
    )


def _timed(identity: str) -> Callable:
    def decorator(func: Callable[..., VerificationReport]) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> VerificationReport:
            log.info("Verifying %s with arguments %s.", identity, args)
            start = monotonic()
            report = func(*args, **kwargs)
            log.debug("%s took %.3f s.", identity, monotonic() - start)
            return report

        return wrapper

    return decorator


def sherman_exponents(k: Vector) -> Tuple[int, int]:
    """Exponents (N_+, N_-) of the factors (1 + z^k) and (1 - z^k).

    Zero entries are stripped; a single edge gives (2, 0) when traversed once
    and (0, 0) otherwise.
    """
    m = MultiDegree.stripped(k)
    if m.rank == 1:
        return (2, 0) if m[0] == 1 else (0, 0)
    return theta_plus(m), theta_minus(m)


def sign_split_product(
    num_vars: int,
    degree_bound: int,
    positive: bool,
    corruption: Optional[Corruption] = None,
) -> TruncatedSeries:
    """Product of (1 + z^k)^N_+(k) (1 - z^k)^N_-(k) over k, truncated."""

    def plus(k: Vector) -> Exact:
        value = sherman_exponents(k)[0]
        return corruption.apply(k, value, "plus") if corruption else value

    def minus(k: Vector) -> Exact:
        value = sherman_exponents(k)[1]
        return corruption.apply(k, value, "minus") if corruption else value

    return product_expand(plus, 1, num_vars, degree_bound, positive) * product_expand(
        minus, -1, num_vars, degree_bound, positive
    )


@_timed("sherman")
def verify_sherman(
    num_loops: int, degree_bound: int, corruption: Optional[Corruption] = None
) -> VerificationReport:
    """Check prod over nonzero m of (1+z^m)^N_+ (1-z^m)^N_- = prod_j (1+z_j)^2."""
    _check_vars(num_loops, degree_bound)
    lhs = sign_split_product(num_loops, degree_bound, False, corruption)
    rhs = TruncatedSeries.one(num_loops, degree_bound)
    for index in range(num_loops):
        z = TruncatedSeries.variable(index, num_loops, degree_bound)
        rhs = rhs * (TruncatedSeries.one(num_loops, degree_bound) + z) ** 2
    return _compare("sherman", lhs, rhs)


@_timed("cancellation")
def verify_cancellation(
    num_vars: int, degree_bound: int, corruption: Optional[Corruption] = None
) -> VerificationReport:
    """Check prod over positive m of (1+z^m)^theta_+ (1-z^m)^theta_- = 1."""
    _check_vars(num_vars, degree_bound)
    lhs = sign_split_product(num_vars, degree_bound, True, corruption)
    return _compare("cancellation", lhs, TruncatedSeries.one(num_vars, degree_bound))


@_timed("plus-minus")
def verify_plus_minus_products(
    num_vars: int, degree_bound: int, corruption: Optional[Corruption] = None
) -> VerificationReport:
    """Check both sign-split products against exponentials of g(z) - g(z^2).

    With g the generating function of H, the positive product must equal
    exp(g(z) - g(z^2)) and the negative product exp(g(z^2) - g(z)).
    """
    _check_vars(num_vars, degree_bound)

    def plus(k: Vector) -> Exact:
        value = theta_plus(k)
        return corruption.apply(k, value, "plus") if corruption else value

    def minus(k: Vector) -> Exact:
        value = theta_minus(k)
        return corruption.apply(k, value, "minus") if corruption else value

    g = witt_series(WittFunctionKind.H, num_vars, degree_bound)
    difference = g - g.substitute_powers(2)
    plus_report = _compare(
        "plus-minus",
        product_expand(plus, 1, num_vars, degree_bound),
        series_exp(difference),
        detail="(positive product)",
    )
    if not plus_report.passed:
        return plus_report
    return _compare(
        "plus-minus",
        product_expand(minus, -1, num_vars, degree_bound),
        series_exp(-difference),
        detail="(negative product)",
    )


@_timed("gen-witt")
def verify_gen_witt(
    kind: WittFunctionKind,
    num_vars: int,
    degree_bound: int,
    corruption: Optional[Corruption] = None,
) -> VerificationReport:
    """Check prod over positive k of (1 - z^k)^dim(k) = exp(-g) = 1 - f.

    Also checks that every generator dimension d(k), the coefficient of f,
    is a nonnegative integer.
    """
    _check_vars(num_vars, degree_bound)
    kind = WittFunctionKind(kind)

    def graded_dimension(k: Vector) -> Exact:
        value = dimension(kind, k)
        return corruption.apply(k, value, corruption.target) if corruption else value

    identity = f"gen-witt[{kind.value}]"
    one_minus_f = series_exp(-witt_series(kind, num_vars, degree_bound))
    lhs = product_expand(graded_dimension, -1, num_vars, degree_bound)
    report = _compare(identity, lhs, one_minus_f)
    if not report.passed:
        return report
    for k in degree_vectors(num_vars, degree_bound, positive=True):
        d = -one_minus_f.coefficient(k)
        if d.denominator != 1 or d < 0:
            log.warning("Generator dimension d%s = %s is not admissible.", k, d)
            return VerificationReport(
                identity,
                num_vars,
                degree_bound,
                False,
                Mismatch(k, d, None),
                "(generator dimension not a nonnegative integer)",
            )
    return report


@_timed("witt-classical")
def verify_witt_classical(
    num_vars: int, degree_bound: int, corruption: Optional[Corruption] = None
) -> VerificationReport:
    """Check prod over nonzero m of (1 - z^m)^M(m) = 1 - z_1 - ... - z_r."""
    _check_vars(num_vars, degree_bound, minimum=1)

    def exponent(k: Vector) -> Exact:
        value = witt_M(MultiDegree.stripped(k))
        return corruption.apply(k, value, corruption.target) if corruption else value

    lhs = product_expand(exponent, -1, num_vars, degree_bound, positive=False)
    rhs = TruncatedSeries.one(num_vars, degree_bound)
    for index in range(num_vars):
        rhs = rhs - TruncatedSeries.variable(index, num_vars, degree_bound)
    return _compare("witt-classical", lhs, rhs)
