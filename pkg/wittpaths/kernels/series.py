"""Truncated multivariate formal power series over exact rationals.

A :class:`TruncatedSeries` is a polynomial in z_1, ..., z_r with Fraction
coefficients, representing a power series modulo all monomials of total degree
greater than the degree bound D.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from types import MappingProxyType
from typing import (
    Callable,
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from wittpaths.kernels.numth import degree_vectors
from wittpaths.utilities import Exact

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Exponent = Tuple[int, ...]
Layer = Dict[Exponent, Fraction]


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class TruncatedSeries:
    """Immutable truncated power series in `num_vars` variables.

    Coefficients are stored sparsely; exact zeros and monomials of total degree
    above `degree_bound` are never stored.

    Attrs:
        num_vars: number of variables r.
        degree_bound: total degree bound D.
    """

    __slots__ = ("num_vars", "degree_bound", "_coefficients")

    def __init__(
        self,
        num_vars: int,
        degree_bound: int,
        coefficients: Optional[Mapping[Exponent, Exact]] = None,
    ) -> None:
        """Validate dimensions and store pruned coefficients."""
        if num_vars < 1:
            raise ValueError(f"Number of variables must be positive, got {num_vars}.")
        if degree_bound < 0:
            raise ValueError(f"Degree bound must be nonnegative, got {degree_bound}.")
        self.num_vars: int = num_vars
        self.degree_bound: int = degree_bound
        stored: Layer = {}
        for exponent, value in (coefficients or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != num_vars or min(exponent) < 0:
                raise ValueError(
                    f"Exponent {exponent} invalid for a series in {num_vars} variables."
                )
            if sum(exponent) > degree_bound or value == 0:
                continue
            stored[exponent] = Fraction(value)
        self._coefficients: Layer = stored

    @classmethod
    def _trusted(
        cls, num_vars: int, degree_bound: int, stored: Layer
    ) -> TruncatedSeries:
        """Wrap an already pruned coefficient dict without revalidating it."""
        series = cls.__new__(cls)
        series.num_vars = num_vars
        series.degree_bound = degree_bound
        series._coefficients = {e: c for e, c in stored.items() if c != 0}
        return series

    @classmethod
    def zero(cls, num_vars: int, degree_bound: int) -> TruncatedSeries:
        return cls(num_vars, degree_bound)

    @classmethod
    def one(cls, num_vars: int, degree_bound: int) -> TruncatedSeries:
        return cls(num_vars, degree_bound, {(0,) * num_vars: 1})

    @classmethod
    def monomial(
        cls,
        exponent: Sequence[int],
        num_vars: int,
        degree_bound: int,
        coefficient: Exact = 1,
    ) -> TruncatedSeries:
        return cls(num_vars, degree_bound, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, index: int, num_vars: int, degree_bound: int) -> TruncatedSeries:
        """Series z_{index+1}; `index` is zero based."""
        if not 0 <= index < num_vars:
            raise ValueError(f"Variable index {index} out of range for {num_vars}.")
        exponent = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls.monomial(exponent, num_vars, degree_bound)

    @property
    def coefficients(self) -> Mapping[Exponent, Fraction]:
        """Read-only view of the nonzero coefficients."""
        return MappingProxyType(self._coefficients)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        exponent = tuple(exponent)
        if len(exponent) != self.num_vars:
            raise ValueError(
                f"Exponent {exponent} invalid for {self.num_vars} variables."
            )
        return self._coefficients.get(exponent, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.num_vars)

    def graded_items(self) -> List[Tuple[Exponent, Fraction]]:
        """Nonzero terms ordered by total degree, then lexicographically."""
        return sorted(self._coefficients.items(), key=lambda t: (sum(t[0]), t[0]))

    def layer(self, degree: int) -> Layer:
        """Homogeneous component of the given total degree."""
        return {e: c for e, c in self._coefficients.items() if sum(e) == degree}

    def truncate(self, degree_bound: int) -> TruncatedSeries:
        """Series reduced to a smaller degree bound."""
        if degree_bound > self.degree_bound:
            raise ValueError(
                f"Cannot raise degree bound from {self.degree_bound} to {degree_bound}."
            )
        return TruncatedSeries(self.num_vars, degree_bound, self._coefficients)

    def substitute_powers(self, power: int) -> TruncatedSeries:
        """Substitute z_i -> z_i**power for every variable."""
        if power < 1:
            raise ValueError(f"Power must be positive, got {power}.")
        return TruncatedSeries(
            self.num_vars,
            self.degree_bound,
            {tuple(power * x for x in e): c for e, c in self._coefficients.items()},
        )

    def first_difference(self, other: TruncatedSeries) -> Optional[Exponent]:
        """First exponent in graded-lex order where the two series differ."""
        self._check_compatible(other)
        keys = set(self._coefficients) | set(other._coefficients)
        for exponent in sorted(keys, key=lambda e: (sum(e), e)):
            if self.coefficient(exponent) != other.coefficient(exponent):
                return exponent
        return None

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"Expected TruncatedSeries, got {type(other).__name__}.")
        if (self.num_vars, self.degree_bound) != (other.num_vars, other.degree_bound):
            raise ValueError(
                "Series dimensions differ: "
                f"({self.num_vars}, {self.degree_bound}) vs "
                f"({other.num_vars}, {other.degree_bound})."
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        result = dict(self._coefficients)
        for e, c in other._coefficients.items():
            result[e] = result.get(e, Fraction(0)) + c
        return TruncatedSeries._trusted(self.num_vars, self.degree_bound, result)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._trusted(
            self.num_vars,
            self.degree_bound,
            {e: -c for e, c in self._coefficients.items()},
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: Union[TruncatedSeries, Exact]) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            scalar = Fraction(other)
            return TruncatedSeries._trusted(
                self.num_vars,
                self.degree_bound,
                {e: scalar * c for e, c in self._coefficients.items()},
            )
        self._check_compatible(other)
        result: Layer = {}
        bound = self.degree_bound
        right = [(e, sum(e), c) for e, c in other._coefficients.items()]
        for ea, ca in self._coefficients.items():
            da = sum(ea)
            for eb, db, cb in right:
                if da + db > bound:
                    continue
                key = _add_exponents(ea, eb)
                result[key] = result.get(key, Fraction(0)) + ca * cb
        return TruncatedSeries._trusted(self.num_vars, bound, result)

    def __rmul__(self, other: Exact) -> TruncatedSeries:
        return self * other

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise TypeError("Series powers must be integers.")
        if exponent < 0:
            raise ValueError("Negative powers are not supported; use series_log/exp.")
        result = TruncatedSeries.one(self.num_vars, self.degree_bound)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.degree_bound == other.degree_bound
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash(
            (self.num_vars, self.degree_bound, frozenset(self._coefficients.items()))
        )

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.graded_items())

    def __len__(self) -> int:
        return len(self._coefficients)

    def __repr__(self) -> str:
        terms = ", ".join(f"{e}: {c}" for e, c in self.graded_items())
        return f"TruncatedSeries({self.num_vars}, {self.degree_bound}, {{{terms}}})"


def _layer_product(a: Layer, b: Layer) -> Layer:
    result: Layer = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _add_exponents(ea, eb)
            result[key] = result.get(key, Fraction(0)) + ca * cb
    return result


def _accumulate(target: Layer, source: Layer, scale: Fraction) -> None:
    for e, c in source.items():
        target[e] = target.get(e, Fraction(0)) + scale * c


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant term.

    Uses the degree-operator recurrence n h_n = sum_k k a_k h_(n-k) on
    homogeneous layers.

    Raises:
        ValueError: if the constant term of `a` is nonzero.
    """
    if a.constant_term != 0:
        raise ValueError("series_exp requires a zero constant term.")
    r, bound = a.num_vars, a.degree_bound
    a_layers = [a.layer(n) for n in range(bound + 1)]
    h_layers: List[Layer] = [{(0,) * r: Fraction(1)}]
    for n in range(1, bound + 1):
        layer: Layer = {}
        for k in range(1, n + 1):
            if a_layers[k] and h_layers[n - k]:
                product = _layer_product(a_layers[k], h_layers[n - k])
                _accumulate(layer, product, Fraction(k, n))
        h_layers.append(layer)
    merged: Layer = {}
    for layer in h_layers:
        merged.update(layer)
    return TruncatedSeries._trusted(r, bound, merged)


def series_log(h: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1.

    Uses b_n = h_n - (1/n) sum_{k<n} k b_k h_(n-k) on homogeneous layers.

    Raises:
        ValueError: if the constant term of `h` is not 1.
    """
    if h.constant_term != 1:
        raise ValueError("series_log requires constant term 1.")
    r, bound = h.num_vars, h.degree_bound
    h_layers = [h.layer(n) for n in range(bound + 1)]
    b_layers: List[Layer] = [{}]
    for n in range(1, bound + 1):
        layer: Layer = dict(h_layers[n])
        for k in range(1, n):
            if b_layers[k] and h_layers[n - k]:
                product = _layer_product(b_layers[k], h_layers[n - k])
                _accumulate(layer, product, Fraction(-k, n))
        b_layers.append(layer)
    merged: Layer = {}
    for layer in b_layers:
        merged.update(layer)
    return TruncatedSeries._trusted(r, bound, merged)


def binomial_factor(
    exponent: Sequence[int], sign: int, power: Exact, num_vars: int, degree_bound: int
) -> TruncatedSeries:
    """Expand (1 + sign * z^exponent) ** power by the binomial series.

    `power` may be any integer or Fraction; nonnegative integers give a finite
    expansion.
    """
    exponent = tuple(exponent)
    step = sum(exponent)
    if step < 1:
        raise ValueError("Factor exponent must be a nonzero vector.")
    power = Fraction(power)
    terms: Dict[Exponent, Fraction] = {}
    coefficient = Fraction(1)
    j = 0
    while j * step <= degree_bound and coefficient != 0:
        terms[tuple(j * x for x in exponent)] = coefficient * sign**j
        coefficient = coefficient * (power - j) / (j + 1)
        j += 1
    return TruncatedSeries._trusted(num_vars, degree_bound, terms)


def product_expand(
    exponent_fn: Callable[[Tuple[int, ...]], Exact],
    sign: int,
    num_vars: int,
    degree_bound: int,
    positive: bool = True,
) -> TruncatedSeries:
    """Expand the product over k of (1 + sign * z^k) ** exponent_fn(k), truncated.

    Args:
        exponent_fn: exponent of each factor, called with the raw exponent vector.
        sign: +1 or -1.
        num_vars: number of variables r.
        degree_bound: total degree bound D; factors with |k| > D are skipped.
        positive: if True k ranges over vectors with every entry >= 1, otherwise
            over all nonzero vectors.

    Returns:
        Product series, multiplied in ascending (|k|, lexicographic) order.
    """
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign}.")
    result = TruncatedSeries.one(num_vars, degree_bound)
    factors = 0
    for k in degree_vectors(num_vars, degree_bound, positive=positive):
        power = exponent_fn(k)
        if power == 0:
            continue
        result = result * binomial_factor(k, sign, power, num_vars, degree_bound)
        factors += 1
    log.debug(
        "Expanded %d factors in %d variables up to degree %d.",
        factors,
        num_vars,
        degree_bound,
    )
    return result
