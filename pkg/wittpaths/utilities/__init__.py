from fractions import Fraction
from typing import NamedTuple, Union

Exact = Union[int, Fraction]


class ResultTuple(NamedTuple):
    """Container for a labelled exact result reported by a command."""

    label: str
    value: Union[Exact, str]


class WittPathsError(Exception):
    """General exception class for errors in wittpaths library."""


class ConsistencyError(WittPathsError):
    """Raised when an asserted integrality, sign or cross-route agreement fails."""


class EnumerationBoundError(WittPathsError):
    """Raised when an enumeration or series request exceeds its configured bound."""


def format_exact(value: Union[Exact, str]) -> str:
    """Render an exact value as an integer string or a `p/q` string in lowest terms.

    Args:
        value: integer, Fraction, or an already formatted string.

    Returns:
        String representation without any floating point conversion.

    Raises:
        TypeError: if value is a float, bool or other non-exact type.
    """
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
        raise TypeError(f"Cannot format {type(value).__name__} as an exact value.")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def require_integer(value: Exact, label: str, nonnegative: bool = True) -> int:
    """Convert an exact value to int, failing loudly if it is not integral.

    Args:
        value: value expected to be integral.
        label: quantity name used in the error message.
        nonnegative: also require value >= 0.

    Returns:
        value as a Python int.

    Raises:
        ConsistencyError: if value is not an integer, or negative when
            `nonnegative` is set.
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"{label} = {format_exact(value)} is not an integer.")
    if nonnegative and value < 0:
        raise ConsistencyError(f"{label} = {format_exact(value)} is negative.")
    return value.numerator
