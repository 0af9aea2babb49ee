"""Rational scalars: text form and parsing.

``Rational`` is :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator.
"""
import re
from fractions import Fraction

from golden_app.exceptions import InvalidInput

Rational = Fraction

RATIONAL_PATTERN = r'-?\d+(?:/\d+)?'
_RATIONAL_RE = re.compile(rf'^{RATIONAL_PATTERN}$')


def as_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInput(f"not an exact rational: {value!r}")


def format_rational(value):
    """'p/q' reduced, or 'p' when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """Parse the strict 'p' or 'p/q' form; decimals are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise InvalidInput(f"expected p or p/q, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InvalidInput(f"zero denominator in {text!r}") from None
