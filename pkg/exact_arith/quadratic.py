"""The real quadratic field Q(sqrt5), exact.

Elements are ``a + b*sqrt5`` with rational ``a`` and ``b``. Every comparison
is decided on the rational coefficients, so nothing here ever rounds.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

from golden_app.exceptions import DivisionByZero, InvalidInput

from .rationals import RATIONAL_PATTERN, as_rational, format_rational, parse_rational

_QUAD_RE = re.compile(rf'^(?P<a>{RATIONAL_PATTERN})\+(?P<b>{RATIONAL_PATTERN})\*sqrt5$')


def _rational_sign(value):
    return (value > 0) - (value < 0)


@total_ordering
class QuadraticNumber:
    __slots__ = ('_a', '_b')

    def __init__(self, a=0, b=0):
        self._a = as_rational(a)
        self._b = as_rational(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @classmethod
    def coerce(cls, value) -> QuadraticNumber:
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise InvalidInput(f"not an element of Q(sqrt5): {value!r}")

    @classmethod
    def from_text(cls, text: str) -> QuadraticNumber:
        """Parse 'a+b*sqrt5', or a bare rational."""
        text = text.strip()
        match = _QUAD_RE.match(text)
        if match:
            return cls(parse_rational(match['a']), parse_rational(match['b']))
        return cls(parse_rational(text), 0)

    def __repr__(self) -> str:
        return f"QuadraticNumber({format_rational(self._a)!r}, {format_rational(self._b)!r})"

    def __str__(self) -> str:
        return f"{format_rational(self._a)}+{format_rational(self._b)}*sqrt5"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if isinstance(other, QuadraticNumber):
            return self._a == other.a and self._b == other.b
        return NotImplemented

    def __lt__(self, other) -> bool:
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return quad_sign(self - other) < 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return quad_add(self, QuadraticNumber.coerce(other))

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self._a, -self._b)

    def __pos__(self) -> QuadraticNumber:
        return self

    def __abs__(self) -> QuadraticNumber:
        return -self if quad_sign(self) < 0 else self

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return quad_add(self, -QuadraticNumber.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return quad_add(QuadraticNumber.coerce(other), -self)

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return quad_mul(self, QuadraticNumber.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, QuadraticNumber)):
            return NotImplemented
        return quad_mul(self, quad_inverse(QuadraticNumber.coerce(other)))

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return quad_mul(QuadraticNumber.coerce(other), quad_inverse(self))

    def __pow__(self, exponent: int) -> QuadraticNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return quad_inverse(self) ** -exponent
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = quad_mul(result, base)
            base = quad_mul(base, base)
            exponent >>= 1
        return result

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self._a, -self._b)

    def norm(self) -> Fraction:
        """a^2 - 5 b^2, the product with the conjugate."""
        return self._a * self._a - 5 * self._b * self._b


def quad_add(x: QuadraticNumber, y: QuadraticNumber) -> QuadraticNumber:
    return QuadraticNumber(x.a + y.a, x.b + y.b)


def quad_mul(x: QuadraticNumber, y: QuadraticNumber) -> QuadraticNumber:
    return QuadraticNumber(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a)


def quad_inverse(x: QuadraticNumber) -> QuadraticNumber:
    # the norm vanishes only at zero because sqrt5 is irrational
    norm = x.norm()
    if norm == 0:
        raise DivisionByZero("zero has no inverse in Q(sqrt5)")
    return QuadraticNumber(x.a / norm, -x.b / norm)


def quad_sign(x: QuadraticNumber) -> int:
    """Exact sign of a + b*sqrt5: -1, 0 or +1."""
    sign_a = _rational_sign(x.a)
    sign_b = _rational_sign(x.b)
    if sign_b == 0:
        return sign_a
    if sign_a == 0 or sign_a == sign_b:
        return sign_b
    # opposite signs: the larger of a^2 and 5 b^2 wins
    difference = x.a * x.a - 5 * x.b * x.b
    return sign_a if difference > 0 else sign_b


ZERO = QuadraticNumber(0, 0)
ONE = QuadraticNumber(1, 0)
SQRT5 = QuadraticNumber(0, 1)
PHI = QuadraticNumber(Fraction(1, 2), Fraction(1, 2))


def exact_sign(value) -> int:
    """Sign of an int, Fraction or QuadraticNumber."""
    if isinstance(value, QuadraticNumber):
        return quad_sign(value)
    return _rational_sign(value)


def as_exact(value):
    """Coerce to Fraction, or to QuadraticNumber when irrational."""
    if isinstance(value, QuadraticNumber):
        return value.a if value.is_rational else value
    if isinstance(value, str):
        return parse_exact(value)
    return as_rational(value)


def format_exact(value) -> str:
    """Rational text, or 'a+b*sqrt5' for irrational elements."""
    if isinstance(value, QuadraticNumber):
        if value.is_rational:
            return format_rational(value.a)
        return str(value)
    return format_rational(value)


def parse_exact(text: str):
    return as_exact(QuadraticNumber.from_text(text))


def parse_quad_pair(text: str) -> QuadraticNumber:
    """Parse 'a/b,c/d' as (a/b) + (c/d)*sqrt5."""
    parts = text.split(',')
    if len(parts) != 2:
        raise InvalidInput(f"expected a/b,c/d, got {text!r}")
    return QuadraticNumber(parse_rational(parts[0]), parse_rational(parts[1]))
