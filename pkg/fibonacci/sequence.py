"""Fibonacci numbers with f(0) = f(1) = 1, their squares and their ratios.

The sequence is extended one step down with f(-1) = 0, the only value for
which the closed form of M^n holds at n = 1.
"""
import enum
import logging
from fractions import Fraction
from typing import NamedTuple

from exact_arith.quadratic import PHI, quad_sign
from golden_app.exceptions import IndexOutOfRange

logger = logging.getLogger(__name__)


def _check_index(n, lowest):
    if not isinstance(n, int) or n < lowest:
        raise IndexOutOfRange(f"Fibonacci index must be an integer >= {lowest}, got {n!r}")


def fib(n):
    _check_index(n, -1)
    previous, current = 0, 1  # f(-1), f(0)
    for _ in range(n + 1):
        previous, current = current, previous + current
    return previous


def fib_sequence(n):
    """[f(0), ..., f(n)]."""
    _check_index(n, 0)
    values = [1, 1]
    while len(values) <= n:
        values.append(values[-1] + values[-2])
    return values[:n + 1]


class SumOfSquares(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def sum_of_squares(n):
    """f(0)^2 + ... + f(n)^2 against f(n) * f(n+1)."""
    _check_index(n, 0)
    values = fib_sequence(n + 1)
    lhs = sum(value * value for value in values[:n + 1])
    rhs = values[n] * values[n + 1]
    return SumOfSquares(lhs, rhs, lhs == rhs)


def convergent(n):
    """f(n+1) / f(n)."""
    _check_index(n, 0)
    return Fraction(fib(n + 1), fib(n))


class BoundSide(enum.Enum):
    LOWER = 'lower'
    UPPER = 'upper'


class SandwichEntry(NamedTuple):
    value: Fraction
    side: BoundSide


def sandwich(n):
    """Convergents 0..n; even ones bound the golden ratio from below, odd ones from above."""
    _check_index(n, 0)
    return [
        SandwichEntry(convergent(k), BoundSide.LOWER if k % 2 == 0 else BoundSide.UPPER)
        for k in range(n + 1)
    ]


def sandwich_holds(entries):
    """True when lower < phi < upper for every entry, lowers rise and uppers fall."""
    lowers = [entry.value for entry in entries if entry.side is BoundSide.LOWER]
    uppers = [entry.value for entry in entries if entry.side is BoundSide.UPPER]
    if any(quad_sign(PHI - value) != 1 for value in lowers):
        return False
    if any(quad_sign(PHI - value) != -1 for value in uppers):
        return False
    rising = all(a < b for a, b in zip(lowers, lowers[1:]))
    falling = all(a > b for a, b in zip(uppers, uppers[1:]))
    if not (rising and falling):
        logger.info(f"sandwich of {len(entries)} entries is not monotone")
    return rising and falling
