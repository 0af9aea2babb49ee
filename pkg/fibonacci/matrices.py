"""2x2 integer matrices and the cut-off matrix M = [[-1, 1], [1, 0]].

M sends the column (W, L) to (L - W, W), the rectangle left after cutting the
W x W square, so M^n (W, L) is the n-th rectangle of the process.
"""
from __future__ import annotations

from dataclasses import dataclass

from golden_app.exceptions import IndexOutOfRange

from .sequence import fib


@dataclass(frozen=True)
class IntMat2:
    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def identity(cls) -> IntMat2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: IntMat2) -> IntMat2:
        if not isinstance(other, IntMat2):
            return NotImplemented
        return mat_mul(self, other)

    def __str__(self) -> str:
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"

    def rows(self):
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, column):
        """Multiply the column (w, l) of exact scalars."""
        w, l = column
        return (self.m11 * w + self.m12 * l, self.m21 * w + self.m22 * l)


def mat_mul(x: IntMat2, y: IntMat2) -> IntMat2:
    return IntMat2(
        x.m11 * y.m11 + x.m12 * y.m21,
        x.m11 * y.m12 + x.m12 * y.m22,
        x.m21 * y.m11 + x.m22 * y.m21,
        x.m21 * y.m12 + x.m22 * y.m22,
    )


def det(x: IntMat2) -> int:
    return x.det()


def mat_m() -> IntMat2:
    return IntMat2(-1, 1, 1, 0)


def mat_power_closed(n: int) -> IntMat2:
    """M^n = (-1)^n [[f(n), -f(n-1)], [-f(n-1), f(n-2)]]."""
    if not isinstance(n, int) or n < 1:
        raise IndexOutOfRange(f"closed form needs n >= 1, got {n!r}")
    sign = -1 if n % 2 else 1
    return IntMat2(
        sign * fib(n),
        -sign * fib(n - 1),
        -sign * fib(n - 1),
        sign * fib(n - 2),
    )


def mat_power_iter(n: int) -> IntMat2:
    """M^n by repeated multiplication, independent of the closed form."""
    if not isinstance(n, int) or n < 0:
        raise IndexOutOfRange(f"power must be >= 0, got {n!r}")
    m = mat_m()
    result = IntMat2.identity()
    for _ in range(n):
        result = result @ m
    return result
