"""Square pavings of rectangles by the spiral cut-off process.

Frame: x grows rightward, y upward, the origin is the bottom-left corner and
the rectangle is [0, length] x [0, width] with the length horizontal.

Each cut removes the largest square of the current sub-rectangle. A cursor
cycles West, North, East, South: it moves to the first edge along which that
square can be cut (West/East when the sub-rectangle is wider than tall,
North/South when taller than wide), the square is cut flush against that
edge, and the cursor moves on by one. A square remainder is the last cut.
"""
from __future__ import annotations

import enum
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from cutoff.dynamics import RectState, orbit
from exact_arith.quadratic import QuadraticNumber, as_exact, exact_sign, format_exact
from fibonacci.sequence import fib
from golden_app.exceptions import InvalidDimensions, PatternFailsBeforeK

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlacedSquare:
    x: Fraction | QuadraticNumber
    y: Fraction | QuadraticNumber
    side: Fraction | QuadraticNumber
    index: int

    def __post_init__(self):
        for name in ('x', 'y', 'side'):
            object.__setattr__(self, name, as_exact(getattr(self, name)))
        if exact_sign(self.side) <= 0:
            raise InvalidDimensions(f"square {self.index} has side {format_exact(self.side)}")
        if exact_sign(self.x) < 0 or exact_sign(self.y) < 0:
            raise InvalidDimensions(f"square {self.index} starts outside the first quadrant")
        if self.index < 0:
            raise InvalidDimensions(f"negative placement index {self.index}")


@dataclass(frozen=True)
class Tiling:
    """A rectangle (width vertical, length horizontal) and its squares in cut order."""
    width: Fraction | QuadraticNumber
    length: Fraction | QuadraticNumber
    squares: tuple[PlacedSquare, ...] = field(default_factory=tuple)
    complete: bool = True

    def __post_init__(self):
        width, length = as_exact(self.width), as_exact(self.length)
        if exact_sign(width) <= 0 or exact_sign(length) <= 0:
            raise InvalidDimensions(
                f"rectangle sides must be positive, got {format_exact(width)} x {format_exact(length)}"
            )
        object.__setattr__(self, 'width', width)
        object.__setattr__(self, 'length', length)
        object.__setattr__(self, 'squares', tuple(self.squares))

    def sides(self):
        return [square.side for square in self.squares]

    def area_sum(self):
        return sum((square.side * square.side for square in self.squares), Fraction(0))


@dataclass(frozen=True)
class VerificationReport:
    containment: bool
    disjointness: bool
    area: bool
    duplicates: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.containment and self.disjointness and self.area

    def failed_checks(self):
        return [name for name in ('containment', 'disjointness', 'area') if not getattr(self, name)]


class Direction(enum.Enum):
    WEST = 'west'
    NORTH = 'north'
    EAST = 'east'
    SOUTH = 'south'


_CYCLE = list(Direction)


def _zero_like(*values):
    if any(isinstance(value, QuadraticNumber) for value in values):
        return QuadraticNumber(0, 0)
    return Fraction(0)


def _spiral_cuts(width, length):
    """Yield the squares of the spiral cut-off, possibly forever."""
    zero = _zero_like(width, length)
    left, bottom = zero, zero
    right, top = zero + length, zero + width
    cursor = 0
    for index in itertools.count():
        horizontal, vertical = right - left, top - bottom
        if horizontal == vertical:
            yield PlacedSquare(left, bottom, horizontal, index)
            return
        if horizontal > vertical:
            valid, side = (Direction.WEST, Direction.EAST), vertical
        else:
            valid, side = (Direction.NORTH, Direction.SOUTH), horizontal
        while _CYCLE[cursor] not in valid:
            cursor = (cursor + 1) % len(_CYCLE)
        direction = _CYCLE[cursor]
        if direction is Direction.WEST:
            yield PlacedSquare(left, bottom, side, index)
            left += side
        elif direction is Direction.EAST:
            yield PlacedSquare(right - side, bottom, side, index)
            right -= side
        elif direction is Direction.NORTH:
            yield PlacedSquare(left, top - side, side, index)
            top -= side
        else:
            yield PlacedSquare(left, bottom, side, index)
            bottom += side
        cursor = (cursor + 1) % len(_CYCLE)


def pave(width, length) -> Tiling:
    """Pave a rational rectangle completely; the cut-off ends after finitely many squares."""
    width, length = as_exact(width), as_exact(length)
    if isinstance(width, QuadraticNumber) or isinstance(length, QuadraticNumber):
        raise InvalidDimensions("pave needs rational sides; use pave_prefix for Q(sqrt5)")
    if width <= 0 or length < width:
        raise InvalidDimensions(f"need 0 < width <= length, got {format_exact(width)} x {format_exact(length)}")
    tiling = Tiling(width, length, tuple(_spiral_cuts(width, length)))
    logger.info(f"paved {format_exact(width)} x {format_exact(length)} with {len(tiling.squares)} squares")
    return tiling


def fibonacci_tiling(n: int) -> Tiling:
    """The f(n) x f(n+1) rectangle: sides f(n), ..., f(1), f(0)."""
    return pave(fib(n), fib(n + 1))


def pave_prefix(r: RectState, k: int) -> Tiling:
    """The first k squares of the paving of r, while the cut-off pattern still holds."""
    if k < 1:
        raise InvalidDimensions(f"need at least one square, got k = {k}")
    states = orbit(r, k - 1)
    if not states[-1].is_proper:
        raise PatternFailsBeforeK(len(states) - 1, k)
    squares = tuple(itertools.islice(_spiral_cuts(r.w, r.l), k))
    return Tiling(r.w, r.l, squares, complete=False)


def _overlap(a: PlacedSquare, b: PlacedSquare) -> bool:
    return (a.x < b.x + b.side and b.x < a.x + a.side
            and a.y < b.y + b.side and b.y < a.y + a.side)


def _disjoint(squares) -> bool:
    # sweep along x: only squares whose x-interval is still open can overlap
    active = []
    for square in sorted(squares, key=lambda s: s.x):
        active = [other for other in active if other.x + other.side > square.x]
        if any(_overlap(other, square) for other in active):
            return False
        active.append(square)
    return True


def verify(t: Tiling) -> VerificationReport:
    containment = all(
        s.x + s.side <= t.length and s.y + s.side <= t.width
        for s in t.squares
    )
    area_sum, area = t.area_sum(), t.width * t.length
    area_ok = area_sum == area if t.complete else area_sum <= area
    counts = Counter(t.sides())
    duplicates = {side: count for side, count in counts.items() if count > 1}
    report = VerificationReport(containment, _disjoint(t.squares), area_ok, duplicates)
    if not report.certified:
        logger.info(f"tiling {format_exact(t.width)} x {format_exact(t.length)} fails {report.failed_checks()}")
    return report
