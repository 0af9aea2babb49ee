"""SVG figures of tilings.

Rational tilings are drawn on an exact integer grid: every coordinate is
multiplied by the least common multiple of all denominators and by the
scale. Q(sqrt5) tilings are drawn at the plain scale by evaluating sqrt5 to
a fixed number of digits and rounding square edges to the nearest pixel
(ties to even); the document then carries an "approximate" comment.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from django.conf import settings
from django.template.loader import render_to_string

from exact_arith.quadratic import QuadraticNumber
from golden_app.exceptions import InvalidInput, VerificationFailed
from tiling.paving import Tiling, verify

logger = logging.getLogger(__name__)

PALETTES = {
    'classic': (
        '#e6194b', '#3cb44b', '#ffe119', '#4363d8', '#f58231', '#911eb4',
        '#46f0f0', '#f032e6', '#bcf60c', '#fabebe', '#008080', '#e6beff',
    ),
    'pastel': (
        '#fbb4ae', '#b3cde3', '#ccebc5', '#decbe4', '#fed9a6', '#ffffcc',
        '#e5d8bd', '#fddaec', '#f2f2f2', '#b3e2cd', '#fdcdac', '#cbd5e8',
    ),
    'grey': ('#f0f0f0', '#bdbdbd', '#969696', '#636363'),
}

BACKGROUND = '#ffffff'


@dataclass(frozen=True)
class RenderOptions:
    scale: int = 10
    palette: str = 'classic'
    stroke_width: int = 1

    def __post_init__(self):
        if not isinstance(self.scale, int) or self.scale < 1:
            raise InvalidInput(f"scale must be a positive integer, got {self.scale!r}")
        if not isinstance(self.stroke_width, int) or self.stroke_width < 1:
            raise InvalidInput(f"stroke width must be a positive integer, got {self.stroke_width!r}")
        if self.palette not in PALETTES:
            raise InvalidInput(f"unknown palette {self.palette!r}; choose from {', '.join(sorted(PALETTES))}")

    @classmethod
    def from_settings(cls, **overrides):
        """Options from PAVING_RENDER_* settings, with explicit overrides taking precedence."""
        values = {
            'scale': getattr(settings, 'PAVING_RENDER_SCALE', 10),
            'palette': getattr(settings, 'PAVING_RENDER_PALETTE', 'classic'),
            'stroke_width': getattr(settings, 'PAVING_RENDER_STROKE_WIDTH', 1),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    @property
    def colors(self):
        return PALETTES[self.palette]


def sqrt5_digits():
    return getattr(settings, 'PAVING_SQRT5_DIGITS', 50)


def evaluate(value, digits=None):
    """mpmath value of an exact scalar, with sqrt5 taken to the given digits."""
    digits = digits or sqrt5_digits()
    with mpmath.workdps(digits):
        if isinstance(value, QuadraticNumber):
            a, b = value.a, value.b
            return (mpmath.mpf(a.numerator) / a.denominator
                    + mpmath.mpf(b.numerator) / b.denominator * mpmath.sqrt(5))
        value = Fraction(value)
        return mpmath.mpf(value.numerator) / value.denominator


def _coordinates(tiling: Tiling):
    values = [tiling.width, tiling.length]
    for s in tiling.squares:
        values += [s.x, s.y, s.side]
    return values


def needs_approximation(tiling: Tiling) -> bool:
    """True when some coordinate lies outside Q and has to be rounded to pixels."""
    return any(isinstance(v, QuadraticNumber) for v in _coordinates(tiling))


class _PixelGrid:
    """Maps model coordinates to whole pixels."""

    def __init__(self, tiling: Tiling, scale: int):
        values = _coordinates(tiling)
        self.approximate = needs_approximation(tiling)
        if self.approximate:
            self.factor = scale
        else:
            self.factor = math.lcm(*(Fraction(v).denominator for v in values)) * scale
        self.digits = sqrt5_digits()

    def __call__(self, value) -> int:
        if not self.approximate:
            pixels = Fraction(value) * self.factor
            return pixels.numerator
        with mpmath.workdps(self.digits):
            return int(mpmath.nint(evaluate(value, self.digits) * self.factor))


def to_svg(t: Tiling, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions.from_settings()
    report = verify(t)
    if not report.certified:
        raise VerificationFailed(report)

    grid = _PixelGrid(t, opts.scale)
    width, height = grid(t.length), grid(t.width)
    colors = opts.colors
    squares = []
    for s in t.squares:
        left, right = grid(s.x), grid(s.x + s.side)
        # y points down in SVG
        top, bottom = grid(t.width - s.y - s.side), grid(t.width - s.y)
        squares.append({
            'x': left,
            'y': top,
            'width': right - left,
            'height': bottom - top,
            'fill': colors[s.index % len(colors)],
        })

    document = render_to_string('render/tiling.svg', {
        'width': width,
        'height': height,
        'background': BACKGROUND,
        'squares': squares,
        'stroke_width': opts.stroke_width,
        'approximate': grid.approximate,
        'digits': grid.digits,
    })
    logger.info(f"rendered {len(squares)} squares on a {width} x {height} canvas")
    return document
