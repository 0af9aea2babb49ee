"""Shared pieces of the management commands.

Every command prints exactly one line of JSON on stdout. Rectangles are given
in one of four forms: --ratio p/q (L/W), --golden, --quad a/b,c/d (meaning
a/b + c/d*sqrt5, as L/W) or --rect W L.
"""
from pathlib import Path

import mpmath
from django.core.management.base import BaseCommand

from cutoff.dynamics import RectState
from exact_arith.quadratic import PHI, parse_exact, parse_quad_pair
from exact_arith.rationals import parse_rational
from golden_app.exceptions import InvalidInput, ParseError
from render.serializers import dumps
from render.svg import evaluate


class JsonCommand(BaseCommand):
    requires_system_checks = []

    def build(self, **options):
        raise NotImplementedError('subclasses of JsonCommand must provide a build() method')

    def handle(self, *args, **options):
        self.stdout.write(dumps(self.build(**options)))


def add_decimal_argument(parser):
    parser.add_argument(
        '--decimal', type=int, metavar='K',
        help='also show values to K significant digits',
    )


def decimal_text(value, digits):
    if digits < 1:
        raise InvalidInput(f"--decimal needs a positive digit count, got {digits}")
    return mpmath.nstr(evaluate(value, digits + 10), digits)


def add_rectangle_arguments(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--ratio', metavar='P/Q', help='rational aspect ratio L/W')
    group.add_argument('--golden', action='store_true', help='the golden ratio, exactly')
    group.add_argument('--quad', metavar='A/B,C/D', help='aspect ratio A/B + C/D*sqrt5')
    group.add_argument('--rect', nargs=2, metavar=('W', 'L'), help='width and length as exact scalars')
    parser.add_argument(
        '--normalize', action='store_true',
        help='swap width and length when the width is the longer side',
    )


def rectangle_from_options(options) -> RectState:
    if options.get('golden'):
        w, l = 1, PHI
    elif options.get('ratio'):
        w, l = 1, parse_rational(options['ratio'])
    elif options.get('quad'):
        w, l = 1, parse_quad_pair(options['quad'])
    else:
        w, l = (parse_exact(text) for text in options['rect'])
    if options.get('normalize') and w > l:
        w, l = l, w
    return RectState(w, l)


def read_text(path):
    try:
        return Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason} at byte {exc.start}") from exc
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc


def write_text(path, text):
    try:
        Path(path).write_text(text + '\n', encoding='utf-8', newline='\n')
    except OSError as exc:
        raise InvalidInput(f"cannot write {path}: {exc.strerror}") from exc
