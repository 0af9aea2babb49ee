import logging

from cli.base import JsonCommand, add_rectangle_arguments, rectangle_from_options, write_text
from exact_arith.quadratic import parse_exact
from render.serializers import tiling_to_dict, to_json
from tiling.paving import fibonacci_tiling, pave, pave_prefix, verify

logger = logging.getLogger(__name__)


class Command(JsonCommand):
    help = 'Pave a rectangle with squares by the spiral cut-off and write the tiling as JSON.'

    def add_arguments(self, parser):
        kinds = parser.add_subparsers(dest='kind', required=True)

        fib = kinds.add_parser('fib', help='the f(n) x f(n+1) Fibonacci rectangle')
        fib.add_argument('--n', type=int, required=True)
        fib.add_argument('--out', help='write the tiling here instead of stdout')

        rect = kinds.add_parser('rect', help='any rational rectangle')
        rect.add_argument('--width', required=True)
        rect.add_argument('--length', required=True)
        rect.add_argument('--normalize', action='store_true', help='swap width and length if needed')
        rect.add_argument('--out', help='write the tiling here instead of stdout')

        prefix = kinds.add_parser('prefix', help='the first k squares of a possibly infinite paving')
        add_rectangle_arguments(prefix)
        prefix.add_argument('--k', type=int, required=True)
        prefix.add_argument('--out', help='write the tiling here instead of stdout')

    def build(self, kind, out=None, **options):
        if kind == 'fib':
            tiling = fibonacci_tiling(options['n'])
        elif kind == 'rect':
            width, length = parse_exact(options['width']), parse_exact(options['length'])
            if options['normalize'] and width > length:
                width, length = length, width
            tiling = pave(width, length)
        else:
            tiling = pave_prefix(rectangle_from_options(options), options['k'])

        if out is None:
            return tiling_to_dict(tiling)
        write_text(out, to_json(tiling))
        logger.info(f"wrote {len(tiling.squares)} squares to {out}")
        return {'out': out, 'squares': len(tiling.squares), 'certified': verify(tiling).certified}
