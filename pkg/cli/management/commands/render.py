import logging

from cli.base import JsonCommand, read_text, write_text
from render.serializers import from_json
from render.svg import PALETTES, RenderOptions, needs_approximation, to_svg

logger = logging.getLogger(__name__)


class Command(JsonCommand):
    help = 'Draw a tiling JSON file as an SVG figure.'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='in_path', required=True, help='tiling JSON written by the tile command')
        parser.add_argument('--out', required=True, help='SVG file to write')
        parser.add_argument('--scale', type=int, help='pixels per unit after clearing denominators')
        parser.add_argument('--palette', choices=sorted(PALETTES))
        parser.add_argument('--stroke-width', type=int)

    def build(self, in_path, out, scale=None, palette=None, stroke_width=None, **options):
        tiling = from_json(read_text(in_path))
        opts = RenderOptions.from_settings(scale=scale, palette=palette, stroke_width=stroke_width)
        document = to_svg(tiling, opts)
        write_text(out, document.rstrip('\n'))
        logger.info(f"wrote {out}")
        return {
            'out': out,
            'elements': len(tiling.squares) + 1,
            'approximate': needs_approximation(tiling),
        }
