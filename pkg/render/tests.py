import json
import re
from fractions import Fraction

import mpmath
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st

from cutoff.dynamics import RectState
from exact_arith.quadratic import PHI
from golden_app.exceptions import InvalidInput, InvariantViolation, ParseError, VerificationFailed
from tiling.paving import PlacedSquare, Tiling, fibonacci_tiling, pave, pave_prefix

from .serializers import from_json, to_json
from .svg import PALETTES, RenderOptions, evaluate, to_svg

UNIT_JSON = '{"width":"1","length":"1","squares":[{"index":0,"x":"0","y":"0","side":"1"}]}'


def rects(svg):
    return re.findall(r'<rect [^>]*/>', svg)


def attribute(element, name):
    return re.search(rf' {name}="([^"]*)"', element).group(1)


class JsonTests(SimpleTestCase):

    def test_unit_square(self):
        self.assertEqual(to_json(pave(1, 1)), UNIT_JSON)

    def test_figure(self):
        payload = json.loads(to_json(fibonacci_tiling(12)))
        self.assertEqual(list(payload), ['width', 'length', 'squares'])
        self.assertEqual(len(payload['squares']), 13)
        self.assertEqual(payload['squares'][0]['side'], '233')
        self.assertEqual(list(payload['squares'][1]), ['index', 'x', 'y', 'side'])

    def test_rationals_are_reduced_text(self):
        payload = json.loads(to_json(pave(Fraction(2, 4), Fraction(5, 4))))
        self.assertEqual(payload['width'], '1/2')
        self.assertEqual(payload['length'], '5/4')

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60), st.integers(1, 60))
    def test_round_trip(self, a, b, c, d):
        width, length = sorted([Fraction(a, b), Fraction(c, d)])
        tiling = pave(width, length)
        text = to_json(tiling)
        self.assertEqual(from_json(text), tiling)
        self.assertEqual(to_json(from_json(text)), text)

    def test_golden_prefix_round_trip(self):
        tiling = pave_prefix(RectState(1, PHI), 4)
        text = to_json(tiling)
        self.assertIn('"length":"1/2+1/2*sqrt5"', text)
        self.assertTrue(text.endswith('"partial":true}'))
        self.assertEqual(from_json(text), tiling)

    def test_overlap_is_an_invariant_violation(self):
        payload = json.loads(to_json(fibonacci_tiling(3)))
        payload['squares'][-1]['y'] = '1/2'
        with self.assertRaises(InvariantViolation) as caught:
            from_json(json.dumps(payload))
        self.assertIn('disjointness', caught.exception.failed)

    def test_missing_square_is_an_invariant_violation(self):
        payload = json.loads(to_json(fibonacci_tiling(3)))
        payload['squares'].pop()
        with self.assertRaises(InvariantViolation) as caught:
            from_json(json.dumps(payload))
        self.assertEqual(caught.exception.failed, ('area',))

    def test_malformed(self):
        for text in (UNIT_JSON[:-5], '[]', '{"width":"1"}', UNIT_JSON.replace('"width":"1"', '"width":"1.5"'),
                     UNIT_JSON.replace('"side":"1"', '"side":1'),
                     UNIT_JSON.replace('"index":0', '"index":"0"')):
            with self.subTest(text=text), self.assertRaises(ParseError):
                from_json(text)

    def test_index_must_match_position(self):
        payload = json.loads(to_json(fibonacci_tiling(3)))
        for square in payload['squares']:
            square['index'] = 7
        with self.assertRaises(ParseError):
            from_json(json.dumps(payload))

    def test_non_positive_rectangle_is_a_dimensions_violation(self):
        with self.assertRaises(InvariantViolation) as caught:
            from_json(UNIT_JSON.replace('"width":"1"', '"width":"-1"'))
        self.assertEqual(caught.exception.failed, ('dimensions',))


class SvgTests(SimpleTestCase):

    def test_unit_square(self):
        svg = to_svg(pave(1, 1), RenderOptions(scale=100))
        self.assertIn('viewBox="0 0 100 100"', svg)
        elements = rects(svg)
        self.assertEqual(len(elements), 2)
        self.assertEqual(attribute(elements[1], 'width'), '100')
        self.assertEqual(attribute(elements[1], 'height'), '100')

    def test_figure_at_scale_two(self):
        svg = to_svg(fibonacci_tiling(12), RenderOptions(scale=2))
        self.assertIn('viewBox="0 0 754 466"', svg)
        elements = rects(svg)
        self.assertEqual(len(elements), 14)
        first = elements[1]
        self.assertEqual((attribute(first, 'width'), attribute(first, 'height')), ('466', '466'))
        self.assertEqual((attribute(first, 'x'), attribute(first, 'y')), ('0', '0'))
        self.assertEqual(attribute(first, 'fill'), PALETTES['classic'][0])
        self.assertNotIn('approximate', svg)

    def test_y_axis_is_flipped(self):
        svg = to_svg(fibonacci_tiling(12), RenderOptions(scale=1))
        second = rects(svg)[2]
        # model (233, 89) with side 144 sits at the top of the canvas
        self.assertEqual((attribute(second, 'x'), attribute(second, 'y')), ('233', '0'))

    def test_denominators_are_cleared(self):
        svg = to_svg(pave(1, Fraction(5, 2)), RenderOptions(scale=3))
        self.assertIn('viewBox="0 0 15 6"', svg)
        self.assertEqual([attribute(e, 'width') for e in rects(svg)[1:]], ['6', '6', '3', '3'])

    def test_deterministic(self):
        opts = RenderOptions(scale=2, palette='pastel', stroke_width=2)
        self.assertEqual(to_svg(pave(7, 19), opts), to_svg(pave(7, 19), opts))

    def test_element_count(self):
        for n in range(0, 15):
            tiling = fibonacci_tiling(n)
            self.assertEqual(len(rects(to_svg(tiling, RenderOptions(scale=1)))), len(tiling.squares) + 1)

    def test_golden_prefix_is_approximate(self):
        svg = to_svg(pave_prefix(RectState(1, PHI), 5), RenderOptions(scale=100))
        self.assertIn('approximate', svg)
        self.assertIn('viewBox="0 0 162 100"', svg)
        self.assertEqual(len(rects(svg)), 6)
        self.assertEqual(attribute(rects(svg)[2], 'width'), '62')

    def test_unverified_tiling_is_refused(self):
        broken = Tiling(1, 2, (PlacedSquare(0, 0, 1, 0),))
        with self.assertRaises(VerificationFailed):
            to_svg(broken, RenderOptions())

    def test_options(self):
        with self.assertRaises(InvalidInput):
            RenderOptions(scale=0)
        with self.assertRaises(InvalidInput):
            RenderOptions(palette='neon')
        with self.assertRaises(InvalidInput):
            RenderOptions(stroke_width=0)
        self.assertEqual(len(PALETTES['classic']), 12)

    @override_settings(PAVING_RENDER_SCALE=4, PAVING_RENDER_PALETTE='grey')
    def test_options_from_settings(self):
        opts = RenderOptions.from_settings(stroke_width=3, scale=None)
        self.assertEqual(opts, RenderOptions(scale=4, palette='grey', stroke_width=3))

    def test_evaluate(self):
        self.assertEqual(mpmath.nstr(evaluate(PHI, 30), 10), '1.618033989')
        self.assertEqual(evaluate(Fraction(1, 4)), 0.25)
