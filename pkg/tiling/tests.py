from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from cutoff.dynamics import RectState
from exact_arith.quadratic import PHI
from fibonacci.sequence import fib
from golden_app.exceptions import InvalidDimensions, NotAProperRectangle, PatternFailsBeforeK

from .paving import PlacedSquare, Tiling, fibonacci_tiling, pave, pave_prefix, verify

FIGURE_SIDES = [233, 144, 89, 55, 34, 21, 13, 8, 5, 3, 2, 1, 1]


def partial_quotient_sum(p, q):
    """Sum of the continued-fraction terms of p/q."""
    total = 0
    while q:
        total += p // q
        p, q = q, p % q
    return total


@st.composite
def rational_rectangles(draw):
    sides = [
        Fraction(draw(st.integers(1, 50)), draw(st.integers(1, 50)))
        for _ in range(2)
    ]
    return min(sides), max(sides)


class PaveTests(SimpleTestCase):

    def test_figure_rectangle(self):
        tiling = pave(233, 377)
        self.assertEqual(tiling.sides(), FIGURE_SIDES)
        self.assertEqual(tiling.area_sum(), 87841)

    def test_spiral_positions(self):
        squares = pave(233, 377).squares
        self.assertEqual((squares[0].x, squares[0].y), (0, 0))
        self.assertEqual((squares[1].x, squares[1].y), (233, 89))
        self.assertEqual((squares[2].x, squares[2].y), (288, 0))
        self.assertEqual((squares[3].x, squares[3].y), (233, 0))
        self.assertEqual((squares[4].x, squares[4].y), (233, 55))
        self.assertEqual([square.index for square in squares], list(range(13)))

    def test_unit_square(self):
        self.assertEqual(pave(1, 1).squares, (PlacedSquare(0, 0, 1, 0),))

    def test_half_integer_strip(self):
        tiling = pave(1, Fraction(5, 2))
        half = Fraction(1, 2)
        self.assertEqual(tiling.sides(), [1, 1, half, half])
        self.assertEqual(
            [(square.x, square.y) for square in tiling.squares],
            [(0, 0), (Fraction(3, 2), 0), (1, 0), (1, half)],
        )
        self.assertEqual(tiling.area_sum(), Fraction(5, 2))

    def test_long_strip(self):
        tiling = pave(1, 5)
        self.assertEqual(tiling.sides(), [1] * 5)
        self.assertTrue(verify(tiling).certified)

    def test_invalid_dimensions(self):
        with self.assertRaises(InvalidDimensions):
            pave(0, 1)
        with self.assertRaises(InvalidDimensions):
            pave(2, 1)
        with self.assertRaises(InvalidDimensions):
            pave(1, PHI)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(rational_rectangles())
    def test_random_pavings_verify(self, rectangle):
        width, length = rectangle
        tiling = pave(width, length)
        self.assertTrue(verify(tiling).certified)
        ratio = length / width
        self.assertEqual(len(tiling.squares), partial_quotient_sum(ratio.numerator, ratio.denominator))

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(st.integers(1, 1000), st.integers(1, 1000))
    def test_square_count_is_partial_quotient_sum(self, a, b):
        p, q = max(a, b), min(a, b)
        self.assertEqual(len(pave(q, p).squares), partial_quotient_sum(p, q))

    def test_deterministic(self):
        self.assertEqual(pave(Fraction(7, 3), Fraction(11, 2)), pave(Fraction(7, 3), Fraction(11, 2)))


class FibonacciTilingTests(SimpleTestCase):

    def test_figure(self):
        tiling = fibonacci_tiling(12)
        self.assertEqual((tiling.width, tiling.length), (233, 377))
        self.assertEqual(tiling.sides(), FIGURE_SIDES)

    def test_small(self):
        self.assertEqual(fibonacci_tiling(0).squares, (PlacedSquare(0, 0, 1, 0),))
        one = fibonacci_tiling(1)
        self.assertEqual((one.width, one.length), (1, 2))
        self.assertEqual(one.sides(), [1, 1])

    def test_sides_are_the_sequence(self):
        for n in range(1, 21):
            with self.subTest(n=n):
                tiling = fibonacci_tiling(n)
                self.assertEqual(len(tiling.squares), n + 1)
                self.assertEqual(tiling.sides(), [fib(i) for i in range(n, -1, -1)])
                self.assertEqual(tiling.area_sum(), fib(n) * fib(n + 1))
                self.assertEqual(verify(tiling).duplicates, {1: 2})


class PrefixTests(SimpleTestCase):

    def test_golden_prefix(self):
        tiling = pave_prefix(RectState(1, PHI), 3)
        self.assertEqual(tiling.sides(), [1, PHI - 1, 2 - PHI])
        self.assertFalse(tiling.complete)
        self.assertEqual(pave_prefix(RectState(1, PHI), 1).sides(), [1])

    def test_golden_prefix_is_geometric(self):
        tiling = pave_prefix(RectState(1, PHI), 30)
        sides = tiling.sides()
        self.assertEqual(len(set(sides)), 30)
        for smaller, larger in zip(sides[1:], sides):
            self.assertEqual(smaller / larger, PHI - 1)
        report = verify(tiling)
        self.assertTrue(report.certified)
        self.assertEqual(report.duplicates, {})

    def test_prefix_stops_at_failure(self):
        with self.assertRaises(PatternFailsBeforeK) as caught:
            pave_prefix(RectState(8, 13), 6)
        self.assertEqual(caught.exception.step, 5)
        self.assertEqual(pave_prefix(RectState(8, 13), 5).sides(), [8, 5, 3, 2, 1])

    def test_prefix_rejects_improper(self):
        with self.assertRaises(NotAProperRectangle):
            pave_prefix(RectState(2, 2), 1)


class VerifyTests(SimpleTestCase):

    def test_figure_is_certified(self):
        report = verify(fibonacci_tiling(12))
        self.assertTrue(report.containment)
        self.assertTrue(report.disjointness)
        self.assertTrue(report.area)
        self.assertEqual(report.duplicates, {1: 2})

    def test_translated_square_breaks_disjointness(self):
        tiling = fibonacci_tiling(3)
        moved = list(tiling.squares)
        last = moved[-1]
        moved[-1] = PlacedSquare(last.x, last.y + Fraction(1, 2), last.side, last.index)
        report = verify(Tiling(tiling.width, tiling.length, tuple(moved)))
        self.assertFalse(report.disjointness)
        self.assertFalse(report.certified)
        self.assertIn('disjointness', report.failed_checks())

    def test_single_square(self):
        self.assertTrue(verify(Tiling(1, 1, (PlacedSquare(0, 0, 1, 0),))).certified)

    def test_overhanging_square_breaks_containment(self):
        report = verify(Tiling(1, 2, (PlacedSquare(0, 0, 1, 0), PlacedSquare(Fraction(3, 2), 0, 1, 1))))
        self.assertFalse(report.containment)

    def test_missing_square_breaks_area(self):
        tiling = fibonacci_tiling(4)
        report = verify(Tiling(tiling.width, tiling.length, tiling.squares[:-1]))
        self.assertEqual(report.failed_checks(), ['area'])

    def test_degenerate_rectangle_is_rejected(self):
        with self.assertRaises(InvalidDimensions):
            Tiling(0, 0)
