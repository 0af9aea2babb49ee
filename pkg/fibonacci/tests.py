from fractions import Fraction

from django.test import SimpleTestCase

from exact_arith.quadratic import PHI, quad_sign
from golden_app.exceptions import IndexOutOfRange

from .matrices import IntMat2, det, mat_m, mat_mul, mat_power_closed, mat_power_iter
from .sequence import (
    BoundSide, SandwichEntry, convergent, fib, fib_sequence, sandwich, sandwich_holds,
    sum_of_squares,
)

LOWER, UPPER = BoundSide.LOWER, BoundSide.UPPER


class FibTests(SimpleTestCase):

    def test_values(self):
        self.assertEqual(fib(0), 1)
        self.assertEqual(fib(1), 1)
        self.assertEqual(fib(13), 377)
        self.assertEqual(fib(-1), 0)
        self.assertEqual(fib_sequence(13), [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377])

    def test_big_index(self):
        self.assertEqual(fib(100), 573147844013817084101)

    def test_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            fib(-2)
        with self.assertRaises(IndexOutOfRange):
            sum_of_squares(-1)
        with self.assertRaises(IndexOutOfRange):
            convergent(-1)

    def test_strictly_increasing(self):
        values = [fib(n) for n in range(1, 60)]
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))


class SumOfSquaresTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(sum_of_squares(5), (104, 104, True))
        self.assertEqual(sum_of_squares(0), (1, 1, True))
        self.assertEqual(sum_of_squares(12), (87841, 87841, True))
        self.assertEqual(sum_of_squares(12).rhs, 233 * 377)

    def test_identity_up_to_64(self):
        for n in range(65):
            with self.subTest(n=n):
                self.assertTrue(sum_of_squares(n).equal)


class SandwichTests(SimpleTestCase):

    def test_convergents(self):
        self.assertEqual(convergent(4), Fraction(8, 5))
        self.assertEqual(convergent(0), 1)
        self.assertEqual(convergent(6), Fraction(21, 13))

    def test_examples(self):
        self.assertEqual(sandwich(0), [(1, LOWER)])
        self.assertEqual(sandwich(1), [(1, LOWER), (2, UPPER)])
        self.assertEqual(
            sandwich(3),
            [(1, LOWER), (2, UPPER), (Fraction(3, 2), LOWER), (Fraction(5, 3), UPPER)],
        )

    def test_golden_ratio_is_sandwiched(self):
        self.assertTrue(sandwich_holds(sandwich(40)))
        for n in range(41):
            with self.subTest(n=n):
                expected = 1 if n % 2 == 0 else -1
                self.assertEqual(quad_sign(PHI - convergent(n)), expected)

    def test_monotone(self):
        evens = [convergent(2 * k) for k in range(21)]
        odds = [convergent(2 * k + 1) for k in range(20)]
        self.assertTrue(all(a < b for a, b in zip(evens, evens[1:])))
        self.assertTrue(all(a > b for a, b in zip(odds, odds[1:])))

    def test_broken_sandwich_is_detected(self):
        self.assertFalse(sandwich_holds([SandwichEntry(Fraction(5, 3), LOWER)]))
        self.assertFalse(sandwich_holds([SandwichEntry(Fraction(3, 2), UPPER)]))
        self.assertFalse(sandwich_holds([
            SandwichEntry(Fraction(8, 5), LOWER), SandwichEntry(Fraction(3, 2), LOWER),
        ]))


class MatrixTests(SimpleTestCase):

    def test_m(self):
        self.assertEqual(mat_m(), IntMat2(-1, 1, 1, 0))
        self.assertEqual(det(mat_m()), -1)
        self.assertEqual(mat_m().apply((5, 8)), (3, 5))
        self.assertEqual(str(mat_m()), '[[-1, 1], [1, 0]]')

    def test_closed_form_examples(self):
        self.assertEqual(mat_power_closed(1), mat_m())
        self.assertEqual(mat_power_closed(2), IntMat2(2, -1, -1, 1))
        self.assertEqual(mat_power_closed(3), IntMat2(-3, 2, 2, -1))
        with self.assertRaises(IndexOutOfRange):
            mat_power_closed(0)

    def test_iteration_examples(self):
        self.assertEqual(mat_power_iter(0), IntMat2.identity())
        self.assertEqual(mat_power_iter(1), mat_m())
        self.assertEqual(mat_power_iter(5), mat_power_closed(5))
        self.assertEqual(mat_mul(mat_m(), mat_m()), mat_power_iter(2))

    def test_closed_form_matches_iteration(self):
        for n in range(1, 41):
            with self.subTest(n=n):
                self.assertEqual(mat_power_closed(n), mat_power_iter(n))

    def test_determinant(self):
        for n in range(41):
            with self.subTest(n=n):
                self.assertEqual(det(mat_power_iter(n)), (-1) ** n)
