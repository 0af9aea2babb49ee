from fractions import Fraction

import mpmath
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from golden_app.exceptions import DivisionByZero, InvalidInput

from .quadratic import (
    ONE, PHI, SQRT5, ZERO, QuadraticNumber, as_exact, exact_sign, format_exact,
    parse_exact, parse_quad_pair, quad_add, quad_inverse, quad_mul, quad_sign,
)
from .rationals import format_rational, parse_rational

small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
quadratics = st.builds(QuadraticNumber, small_rationals, small_rationals)
nonzero_quadratics = quadratics.filter(bool)


def Q(a, b=0):
    return QuadraticNumber(Fraction(a), Fraction(b))


class QuadraticArithmeticTests(SimpleTestCase):

    def test_add(self):
        self.assertEqual(quad_add(PHI, PHI), Q(1, 1))
        self.assertEqual(quad_add(Q(3, -2), ZERO), Q(3, -2))
        self.assertEqual(quad_add(Q(2, -1), Q(-2, 1)), ZERO)

    def test_mul(self):
        self.assertEqual(quad_mul(PHI, PHI), PHI + 1)
        self.assertEqual(quad_mul(PHI, PHI), Q(Fraction(3, 2), Fraction(1, 2)))
        self.assertEqual(quad_mul(Q(7, 3), ONE), Q(7, 3))
        self.assertEqual(quad_mul(SQRT5, SQRT5), Q(5))

    def test_inverse(self):
        self.assertEqual(quad_inverse(PHI), PHI - 1)
        self.assertEqual(quad_inverse(PHI), Q(Fraction(-1, 2), Fraction(1, 2)))
        self.assertEqual(quad_inverse(ONE), ONE)
        self.assertEqual(quad_inverse(Q(2, -1)), Q(-2, -1))

    def test_inverse_of_zero(self):
        with self.assertRaises(DivisionByZero):
            quad_inverse(ZERO)
        with self.assertRaises(ZeroDivisionError):
            ONE / ZERO

    def test_sign(self):
        self.assertEqual(quad_sign(Q(2, -1)), -1)
        self.assertEqual(quad_sign(ZERO), 0)
        self.assertEqual(quad_sign(PHI - Fraction(13, 8)), -1)
        self.assertEqual(quad_sign(PHI - Fraction(21, 13)), 1)
        self.assertEqual(quad_sign(Q(-3, 2)), 1)

    def test_golden_equation(self):
        self.assertEqual(PHI * PHI - PHI - 1, ZERO)
        self.assertEqual(1 / (PHI - 1), PHI)

    def test_mixed_operands(self):
        self.assertEqual(Fraction(1, 2) + PHI, Q(1, Fraction(1, 2)))
        self.assertEqual(2 - PHI, Q(Fraction(3, 2), Fraction(-1, 2)))
        self.assertEqual(Fraction(3, 1) / Q(3), ONE)
        self.assertTrue(Fraction(8, 5) < PHI < Fraction(13, 8))
        self.assertTrue(PHI > 1)
        self.assertEqual(Q(4), 4)
        self.assertEqual(Fraction(4), Q(4))
        self.assertNotEqual(PHI, Fraction(1, 2))
        self.assertEqual(hash(Q(Fraction(5, 3))), hash(Fraction(5, 3)))

    def test_powers(self):
        self.assertEqual(PHI ** 2, PHI + 1)
        self.assertEqual(PHI ** -2, 2 - PHI)
        self.assertEqual(PHI ** 0, ONE)

    def test_conjugate_and_norm(self):
        self.assertEqual(PHI * PHI.conjugate(), Q(-1))
        self.assertEqual(PHI.norm(), -1)

    @given(nonzero_quadratics)
    def test_inverse_is_exact(self, x):
        self.assertEqual(quad_mul(x, quad_inverse(x)), ONE)

    @given(quadratics, quadratics)
    def test_sign_compatible_with_arithmetic(self, x, y):
        if quad_sign(x) == 1 and quad_sign(y) == 1:
            self.assertEqual(quad_sign(quad_mul(x, y)), 1)
            self.assertEqual(quad_sign(quad_add(x, y)), 1)

    @hypothesis_settings(max_examples=1000, deadline=None)
    @given(quadratics)
    def test_sign_matches_decimal_oracle(self, x):
        with mpmath.workdps(100):
            value = (mpmath.mpf(x.a.numerator) / x.a.denominator
                     + mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(5))
            expected = int(mpmath.sign(value))
        self.assertEqual(quad_sign(x), expected)

    @given(quadratics, quadratics)
    def test_coefficients_stay_reduced(self, x, y):
        for value in (x + y, x - y, x * y):
            for part in (value.a, value.b):
                self.assertGreater(part.denominator, 0)
                self.assertEqual(Fraction(part.numerator, part.denominator), part)


class TextFormTests(SimpleTestCase):

    def test_rational_text(self):
        self.assertEqual(format_rational(Fraction(6, 4)), '3/2')
        self.assertEqual(format_rational(Fraction(377)), '377')
        self.assertEqual(format_rational(Fraction(-1, 2)), '-1/2')
        self.assertEqual(parse_rational('13/8'), Fraction(13, 8))
        self.assertEqual(parse_rational('-4/6'), Fraction(-2, 3))

    def test_rational_text_is_strict(self):
        for text in ('1.5', '1/0', '', 'a/b', '3/-4'):
            with self.subTest(text=text), self.assertRaises(InvalidInput):
                parse_rational(text)

    def test_quadratic_text(self):
        self.assertEqual(str(PHI), '1/2+1/2*sqrt5')
        self.assertEqual(format_exact(2 - PHI), '3/2+-1/2*sqrt5')
        self.assertEqual(format_exact(Q(3)), '3')
        self.assertEqual(parse_exact('1/2+1/2*sqrt5'), PHI)
        self.assertEqual(parse_exact('7/3'), Fraction(7, 3))
        self.assertIsInstance(parse_exact('7/3'), Fraction)
        self.assertEqual(parse_quad_pair('1/2,1/2'), PHI)

    def test_exact_helpers(self):
        self.assertEqual(exact_sign(Fraction(-1, 3)), -1)
        self.assertEqual(exact_sign(PHI - 2), -1)
        self.assertIsInstance(as_exact(Q(5)), Fraction)
        with self.assertRaises(InvalidInput):
            as_exact(1.5)
        with self.assertRaises(InvalidInput):
            parse_quad_pair('1/2')
