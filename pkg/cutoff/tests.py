from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st

from exact_arith.quadratic import PHI, QuadraticNumber
from fibonacci.matrices import mat_power_closed, mat_power_iter
from fibonacci.sequence import fib
from golden_app.exceptions import NotAProperRectangle, StepBudgetExhausted

from .dynamics import (
    BoundDirection, Classification, FailureMode, LinearInequality, RatioBound, RectState,
    classify, golden_certificate, inequality_chain, orbit, ratio_bound, raw_chain_entry, step,
)

EQUAL, REVERSED = FailureMode.EQUAL, FailureMode.REVERSED


@st.composite
def proper_rectangles(draw, limit=200):
    w = draw(st.fractions(min_value=Fraction(1, limit), max_value=limit, max_denominator=limit))
    extra = draw(st.fractions(min_value=Fraction(1, limit), max_value=limit, max_denominator=limit))
    return RectState(w, w + extra)


@st.composite
def ratios_between_one_and_two(draw):
    q = draw(st.integers(min_value=2, max_value=10 ** 4 // 2))
    p = draw(st.integers(min_value=q + 1, max_value=2 * q - 1))
    return Fraction(p, q)


class StepTests(SimpleTestCase):

    def test_step(self):
        self.assertEqual(step(RectState(233, 377)), RectState(144, 233))
        self.assertEqual(step(RectState(1, PHI)), RectState(PHI - 1, 1))

    def test_step_rejects_squares_and_reversed(self):
        with self.assertRaises(NotAProperRectangle):
            step(RectState(1, 1))
        with self.assertRaises(NotAProperRectangle):
            step(RectState(3, 2))

    def test_state_rejects_nonpositive_sides(self):
        with self.assertRaises(NotAProperRectangle):
            RectState(0, 1)
        with self.assertRaises(NotAProperRectangle):
            RectState(1, 2 - 2 * PHI)

    def test_orbit(self):
        self.assertEqual(
            orbit(RectState(8, 13), 3),
            [RectState(8, 13), RectState(5, 8), RectState(3, 5), RectState(2, 3)],
        )
        self.assertEqual(orbit(RectState(1, 2), 5), [RectState(1, 2), RectState(1, 1)])
        self.assertEqual(
            orbit(RectState(1, PHI), 2),
            [RectState(1, PHI), RectState(PHI - 1, 1), RectState(2 - PHI, PHI - 1)],
        )
        self.assertEqual(orbit(RectState(8, 13), 0), [RectState(8, 13)])

    def test_orbit_rejects_improper_start(self):
        with self.assertRaises(NotAProperRectangle):
            orbit(RectState(2, 1), 3)

    @given(proper_rectangles(), st.integers(min_value=1, max_value=30))
    def test_orbit_matches_matrix_powers(self, r, n):
        for i, state in enumerate(orbit(r, n)):
            self.assertEqual(mat_power_iter(i).apply((r.w, r.l)), (state.w, state.l))

    def test_golden_shape_is_fixed(self):
        states = orbit(RectState(1, PHI), 200)
        self.assertEqual(len(states), 201)
        for state in states:
            self.assertEqual(state.ratio, PHI)


class ClassifyTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(classify(RectState(1, PHI), 10), Classification.golden())
        self.assertEqual(classify(RectState(1, 2), 10), Classification.fails_at(1, EQUAL))
        self.assertEqual(classify(RectState(8, 13), 10), Classification.fails_at(5, EQUAL))
        self.assertEqual(classify(RectState(2, 5), 10), Classification.fails_at(1, REVERSED))

    def test_golden_needs_no_budget(self):
        self.assertTrue(classify(RectState(3, 3 * PHI), 1).is_golden)

    def test_other_quadratic_ratios_fail(self):
        verdict = classify(RectState(1, QuadraticNumber(0, 1)), 100)
        self.assertFalse(verdict.is_golden)
        self.assertEqual(classify(RectState(1, 2 * PHI - 1), 100).verdict.value, 'fails')

    def test_budget(self):
        with self.assertRaises(StepBudgetExhausted):
            classify(RectState(8, 13), 3)

    @override_settings(PAVING_CLASSIFY_BUDGET=2)
    def test_default_budget_comes_from_settings(self):
        with self.assertRaises(StepBudgetExhausted):
            classify(RectState(8, 13))

    def test_to_dict(self):
        self.assertEqual(Classification.golden().to_dict(), {'verdict': 'golden'})
        self.assertEqual(
            Classification.fails_at(5, EQUAL).to_dict(),
            {'verdict': 'fails', 'step': 5, 'mode': 'equal'},
        )

    def test_convergent_rectangles_fail_at_their_index(self):
        for n in range(1, 21):
            with self.subTest(n=n):
                r = RectState(fib(n), fib(n + 1))
                self.assertEqual(classify(r, 10 * n + 10), Classification.fails_at(n, EQUAL))

    @hypothesis_settings(max_examples=500, deadline=None)
    @given(ratios_between_one_and_two())
    def test_rational_ratios_fail(self, ratio):
        budget = ratio.numerator + ratio.denominator
        verdict = classify(RectState(1, ratio), budget)
        self.assertFalse(verdict.is_golden)
        self.assertLessEqual(verdict.step, budget)

    @given(ratios_between_one_and_two())
    def test_failure_step_agrees_with_bounds(self, ratio):
        verdict = classify(RectState(1, ratio), 10 ** 4)
        self.assertFalse(ratio_bound(verdict.step).satisfied_by(ratio))
        for j in range(verdict.step):
            self.assertTrue(ratio_bound(j).satisfied_by(ratio))

    def test_certificate(self):
        self.assertTrue(golden_certificate(PHI))
        self.assertFalse(golden_certificate(Fraction(13, 8)))
        self.assertFalse(golden_certificate(QuadraticNumber(0, 1)))


class ChainTests(SimpleTestCase):

    def test_entries(self):
        chain = inequality_chain(6)
        self.assertEqual(str(chain[0]), 'W < L')
        self.assertEqual(str(chain[1]), 'L < 2W')
        self.assertEqual(str(chain[3]), '3L < 5W')
        self.assertEqual(str(chain[6]), '21W < 13L')
        self.assertEqual(chain[6], LinearInequality(21, 0, 0, 13))

    def test_raw_entries(self):
        self.assertEqual(str(raw_chain_entry(2)), '2W - L < -W + L')
        self.assertEqual(raw_chain_entry(3), LinearInequality(-3, 2, 2, -1))
        self.assertEqual(raw_chain_entry(6), LinearInequality(13, -8, -8, 5))

    def test_chain_is_the_expanded_closed_form(self):
        chain = inequality_chain(20)
        self.assertEqual(raw_chain_entry(0).normalized(), chain[0])
        for k in range(1, 21):
            m = mat_power_closed(k)
            with self.subTest(k=k):
                self.assertEqual(LinearInequality(m.m11, m.m12, m.m21, m.m22).normalized(), chain[k])

    def test_golden_rectangle_satisfies_every_entry(self):
        for entry in inequality_chain(30):
            self.assertTrue(entry.holds(1, PHI))

    def test_ratio_bounds(self):
        self.assertEqual(ratio_bound(0), RatioBound(Fraction(1), BoundDirection.RATIO_GREATER))
        self.assertEqual(ratio_bound(5), RatioBound(Fraction(13, 8), BoundDirection.RATIO_LESS))
        self.assertEqual(ratio_bound(6), RatioBound(Fraction(21, 13), BoundDirection.RATIO_GREATER))
        for k in range(40):
            self.assertTrue(ratio_bound(k).satisfied_by(PHI))
