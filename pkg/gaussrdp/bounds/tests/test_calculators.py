import math
from unittest import TestCase

from ...exceptions import DomainException, StateException, UsageException
from ...oracle.models import GridSpec
from ...oracle.searches import grid_min_sigma
from ...oracle.verifiers import grid_sup_alpha, lower_kl_objective, lower_w2_objective, min_sup_improved_w2
from ...scalar.functions import sigma_of_p, xi
from ...scalar.models import INF, GaussianSource
from ..calculators import (AlphaHatCase, SigmaHatCase, alpha_hat, alpha_hat_case, delta_plus, improved_lower_w2,
                           improvement_gap, induced_lower_kl, induced_upper_w2, lower_kl, lower_w2, nu_rc,
                           sigma_hat_w2, upper_kl, upper_w2)

from .fixtures import BoundQueriesFixture


class KlBoundsTests(TestCase):

    fixture = BoundQueriesFixture()

    # lower_kl

    def test_lower_kl__is_zero__when_rate_is_infinite(self):
        for perception in [0.0, 0.1, INF]:
            self.assertEqual(lower_kl(self.fixture.kl_query(INF, 0.3, perception)).value, 0.0)

    def test_lower_kl__is_shannon_value__when_perception_is_infinite(self):
        result = lower_kl(self.fixture.kl_query(0.5, 0.0, INF))

        self.assertAlmostEqual(result.value, math.exp(-1), delta=1e-12)

    def test_lower_kl__matches_grid_oracle(self):
        q = self.fixture.kl_query(1.0, 0.0, 0.1)
        lo = sigma_of_p(0.1, q.source)

        argmin, minimum = grid_min_sigma(lower_kl_objective(q), GridSpec(lo, 1.0, 20001))
        result = lower_kl(q)

        self.assertAlmostEqual(result.value, minimum, delta=1e-6)
        self.assertAlmostEqual(result.minimizer_sigma, argmin, delta=1e-3)

    def test_lower_kl__is_source_variance_plus_floor__when_rate_is_zero(self):
        q = self.fixture.kl_query(0.0, 0.0, 0.1)

        self.assertAlmostEqual(lower_kl(q).value, 1.0 + sigma_of_p(0.1, q.source) ** 2, delta=1e-12)

    def test_lower_kl__scales_with_variance(self):
        source = GaussianSource(mean=3.0, variance=4.0)

        scaled = lower_kl(self.fixture.kl_query(0.7, 0.2, 0.05, source=source)).value
        standard = lower_kl(self.fixture.kl_query(0.7, 0.2, 0.05)).value

        self.assertAlmostEqual(scaled, 4.0 * standard, delta=1e-9)

    def test_lower_kl__raises__when_w2_query(self):
        with self.assertRaises(UsageException):
            lower_kl(self.fixture.w2_query(0.5, 0.0, 0.1))

    # upper_kl

    def test_upper_kl__is_seven_sixteenths__at_log_2_without_perception(self):
        self.assertAlmostEqual(upper_kl(self.fixture.kl_query(math.log(2), 0.0, INF)).value, 0.4375, places=15)

    def test_upper_kl__is_variance_plus_floor__when_rate_is_zero(self):
        q = self.fixture.kl_query(0.0, 0.4, 0.1)

        self.assertAlmostEqual(upper_kl(q).value, 1.0 + sigma_of_p(0.1, q.source) ** 2, places=14)

    def test_upper_kl__matches_direct_evaluation(self):
        q = self.fixture.kl_query(0.5, 0.1, 0.1)
        factor = xi(0.5, 0.1)
        floor = sigma_of_p(0.1, q.source)

        result = upper_kl(q)

        self.assertAlmostEqual(result.value, 1 - factor ** 2 + max(floor - factor, 0.0) ** 2, places=14)
        self.assertEqual(result.minimizer_sigma, max(floor, factor))

    def test_upper_kl__dominates_lower_kl(self):
        for rate in [0.1, 0.5, 1.5]:
            for perception in [0.0, 0.05, 0.5]:
                q = self.fixture.kl_query(rate, 0.2, perception)
                self.assertGreaterEqual(upper_kl(q).value, lower_kl(q).value - 1e-12)


class W2BoundsTests(TestCase):

    fixture = BoundQueriesFixture()

    # lower_w2

    def test_lower_w2__matches_closed_form__without_common_randomness(self):
        for perception in [0.0, 0.05, 0.2, 0.5, 2.0]:
            expected = math.exp(-1) + max(math.exp(-0.5) - math.sqrt(perception), 0.0) ** 2

            self.assertAlmostEqual(lower_w2(self.fixture.w2_query(0.5, 0.0, perception)).value, expected, delta=1e-12)

    def test_lower_w2__is_zero__when_rate_is_infinite(self):
        self.assertEqual(lower_w2(self.fixture.w2_query(INF, 0.0, 0.1)).value, 0.0)

    def test_lower_w2__matches_grid_oracle(self):
        q = self.fixture.w2_query(0.5, 0.2, 0.05)
        lo = 1.0 - math.sqrt(0.05)

        argmin, minimum = grid_min_sigma(lower_w2_objective(q), GridSpec(lo, 1.0, 4097))
        result = lower_w2(q)

        self.assertAlmostEqual(result.value, minimum, delta=1e-6)
        self.assertAlmostEqual(result.minimizer_sigma, argmin, delta=1e-4)

    def test_lower_w2__matches_grid_oracle__in_shifted_case_with_common_randomness(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.3)
        lo = 1.0 - math.sqrt(0.3)

        argmin, minimum = grid_min_sigma(lower_w2_objective(q), GridSpec(lo, 1.0, 4097))
        result = lower_w2(q)

        self.assertEqual(sigma_hat_w2(q)[1], SigmaHatCase.SHIFTED)
        self.assertAlmostEqual(result.value, minimum, delta=1e-6)
        self.assertAlmostEqual(result.minimizer_sigma, argmin, delta=1e-3)
        self.assertLessEqual(result.value, improved_lower_w2(q).value + 1e-12)
        self.assertLessEqual(improved_lower_w2(q).value, upper_w2(q).value + 1e-12)

    def test_lower_w2__is_shannon_value_plus_shift__in_shifted_case(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.3)
        shift = math.exp(-0.2) - math.sqrt(0.3)

        self.assertAlmostEqual(lower_w2(q).value, math.exp(-0.2) + shift ** 2, delta=1e-12)

    def test_lower_w2__raises__when_kl_query(self):
        with self.assertRaises(UsageException):
            lower_w2(self.fixture.kl_query(0.5, 0.0, 0.1))

    # sigma_hat_w2

    def test_sigma_hat_w2__is_unconstrained__when_perception_is_loose(self):
        sigma_hat, case = sigma_hat_w2(self.fixture.w2_query(0.5, 0.0, 0.5))

        self.assertEqual(case, SigmaHatCase.UNCONSTRAINED)
        self.assertAlmostEqual(sigma_hat, math.sqrt(1 - math.exp(-1)), places=15)

    def test_sigma_hat_w2__is_shifted__when_perception_is_moderate(self):
        sigma_hat, case = sigma_hat_w2(self.fixture.w2_query(0.5, 0.0, 0.05))

        self.assertEqual(case, SigmaHatCase.SHIFTED)
        self.assertAlmostEqual(sigma_hat, math.sqrt(1 - math.exp(-1) + (math.exp(-0.5) - math.sqrt(0.05)) ** 2), places=14)

    def test_sigma_hat_w2__is_perception_edge__when_perception_is_tight(self):
        _, case = sigma_hat_w2(self.fixture.w2_query(0.05, 1.0, 0.001))

        self.assertIn(case, {SigmaHatCase.PERCEPTION_EDGE_HIGH, SigmaHatCase.PERCEPTION_EDGE_LOW})

    def test_sigma_hat_w2__is_perception_floor__when_rate_is_zero(self):
        sigma_hat, case = sigma_hat_w2(self.fixture.w2_query(0.0, 0.5, 0.25))

        self.assertEqual(case, SigmaHatCase.ZERO_RATE)
        self.assertEqual(sigma_hat, 0.5)

    # nu_rc

    def test_nu_rc__is_zero__without_common_randomness(self):
        self.assertEqual(nu_rc(0.5, 0.0), 0.0)

    def test_nu_rc__raises__when_rate_is_zero(self):
        with self.assertRaises(DomainException):
            nu_rc(0.0, 0.5)

    # upper_w2

    def test_upper_w2__is_twice_one_minus_xi__when_perception_is_zero(self):
        q = self.fixture.w2_query(0.5, 0.2, 0.0)

        self.assertAlmostEqual(upper_w2(q).value, 2 * (1 - xi(0.5, 0.2)), places=14)

    def test_upper_w2__drops_clamp__when_perception_is_loose(self):
        factor = xi(0.5, 0.2)
        q = self.fixture.w2_query(0.5, 0.2, (1 - factor) ** 2)

        self.assertAlmostEqual(upper_w2(q).value, 1 - factor ** 2, places=14)

    def test_upper_w2__is_seven_sixteenths__at_log_2_without_perception(self):
        self.assertAlmostEqual(upper_w2(self.fixture.w2_query(math.log(2), 0.0, INF)).value, 0.4375, places=15)


class ImprovedLowerBoundTests(TestCase):

    fixture = BoundQueriesFixture()

    # delta_plus

    def test_delta_plus__reproduces_plain_shift__when_alpha_is_one(self):
        q = self.fixture.w2_query(0.3, 0.2, 0.1)

        for sigma_hat in [0.7, 0.8, 1.0]:
            self.assertAlmostEqual(delta_plus(sigma_hat, 1.0, q), math.exp(-0.5) - math.sqrt(0.1), places=14)

    def test_delta_plus__is_zero__when_rates_are_infinite(self):
        self.assertEqual(delta_plus(0.8, 1.3, self.fixture.w2_query(INF, INF, 0.1)), 0.0)

    def test_delta_plus__is_zero__when_alpha_is_one_and_perception_is_loose(self):
        self.assertEqual(delta_plus(0.9, 1.0, self.fixture.w2_query(0.3, 0.2, 0.5)), 0.0)

    def test_delta_plus__matches_direct_formula(self):
        q = self.fixture.w2_query(0.3, 0.2, 0.1)
        radicand = 1 - 1.3 * (1 + 0.64 - 0.1) + 1.69 * 0.64

        expected = max(math.exp(-0.5) - math.sqrt(radicand), 0.0) / 1.3

        self.assertAlmostEqual(delta_plus(0.8, 1.3, q), expected, places=14)

    def test_delta_plus__raises__when_alpha_is_not_positive(self):
        with self.assertRaises(DomainException):
            delta_plus(0.8, 0.0, self.fixture.w2_query(0.3, 0.2, 0.1))

    # alpha_hat

    def test_alpha_hat__is_std_ratio__at_perception_floor(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.1)
        sigma_hat = 1 - math.sqrt(0.1)

        self.assertAlmostEqual(alpha_hat(sigma_hat, q), 1 / sigma_hat, places=9)
        self.assertEqual(alpha_hat_case(sigma_hat, q), AlphaHatCase.DEGENERATE)

    def test_alpha_hat__is_one__at_sigma_hat_without_common_randomness(self):
        q = self.fixture.w2_query(0.5, 0.0, 0.05)
        sigma_hat, _ = sigma_hat_w2(q)

        self.assertAlmostEqual(alpha_hat(sigma_hat, q), 1.0, places=9)

    def test_alpha_hat__matches_grid_oracle(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.1)

        argmax, maximum = grid_sup_alpha(0.9, q)

        self.assertAlmostEqual(alpha_hat(0.9, q), argmax, delta=1e-4)
        self.assertAlmostEqual(delta_plus(0.9, alpha_hat(0.9, q), q), maximum, delta=1e-10)

    def test_alpha_hat__raises__outside_positive_region(self):
        with self.assertRaises(StateException):
            alpha_hat(0.9, self.fixture.w2_query(0.1, 0.1, INF))

    def test_alpha_hat__raises__when_total_rate_is_zero(self):
        with self.assertRaises(StateException):
            alpha_hat(0.9, self.fixture.w2_query(0.0, 0.0, 0.1))

    # improved_lower_w2

    def test_improved_lower_w2__equals_lower_w2__without_common_randomness(self):
        for perception in [0.0, 0.05, 0.3]:
            q = self.fixture.w2_query(0.5, 0.0, perception)

            self.assertAlmostEqual(improved_lower_w2(q).value, lower_w2(q).value, delta=1e-12)

    def test_improved_lower_w2__is_shannon_value__when_perception_is_infinite(self):
        q = self.fixture.w2_query(0.5, 0.3, INF)

        self.assertAlmostEqual(improved_lower_w2(q).value, math.exp(-1), delta=1e-12)

    def test_improved_lower_w2__is_strictly_tighter__below_threshold(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.3)

        result = improved_lower_w2(q)

        self.assertGreater(result.value, lower_w2(q).value + 1e-10)
        self.assertLessEqual(result.value, upper_w2(q).value + 1e-12)
        self.assertIsNotNone(result.maximizer_alpha)

    def test_improved_lower_w2__matches_min_sup_oracle(self):
        q = self.fixture.w2_query(0.1, 0.1, 0.3)

        self.assertAlmostEqual(improved_lower_w2(q).value, min_sup_improved_w2(q), delta=1e-4)

    def test_improvement_gap__vanishes__above_threshold(self):
        self.assertLessEqual(improvement_gap(self.fixture.w2_query(0.1, 0.1, 0.8)), 1e-12)

    # induced bounds

    def test_induced_lower_kl__is_lower_w2_at_zero__when_perception_is_zero(self):
        q = self.fixture.kl_query(0.5, 0.2, 0.0)

        self.assertEqual(induced_lower_kl(q).value, lower_w2(self.fixture.w2_query(0.5, 0.2, 0.0)).value)

    def test_induced_lower_kl__is_lower_w2_at_twice_variance__when_perception_is_infinite(self):
        q = self.fixture.kl_query(0.5, 0.2, INF)

        self.assertEqual(induced_lower_kl(q).value, lower_w2(self.fixture.w2_query(0.5, 0.2, 2.0)).value)

    def test_induced_lower_kl__never_exceeds_lower_kl(self):
        q = self.fixture.kl_query(0.5, 0.0, 0.1)

        self.assertLessEqual(induced_lower_kl(q).value, lower_kl(q).value + 1e-12)

    def test_induced_upper_w2__is_upper_kl_without_perception__from_twice_variance(self):
        q = self.fixture.w2_query(0.5, 0.2, 2.0)

        self.assertEqual(induced_upper_w2(q).value, upper_kl(self.fixture.kl_query(0.5, 0.2, INF)).value)

    def test_induced_upper_w2__never_below_upper_w2(self):
        q = self.fixture.w2_query(0.3, 0.0, 0.1)

        self.assertGreaterEqual(induced_upper_w2(q).value, upper_w2(q).value - 1e-12)

    def test_induced_upper_w2__raises__when_kl_query(self):
        with self.assertRaises(UsageException):
            induced_upper_w2(self.fixture.kl_query(0.3, 0.0, 0.1))
