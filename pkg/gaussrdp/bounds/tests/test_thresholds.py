import math
from unittest import TestCase

from ...exceptions import DomainException
from ...scalar.models import INF, GaussianSource, Measure, RdpQuery
from ..calculators import improvement_gap
from ..models import ThresholdResult
from ..thresholds import (is_strict_improvement, lower_bound_saturation_p, strictness_threshold_p,
                          strictness_threshold_r)


class StrictnessThresholdPTests(TestCase):

    # strictness_threshold_p

    def test_strictness_threshold_p__at_tenth_nat(self):
        result = strictness_threshold_p(0.1, 0.1)

        self.assertAlmostEqual(result.threshold, 0.692347, delta=1e-5)
        self.assertEqual(result.regime, ThresholdResult.Regime.CLOSED_FORM)

    def test_strictness_threshold_p__has_no_gap__without_common_randomness(self):
        self.assertEqual(strictness_threshold_p(0.1, 0.0).regime, ThresholdResult.Regime.NO_GAP)
        self.assertEqual(strictness_threshold_p(0.1, INF).regime, ThresholdResult.Regime.NO_GAP)
        self.assertEqual(strictness_threshold_p(0.0, 0.1).regime, ThresholdResult.Regime.NO_GAP)

    def test_strictness_threshold_p__scales_with_variance(self):
        scaled = strictness_threshold_p(0.3, 0.2, GaussianSource(mean=1.0, variance=3.0)).threshold

        self.assertAlmostEqual(scaled, 3.0 * strictness_threshold_p(0.3, 0.2).threshold, places=12)

    def test_strictness_threshold_p__raises__when_rate_is_negative(self):
        with self.assertRaises(DomainException):
            strictness_threshold_p(-0.1, 0.1)

    def test_lower_bound_saturation_p__is_strictness_threshold(self):
        self.assertEqual(lower_bound_saturation_p(0.4, 0.3), strictness_threshold_p(0.4, 0.3).threshold)

    # is_strict_improvement

    def test_is_strict_improvement__inside_and_outside_region(self):
        self.assertTrue(is_strict_improvement(0.5, 0.1, 0.1))
        self.assertFalse(is_strict_improvement(1.5, 0.1, 0.1))
        self.assertFalse(is_strict_improvement(0.5, 0.0, 0.1))
        self.assertFalse(is_strict_improvement(0.5, 0.1, 0.0))

    def test_is_strict_improvement__agrees_with_improvement_gap(self):
        source = GaussianSource()

        for perception in [0.3, 0.8]:
            q = RdpQuery(source, 0.1, 0.1, perception, Measure.W2SQ)
            strict = is_strict_improvement(0.1, 0.1, perception)

            self.assertEqual(improvement_gap(q) > 1e-10, strict)


class StrictnessThresholdRTests(TestCase):

    # strictness_threshold_r

    def test_strictness_threshold_r__at_tenth_nat(self):
        result = strictness_threshold_r(0.1, 0.1)

        self.assertAlmostEqual(result.threshold, 1.05198, delta=1e-4)
        self.assertEqual(result.regime, ThresholdResult.Regime.QUADRATIC)

    def test_strictness_threshold_r__is_linear__at_log_2(self):
        result = strictness_threshold_r(math.log(2), 0.5)

        self.assertEqual(result.regime, ThresholdResult.Regime.LINEAR)
        self.assertAlmostEqual(result.threshold, -0.5 * math.log(0.875), places=12)

    def test_strictness_threshold_r__is_zero__when_perception_reaches_variance(self):
        for perception in [1.0, 1.5, INF]:
            result = strictness_threshold_r(0.1, perception)

            self.assertEqual(result.threshold, 0.0)
            self.assertEqual(result.regime, ThresholdResult.Regime.PERCEPTION_ABOVE_VARIANCE)

    def test_strictness_threshold_r__inverts_strictness_threshold_p(self):
        for common_randomness, perception in [(0.1, 0.3), (0.5, 0.05), (2.0, 0.6)]:
            rate = strictness_threshold_r(common_randomness, perception).threshold

            self.assertAlmostEqual(strictness_threshold_p(rate, common_randomness).threshold, perception, places=9)

    def test_strictness_threshold_r__raises__when_common_randomness_is_zero_or_infinite(self):
        with self.assertRaises(DomainException):
            strictness_threshold_r(0.0, 0.1)
        with self.assertRaises(DomainException):
            strictness_threshold_r(INF, 0.1)

    def test_strictness_threshold_r__raises__when_perception_is_zero(self):
        with self.assertRaises(DomainException):
            strictness_threshold_r(0.1, 0.0)
