import math
from unittest import TestCase

from ...exceptions import DomainException
from ...scalar.models import INF
from ..constructions import (LOG_2, binary_bound_at_rate, binary_distortion, binary_quantizer, binary_rate,
                             de_low_rate_expansion, overline_de_expansion, shannon_dr)
from ..models import quantizer_metrics

from .fixtures import QuantizersFixture


class BinaryQuantizerTests(TestCase):

    fixture = QuantizersFixture()

    # binary_rate

    def test_binary_rate__is_log_2__at_zero(self):
        self.assertAlmostEqual(binary_rate(0.0), LOG_2, places=15)

    def test_binary_rate__at_one(self):
        self.assertAlmostEqual(binary_rate(1.0), 0.43743, delta=1e-4)

    def test_binary_rate__vanishes__far_out(self):
        self.assertLess(binary_rate(40.0), 1e-300)

    # binary_distortion

    def test_binary_distortion__is_sign_quantizer_distortion__at_zero(self):
        self.assertAlmostEqual(binary_distortion(0.0, self.fixture.standard_source()), 1 - 2 / math.pi, places=14)

    def test_binary_distortion__at_one(self):
        self.assertAlmostEqual(binary_distortion(1.0, self.fixture.standard_source()), 0.56137, delta=1e-4)

    def test_binary_distortion__scales_with_variance(self):
        self.assertAlmostEqual(binary_distortion(0.7, self.fixture.shifted_source()),
                               4.0 * binary_distortion(0.7, self.fixture.standard_source()), places=12)

    # binary_quantizer

    def test_binary_quantizer__agrees_with_quantizer_metrics(self):
        source = self.fixture.shifted_source()

        for theta in [0.0, 0.5, 1.0, 2.5]:
            quantizer, rate, distortion = binary_quantizer(theta, source)
            metrics = quantizer_metrics(quantizer, source)

            self.assertAlmostEqual(metrics.entropy, rate, places=12)
            self.assertAlmostEqual(metrics.distortion, distortion, places=10)

    def test_binary_quantizer__is_single_cell__when_upper_cell_is_empty(self):
        source = self.fixture.standard_source()

        quantizer, rate, distortion = binary_quantizer(50.0, source)

        self.assertEqual(quantizer.cell_count, 1)
        self.assertEqual(rate, 0.0)
        self.assertEqual(distortion, 1.0)

    def test_binary_quantizer__raises__when_theta_is_negative(self):
        with self.assertRaises(DomainException):
            binary_quantizer(-0.5, self.fixture.standard_source())

    # binary_bound_at_rate

    def test_binary_bound_at_rate__inverts_binary_rate(self):
        source = self.fixture.standard_source()

        for theta in [0.2, 1.0, 2.0]:
            self.assertAlmostEqual(binary_bound_at_rate(binary_rate(theta), source),
                                   binary_distortion(theta, source),
                                   places=9)

    def test_binary_bound_at_rate__at_log_2(self):
        self.assertAlmostEqual(binary_bound_at_rate(LOG_2, self.fixture.standard_source()), 1 - 2 / math.pi, places=14)

    def test_binary_bound_at_rate__lies_above_shannon(self):
        source = self.fixture.standard_source()

        for rate in [0.01, 0.1, 0.4, LOG_2]:
            self.assertGreater(binary_bound_at_rate(rate, source), shannon_dr(rate, source))

    def test_binary_bound_at_rate__raises__outside_rate_range(self):
        source = self.fixture.standard_source()

        for rate in [0.0, 0.7, INF]:
            with self.assertRaises(DomainException):
                binary_bound_at_rate(rate, source)


class ExpansionsTests(TestCase):

    fixture = QuantizersFixture()

    # shannon_dr

    def test_shannon_dr(self):
        self.assertAlmostEqual(shannon_dr(0.5, self.fixture.shifted_source()), 4.0 * math.exp(-1), places=14)
        self.assertEqual(shannon_dr(INF, self.fixture.standard_source()), 0.0)

    # overline_de_expansion

    def test_overline_de_expansion(self):
        self.assertAlmostEqual(overline_de_expansion(0.05, 1.0, self.fixture.standard_source()),
                               1 - 0.1 + 0.1 * math.exp(-2), places=14)

    def test_overline_de_expansion__is_flat__without_common_randomness(self):
        self.assertAlmostEqual(overline_de_expansion(0.2, 0.0, self.fixture.standard_source()), 1.0, places=15)

    # de_low_rate_expansion

    def test_de_low_rate_expansion(self):
        self.assertAlmostEqual(de_low_rate_expansion(0.05, self.fixture.standard_source()), 0.9, places=15)
        self.assertAlmostEqual(de_low_rate_expansion(0.05, self.fixture.shifted_source()), 3.6, places=14)
