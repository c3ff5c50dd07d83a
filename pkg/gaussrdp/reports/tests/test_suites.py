from unittest import TestCase

import numpy as np

from ...scalar.models import GaussianSource
from ..suites import Suite, _alpha_hat_oracle, _sandwich, bounds_suite, ecsq_suite, run_suites, talagrand_suite


class SuitesTests(TestCase):

    # bounds_suite

    def test_bounds_suite__passes__on_few_oracle_queries(self):
        results = bounds_suite(GaussianSource(), seed=2, oracle_queries=25)

        self.assertEqual([r.suite for r in results], [Suite.BOUNDS] * 8)
        self.assertTrue(all(r.passed for r in results), [r for r in results if not r.passed])

    def test_sandwich__keeps_lower_bound_under_upper_bound(self):
        passed, detail = _sandwich(GaussianSource())

        self.assertTrue(passed, detail)

    def test_alpha_hat_oracle__checks_points(self):
        passed, detail = _alpha_hat_oracle(GaussianSource(), np.random.default_rng(0), 30)

        self.assertTrue(passed, detail)
        self.assertFalse(detail.startswith('0 points'), detail)

    def test_alpha_hat_oracle__fails__without_points(self):
        passed, detail = _alpha_hat_oracle(GaussianSource(), np.random.default_rng(0), 0)

        self.assertFalse(passed)
        self.assertTrue(detail.startswith('0 points'), detail)

    # talagrand_suite

    def test_talagrand_suite__passes__on_few_trials(self):
        results = talagrand_suite(GaussianSource(), seed=3, trials=3)

        self.assertEqual([r.suite for r in results], [Suite.TALAGRAND] * 3)
        self.assertTrue(all(r.passed for r in results), results)

    # ecsq_suite

    def test_ecsq_suite__passes(self):
        results = ecsq_suite(GaussianSource(), seed=0, threads=2)

        self.assertEqual([r.suite for r in results], [Suite.ECSQ] * 4)
        self.assertTrue(all(r.passed for r in results), [r for r in results if not r.passed])

    # run_suites

    def test_run_suites__runs_nothing__without_names(self):
        self.assertEqual(run_suites([], GaussianSource()), [])

    def test_run_suites__keeps_suite_order(self):
        results = run_suites([Suite.TALAGRAND], GaussianSource(mean=1.0, variance=2.0), seed=1, trials=2)

        self.assertEqual({r.suite for r in results}, {Suite.TALAGRAND})
        self.assertEqual(len(results), 3)
