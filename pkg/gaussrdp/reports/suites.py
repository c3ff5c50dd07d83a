"""
Property and oracle checks behind the verify command. Every check returns a
CheckResult instead of raising, so a run reports all failures at once.
"""

import itertools
import logging
import math

import numpy as np

from ..bounds.calculators import (alpha_hat, delta_plus, improved_lower_w2, induced_lower_kl, induced_upper_w2,
                                  lower_kl, lower_w2, sigma_hat_w2, upper_kl, upper_w2)
from ..bounds.thresholds import is_strict_improvement, strictness_threshold_p, strictness_threshold_r
from ..ecsq.constructions import LOG_2, binary_bound_at_rate, binary_quantizer, shannon_dr
from ..ecsq.designers import design_ecsq, interpolate_curve, trace_de_curve
from ..ecsq.models import cell_statistics
from ..exceptions import GaussRdpException, StateException
from ..oracle.models import GridSpec
from ..oracle.searches import grid_min_sigma
from ..oracle.verifiers import grid_sup_alpha, lower_w2_objective
from ..scalar.functions import xi
from ..scalar.models import INF, Measure, RdpQuery
from ..talagrand.checkers import moment_gap_check, run_talagrand_trials

from .models import CheckResult


logger = logging.getLogger(__name__)


class Suite():
    BOUNDS = 'bounds'
    TALAGRAND = 'talagrand'
    ECSQ = 'ecsq'

    ALL = [
        BOUNDS,
        TALAGRAND,
        ECSQ,
    ]


SLACK = 1e-12

GAP_TOL = 1e-12

# Grid points this close to P* (relative) are left out of the strictness check
THRESHOLD_MARGIN = 0.02

ORACLE_ARGUMENT_TOL = 1e-4

ORACLE_VALUE_TOL = 1e-8

RATES = [0.0, 0.05, 0.1, 0.3, 0.7, 1.0, 2.0, INF]
COMMON_RANDOMNESS = [0.0, 0.1, 0.5, 2.0, INF]
PERCEPTIONS = [0.0, 0.01, 0.05, 0.1, 0.3, 0.7, 1.5, INF]


def _check(suite, name, fn):
    """ Runs fn() -> (passed, detail); library errors count as failures. """
    try:
        passed, detail = fn()
    except GaussRdpException as e:
        passed, detail = False, 'error: {}'.format(e.message)

    logger.debug("%s/%s: %s %s", suite, name, passed, detail)

    return CheckResult(suite, name, passed, detail)


def _grid(source, measure, rates=RATES, commons=COMMON_RANDOMNESS, perceptions=PERCEPTIONS):
    for rate, common, perception in itertools.product(rates, commons, perceptions):
        yield RdpQuery(source, rate, common, perception, measure)


# Bounds

def _sandwich(source):
    worst = math.inf
    for q in _grid(source, Measure.KL):
        worst = min(worst, upper_kl(q).value - lower_kl(q).value)
    for q in _grid(source, Measure.W2SQ):
        lower, improved, upper = lower_w2(q).value, improved_lower_w2(q).value, upper_w2(q).value
        worst = min(worst, improved - lower, upper - improved)

    return worst >= -SLACK, 'worst slack {:.3g}'.format(worst)


def _monotonicity(source):
    bounds = [(Measure.KL, lower_kl), (Measure.KL, upper_kl),
              (Measure.W2SQ, lower_w2), (Measure.W2SQ, upper_w2), (Measure.W2SQ, improved_lower_w2)]
    axes = [('rate', RATES), ('common_randomness', COMMON_RANDOMNESS), ('perception', PERCEPTIONS)]
    base = {'rate': 0.3, 'common_randomness': 0.1, 'perception': 0.05}

    worst = math.inf
    for (measure, bound), (field, values) in itertools.product(bounds, axes):
        fixed = RdpQuery(source, base['rate'], base['common_randomness'], base['perception'], measure)
        curve = [bound(fixed.replacing(**{field: v})).value for v in values]
        worst = min(worst, min(a - b for a, b in zip(curve, curve[1:])))

    return worst >= -SLACK, 'largest increase {:.3g}'.format(-worst)


def _induced(source):
    rates = np.linspace(0.05, 2.0, 10).tolist()
    commons = [0.0, 0.1, 0.5, 1.0, 2.0]
    perceptions = np.linspace(0.01, 1.0, 10).tolist()

    worst = math.inf
    for q in _grid(source, Measure.KL, rates, commons, perceptions):
        worst = min(worst, lower_kl(q).value - induced_lower_kl(q).value)
    for q in _grid(source, Measure.W2SQ, rates, commons, perceptions):
        worst = min(worst, induced_upper_w2(q).value - upper_w2(q).value)

    return worst >= -SLACK, 'worst slack {:.3g}'.format(worst)


def _strictness_region(source):
    mismatches = []
    for q in _grid(source, Measure.W2SQ):
        threshold = strictness_threshold_p(q.rate, q.common_randomness, source).threshold
        if threshold > 0 and abs(q.perception - threshold) <= THRESHOLD_MARGIN * threshold:
            continue

        gap = improved_lower_w2(q).value - lower_w2(q).value
        strict = is_strict_improvement(q.rate, q.common_randomness, q.perception, source)
        if strict != (gap > GAP_TOL):
            mismatches.append((q.rate, q.common_randomness, q.perception, gap))

    return not mismatches, '{} mismatches{}'.format(len(mismatches), ': {}'.format(mismatches[:3]) if mismatches else '')


def _infinite_perception(source):
    worst = 0.0
    for rate, common in itertools.product(np.linspace(0.0, 2.0, 20), np.linspace(0.0, 2.0, 20)):
        shannon = source.variance * math.exp(-2 * rate)
        upper = source.variance * (1 - xi(rate, common) ** 2)

        kl = RdpQuery(source, rate, common, INF, Measure.KL)
        w2 = RdpQuery(source, rate, common, INF, Measure.W2SQ)

        worst = max(worst,
                    abs(lower_kl(kl).value - shannon),
                    abs(lower_w2(w2).value - shannon),
                    abs(improved_lower_w2(w2).value - shannon),
                    abs(upper_kl(kl).value - upper),
                    abs(upper_w2(w2).value - upper))

    return worst <= SLACK, 'largest deviation {:.3g}'.format(worst)


def _thresholds(source):
    p_threshold = strictness_threshold_p(0.1, 0.1, source).threshold / source.variance
    r_threshold = strictness_threshold_r(0.1, 0.1 * source.variance, source).threshold

    passed = abs(p_threshold - 0.692) <= 1e-3 and abs(r_threshold - 1.052) <= 1e-3

    return passed, 'P* = {:.5f}, R* = {:.5f}'.format(p_threshold, r_threshold)


def _sigma_hat_oracle(source, rng, queries):
    worst_argument, worst_value = 0.0, 0.0
    for _ in range(queries):
        q = RdpQuery(source,
                     rng.uniform(0.05, 2.0),
                     rng.uniform(0.0, 1.0),
                     rng.uniform(0.0, 1.0) * source.variance,
                     Measure.W2SQ)
        sigma_hat, _ = sigma_hat_w2(q)
        lo = max(source.std - math.sqrt(q.perception), 0.0)
        objective = lower_w2_objective(q)

        argmin, minimum = grid_min_sigma(objective, GridSpec(lo, source.std, 4097))

        worst_argument = max(worst_argument, abs(argmin - sigma_hat))
        worst_value = max(worst_value, abs(minimum - objective(sigma_hat)))

    passed = worst_argument <= ORACLE_ARGUMENT_TOL * source.std and worst_value <= ORACLE_VALUE_TOL * source.variance

    return passed, 'argument {:.3g}, value {:.3g}'.format(worst_argument, worst_value)


def _alpha_hat_oracle(source, rng, queries):
    worst_argument, worst_value = 0.0, 0.0
    checked = 0
    for _ in range(queries):
        q = RdpQuery(source, rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0), rng.uniform(0.0, 0.5) * source.variance,
                     Measure.W2SQ)
        lo = max(source.std - math.sqrt(q.perception), 0.0)
        s = rng.uniform(max(lo, 0.05 * source.std), source.std)

        try:
            closed_form = alpha_hat(s, q)
        except StateException:
            # Outside the positive-supremum region
            continue

        argmax, maximum = grid_sup_alpha(s, q)
        worst_argument = max(worst_argument, abs(argmax - closed_form) / max(closed_form, 1.0))
        worst_value = max(worst_value, abs(maximum - delta_plus(s, closed_form, q)))
        checked += 1

    passed = checked > 0 and worst_argument <= ORACLE_ARGUMENT_TOL and worst_value <= ORACLE_VALUE_TOL * source.std

    return passed, '{} points, worst relative argument {:.3g}, value {:.3g}'.format(checked, worst_argument, worst_value)


def bounds_suite(source, seed=0, oracle_queries=500):
    rng = np.random.default_rng(seed)

    return [
        _check(Suite.BOUNDS, 'sandwich', lambda: _sandwich(source)),
        _check(Suite.BOUNDS, 'monotonicity', lambda: _monotonicity(source)),
        _check(Suite.BOUNDS, 'induced bounds', lambda: _induced(source)),
        _check(Suite.BOUNDS, 'strictness region', lambda: _strictness_region(source)),
        _check(Suite.BOUNDS, 'infinite perception collapse', lambda: _infinite_perception(source)),
        _check(Suite.BOUNDS, 'thresholds', lambda: _thresholds(source)),
        _check(Suite.BOUNDS, 'sigma-hat oracle', lambda: _sigma_hat_oracle(source, rng, oracle_queries)),
        _check(Suite.BOUNDS, 'alpha-hat oracle', lambda: _alpha_hat_oracle(source, rng, oracle_queries)),
    ]


# Transportation inequalities

def talagrand_suite(source, seed=0, trials=1000, threads=1):
    reports = []

    def refined():
        reports.extend(run_talagrand_trials(source, trials, seed=seed, threads=threads))
        failures = [r for r in reports if not r.holds_refined]
        return not failures, '{}/{} hold'.format(len(reports) - len(failures), len(reports))

    def dominance():
        failures = [r for r in reports if not r.refined_dominates]
        return bool(reports) and not failures, '{} violations'.format(len(failures))

    def moment_gap():
        gap_reports = run_talagrand_trials(source, min(trials, 50), seed=seed + 1, threads=threads, check=moment_gap_check)
        failures = [r for r in gap_reports if not r.holds]
        return not failures, '{}/{} hold'.format(len(gap_reports) - len(failures), len(gap_reports))

    return [
        _check(Suite.TALAGRAND, 'refined inequality', refined),
        _check(Suite.TALAGRAND, 'refined below original', dominance),
        _check(Suite.TALAGRAND, 'gap relation', moment_gap),
    ]


# Scalar quantization

def _binary_anchor(source):
    _, rate, distortion = binary_quantizer(0.0, source)
    upper = upper_kl(RdpQuery(source, LOG_2, 0.0, INF, Measure.KL)).value
    expected = source.variance * (math.pi - 2) / math.pi

    passed = rate == LOG_2 and abs(distortion - expected) <= 1e-12 * source.variance and distortion < upper

    return passed, 'D = {:.6f}, upper = {:.6f}'.format(distortion / source.variance, upper / source.variance)


def _binary_dominance(source):
    worst = math.inf
    for rate in np.linspace(LOG_2 / 50, LOG_2, 50):
        binary = binary_bound_at_rate(rate, source)
        upper = upper_kl(RdpQuery(source, rate, 0.0, INF, Measure.KL)).value
        worst = min(worst, upper - binary, binary - shannon_dr(rate, source))

    return worst > 1e-6 * source.variance, 'smallest margin {:.3g}'.format(worst)


def _centroid_condition(source, seed):
    worst = 0.0
    for lam, n_max in [(0.0, 2), (0.0, 4), (0.3, 4), (1.0, 6)]:
        quantizer, _ = design_ecsq(source, lam * source.variance, n_max, seed=seed)
        probabilities, means, _ = cell_statistics(quantizer.boundaries, source)

        mean_error = abs(float(np.sum(probabilities * quantizer.levels)) - source.mean)
        orthogonality = abs(float(np.sum(probabilities * (means - quantizer.levels) * quantizer.levels)))
        worst = max(worst, mean_error, orthogonality)

    return worst <= 1e-8 * max(source.variance, 1.0), 'largest residual {:.3g}'.format(worst)


def _traced_curve(source, seed, threads):
    schedule = (np.geomspace(0.05, 5.0, 24) * source.variance).tolist()
    curve = trace_de_curve(source, schedule, 6, seed=seed, threads=threads)

    floor = min(d - shannon_dr(h, source) for h, d in curve)

    at_005 = interpolate_curve(curve, 0.05)
    at_020 = interpolate_curve(curve, 0.2)
    slope_005 = (source.variance - at_005) / (2 * 0.05 * source.variance)
    slope_020 = (source.variance - at_020) / (2 * 0.2 * source.variance)

    passed = floor >= -1e-10 * source.variance and \
        at_005 <= source.variance * (1 - 0.5 * 2 * 0.05) and \
        slope_005 >= slope_020 - 1e-12

    return passed, 'D(0.05) = {:.5f}, slopes {:.4f} >= {:.4f}'.format(at_005 / source.variance, slope_005, slope_020)


def ecsq_suite(source, seed=0, threads=1):
    return [
        _check(Suite.ECSQ, 'binary anchor', lambda: _binary_anchor(source)),
        _check(Suite.ECSQ, 'binary between Shannon and upper bound', lambda: _binary_dominance(source)),
        _check(Suite.ECSQ, 'centroid condition', lambda: _centroid_condition(source, seed)),
        _check(Suite.ECSQ, 'traced curve', lambda: _traced_curve(source, seed, threads)),
    ]


def run_suites(names, source, seed=0, trials=1000, threads=1):
    results = []
    for name in names:
        logger.info("Running the %s suite", name)

        if name == Suite.BOUNDS:
            results.extend(bounds_suite(source, seed=seed))
        elif name == Suite.TALAGRAND:
            results.extend(talagrand_suite(source, seed=seed, trials=trials, threads=threads))
        elif name == Suite.ECSQ:
            results.extend(ecsq_suite(source, seed=seed, threads=threads))

    return results
