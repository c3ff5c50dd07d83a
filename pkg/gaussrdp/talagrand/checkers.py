import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..exceptions import PreconditionException
from ..scalar.functions import gaussian_kl, gaussian_w2sq

from .estimators import kl_to_gaussian, mixture_moments, moment_matched_gaussian, w2sq_1d
from .models import GapReport, ScalarDistribution, TalagrandReport


logger = logging.getLogger(__name__)


HYPOTHESIS_TOL = 1e-9

MAX_COMPONENTS = 5


class Condition():
    MATCHED_MEAN = 'matched_mean'
    CAPPED_STD = 'capped_std'


def _talagrand_report(d, source):
    kl = kl_to_gaussian(d, source)
    w2sq = w2sq_1d(d, source)

    rhs_refined = 2 * source.variance * -math.expm1(-kl.value)
    rhs_original = 2 * source.variance * kl.value

    # Both right-hand sides are 2 sigma_X^2-Lipschitz in KL
    error_bound = w2sq.abs_error_bound + 2 * source.variance * kl.abs_error_bound

    return TalagrandReport(w2sq.value, kl.value, rhs_refined, rhs_original, error_bound)


def check_refined_talagrand(d, source):
    """
    W2^2(p_X, d) against 2 sigma_X^2 (1 - e^{-KL(d || p_X)}), for a law d with
    the source mean and a standard deviation at most sigma_X.
    """
    mean, variance = mixture_moments(d)
    scale = max(source.std, 1.0)

    if abs(mean - source.mean) > HYPOTHESIS_TOL * scale:
        raise PreconditionException("Mixture mean {} differs from the source mean {}.".format(mean, source.mean),
                                    Condition.MATCHED_MEAN)
    if math.sqrt(variance) > source.std + HYPOTHESIS_TOL * scale:
        raise PreconditionException("Mixture std {} exceeds the source std {}.".format(math.sqrt(variance), source.std),
                                    Condition.CAPPED_STD)

    return _talagrand_report(d, source)


def check_original_talagrand(d, source):
    """ W2^2(p_X, d) against 2 sigma_X^2 KL(d || p_X), for any mixture d. """
    return _talagrand_report(d, source)


def moment_gap_check(d, source):
    """
    W2^2(p_X, d) - W2^2(p_X, g) <= 2 sigma_X sigma_g (1 - e^{-(KL(d || p_X) - KL(g || p_X))})

    where g is the Gaussian with the moments of d.
    """
    mean, std = moment_matched_gaussian(d)

    kl = kl_to_gaussian(d, source)
    w2sq = w2sq_1d(d, source)

    lhs = w2sq.value - gaussian_w2sq(source, mean, std)
    kl_gap = kl.value - gaussian_kl(source, mean, std)
    rhs = 2 * source.std * std * -math.expm1(-kl_gap)

    # Near a zero KL gap the right-hand side moves by at most 2 sigma_X sigma_g e^{err} per unit of KL error
    error_bound = w2sq.abs_error_bound + 2 * source.std * std * math.exp(kl.abs_error_bound) * kl.abs_error_bound

    return GapReport(lhs, rhs, error_bound)


def random_mixture(rng, source, centred=True):
    """
    Draws a mixture with 1 to 5 components: Dirichlet weights, means uniform in
    mu_X +/- 2 sigma_X, stds uniform in [0.1 sigma_X, sigma_X].

    When centred, the mixture is shifted to the source mean and, if its std
    exceeds sigma_X, contracted about mu_X to std sigma_X.
    """
    count = int(rng.integers(1, MAX_COMPONENTS + 1))

    weights = rng.dirichlet(np.ones(count))
    weights = weights / weights.sum()
    means = source.mean + rng.uniform(-2 * source.std, 2 * source.std, count)
    stds = rng.uniform(0.1 * source.std, source.std, count)

    if centred:
        means = means - (np.sum(weights * means) - source.mean)

        std = math.sqrt(np.sum(weights * (stds ** 2 + (means - source.mean) ** 2)))
        if std > source.std:
            factor = source.std / std
            means = source.mean + (means - source.mean) * factor
            stds = stds * factor

    return ScalarDistribution(zip(weights, means, stds))


def _run_trial(seed_sequence, source, check, centred):
    rng = np.random.default_rng(seed_sequence)
    d = random_mixture(rng, source, centred=centred)

    return check(d, source)


def run_talagrand_trials(source, trials, seed=0, threads=1, check=check_refined_talagrand, centred=True):
    """
    Runs `check` on `trials` seeded random mixtures. Every trial has its own
    spawned seed, and reports are returned in seed order whatever the thread count.
    """
    seed_sequences = np.random.SeedSequence(seed).spawn(trials)

    logger.info("Running %d transportation inequality trials (seed %d, %d threads)", trials, seed, threads)

    with ThreadPoolExecutor(max_workers=max(threads, 1)) as executor:
        reports = list(executor.map(lambda s: _run_trial(s, source, check, centred), seed_sequences))

    return reports
