"""
Closed-form and numerically optimized bounds on the quadratic Gaussian
distortion-rate-perception function with limited common randomness.

All values are in absolute distortion units (source units squared).
"""

import logging
import math

import numpy as np

from ..exceptions import DomainException, NumericalException, StateException, UsageException
from ..oracle.models import GridSpec
from ..oracle.searches import grid_min
from ..scalar.functions import nu_of_p, psi, sigma_of_p, xi
from ..scalar.models import INF, Measure, neg_exp, one_minus_neg_exp, positive_part

from .models import BoundResult


logger = logging.getLogger(__name__)


SIGMA_GRID_POINTS = 4097

# Golden-section stopping width, relative to sigma_X
SIGMA_REFINE_TOL = 1e-12

# Rounding allowance on the alpha-hat discriminant, relative to sigma_X^4
DISCRIMINANT_SLACK = 1e-12

# Relative tolerance deciding the linear (double-root) branch of alpha-hat
LINEAR_BRANCH_TOL = 1e-12


class SigmaHatCase():
    UNCONSTRAINED = 'unconstrained'  # sigma_X sqrt(1 - e^{-2R})
    PERCEPTION_EDGE_HIGH = 'perception_edge_high'  # sigma_X - sqrt(P), sqrt(P)/sigma_X in [e^{-(R+Rc)}, 1 - sqrt(1 - e^{-2R}))
    SHIFTED = 'shifted'  # sqrt(sigma_X^2 (1 - e^{-2R}) + (sigma_X e^{-(R+Rc)} - sqrt(P))^2)
    PERCEPTION_EDGE_LOW = 'perception_edge_low'  # sigma_X - sqrt(P), sqrt(P)/sigma_X below nu(R, Rc) and e^{-(R+Rc)}
    ZERO_RATE = 'zero_rate'
    INFINITE_RATE = 'infinite_rate'

    ALL = {
        UNCONSTRAINED,
        PERCEPTION_EDGE_HIGH,
        SHIFTED,
        PERCEPTION_EDGE_LOW,
        ZERO_RATE,
        INFINITE_RATE,
    }


class AlphaHatCase():
    DEGENERATE = 'degenerate'  # sigma_hat = sigma_X - sqrt(P)
    LINEAR = 'linear'  # (sigma_X^2 + sigma_hat^2 - P)^2 = 4 sigma_X^2 sigma_hat^2 e^{-2(R+Rc)}
    QUADRATIC = 'quadratic'


def _check_measure(q, measure):
    if q.measure != measure:
        raise UsageException("Bound needs a '{}' query, got '{}'.".format(measure, q.measure))


def _sqrt_ext(x):
    return INF if x == INF else math.sqrt(x)


def _perception_floor(q):
    return positive_part(q.source.std - _sqrt_ext(q.perception))


# KL

def lower_kl(q):
    """
    Lower bound on D(R, Rc, P | KL):

        min over s in [sigma(P), sigma_X] of
        sigma_X^2 + s^2 - 2 sigma_X s sqrt((1 - e^{-2R})(1 - e^{-2(R + Rc + P - psi(s))}))

    The objective is not known to be unimodal, so it is scanned on a uniform
    grid and refined by golden-section search around the best grid point.
    """
    _check_measure(q, Measure.KL)

    source = q.source
    sigma = source.std

    if q.rate == INF:
        return BoundResult(0.0, minimizer_sigma=sigma)

    rate_factor = one_minus_neg_exp(2 * q.rate)
    total_rate = q.total_rate
    perception = q.perception

    def objective(s):
        s = np.asarray(s, dtype=float)

        if perception == INF or total_rate == INF:
            inner = np.ones_like(s)
        else:
            excess = np.maximum(perception - psi(s, source), 0.0)
            inner = -np.expm1(-2 * (total_rate + excess))

        return source.variance + s ** 2 - 2 * sigma * s * np.sqrt(rate_factor * inner)

    lo = sigma_of_p(perception, source)

    if sigma - lo <= SIGMA_REFINE_TOL * sigma:
        value = float(objective(np.array([sigma]))[0])
        return BoundResult(positive_part(value), minimizer_sigma=sigma)

    argmin, value = grid_min(objective,
                             GridSpec(lo, sigma, SIGMA_GRID_POINTS),
                             vectorized=True,
                             tol=SIGMA_REFINE_TOL * sigma)

    return BoundResult(positive_part(value), minimizer_sigma=argmin)


def upper_kl(q):
    """ sigma_X^2 - sigma_X^2 xi^2 + (sigma(P) - sigma_X xi)_+^2, attained at std max(sigma(P), sigma_X xi). """
    _check_measure(q, Measure.KL)

    source = q.source
    factor = xi(q.rate, q.common_randomness)
    floor = sigma_of_p(q.perception, source)

    value = source.variance * (1 - factor ** 2) + positive_part(floor - source.std * factor) ** 2

    return BoundResult(value, minimizer_sigma=max(floor, source.std * factor))


# W2

def nu_rc(rate, common_randomness):
    """ (e^{-2R} - e^{-2(R + Rc)}) / (2 - 2 e^{-(R + Rc)}), for R > 0. """
    if not rate > 0:
        raise DomainException("nu(R, Rc) needs R > 0, got {}.".format(rate))

    total = rate + common_randomness

    return (neg_exp(2 * rate) - neg_exp(2 * total)) / (2 * one_minus_neg_exp(total))


def _w2_objective(s, q, shift):
    """ sigma_X^2 + s^2 - 2 sigma_X sqrt((1 - e^{-2R})(s^2 - shift^2)), vectorized over s. """
    source = q.source
    s = np.asarray(s, dtype=float)

    radicand = np.maximum(s ** 2 - shift ** 2, 0.0)

    return source.variance + s ** 2 - 2 * source.std * np.sqrt(one_minus_neg_exp(2 * q.rate) * radicand)


def sigma_hat_w2(q):
    """ The minimizer of the W2 lower bound objective and the name of the case that produced it. """
    _check_measure(q, Measure.W2SQ)

    sigma = q.source.std

    if q.rate == 0:
        return _perception_floor(q), SigmaHatCase.ZERO_RATE
    if q.rate == INF:
        return sigma, SigmaHatCase.INFINITE_RATE

    root_ratio = _sqrt_ext(q.perception) / sigma
    total_decay = neg_exp(q.total_rate)
    unconstrained = math.sqrt(one_minus_neg_exp(2 * q.rate))
    nu = nu_rc(q.rate, q.common_randomness)

    if root_ratio >= max(1 - unconstrained, total_decay):
        return sigma * unconstrained, SigmaHatCase.UNCONSTRAINED
    elif total_decay <= root_ratio < 1 - unconstrained:
        return sigma - _sqrt_ext(q.perception), SigmaHatCase.PERCEPTION_EDGE_HIGH
    elif nu <= root_ratio < total_decay:
        shift = sigma * total_decay - _sqrt_ext(q.perception)
        return math.sqrt(q.source.variance * unconstrained ** 2 + shift ** 2), SigmaHatCase.SHIFTED
    else:
        return sigma - _sqrt_ext(q.perception), SigmaHatCase.PERCEPTION_EDGE_LOW


def lower_w2(q):
    """
    Lower bound on D(R, Rc, P | W2^2):

        min over s in [(sigma_X - sqrt(P))_+, sigma_X] of
        sigma_X^2 + s^2 - 2 sigma_X sqrt((1 - e^{-2R})(s^2 - (sigma_X e^{-(R + Rc)} - sqrt(P))_+^2))

    evaluated at its closed-form minimizer.
    """
    _check_measure(q, Measure.W2SQ)

    sigma_hat, case = sigma_hat_w2(q)

    if case == SigmaHatCase.INFINITE_RATE:
        return BoundResult(0.0, minimizer_sigma=sigma_hat)

    shift = positive_part(q.source.std * neg_exp(q.total_rate) - _sqrt_ext(q.perception))
    value = float(_w2_objective(np.array([sigma_hat]), q, shift)[0])

    return BoundResult(positive_part(value), minimizer_sigma=sigma_hat)


def upper_w2(q):
    _check_measure(q, Measure.W2SQ)

    source = q.source
    factor = xi(q.rate, q.common_randomness)
    floor = _perception_floor(q)

    value = source.variance * (1 - factor ** 2) + positive_part(floor - source.std * factor) ** 2

    return BoundResult(value, minimizer_sigma=max(floor, source.std * factor))


# Improved W2 lower bound

def _delta_plus_values(s, alpha, sigma, decay, perception):
    radicand = sigma ** 2 - alpha * (sigma ** 2 + s ** 2 - perception) + alpha ** 2 * s ** 2
    numerator = sigma * decay - np.sqrt(np.maximum(radicand, 0.0))

    return np.maximum(numerator, 0.0) / alpha


def delta_plus(sigma_hat, alpha, q):
    """
    delta_+(s, alpha) = (sigma_X e^{-(R + Rc)} - sqrt(sigma_X^2 - alpha (sigma_X^2 + s^2 - P) + alpha^2 s^2))_+ / alpha

    A negative radicand is clamped to 0. At alpha = 1 this is (sigma_X e^{-(R + Rc)} - sqrt(P))_+.
    """
    if not alpha > 0:
        raise DomainException("delta_+ needs alpha > 0, got {}.".format(alpha))
    if sigma_hat < 0:
        raise DomainException("delta_+ needs a nonnegative sigma, got {}.".format(sigma_hat))

    if q.perception == INF:
        return 0.0

    decay = neg_exp(q.total_rate)

    return float(_delta_plus_values(np.float64(sigma_hat), alpha, q.source.std, decay, q.perception))


def _positive_sup_mask(s, sigma, decay, perception):
    """ Where sup over alpha of delta_+ is positive: P < sigma_X^2 + s^2 - 2 sigma_X s sqrt(1 - e^{-2(R + Rc)}). """
    if perception == INF:
        return np.zeros_like(s, dtype=bool)

    spread = math.sqrt(max(1 - decay ** 2, 0.0))

    return perception < sigma ** 2 + s ** 2 - 2 * sigma * s * spread


def _alpha_hat_values(s, sigma, decay, perception):
    """
    Vectorized maximizer of delta over alpha > 0, inside the positive-supremum region.

    The smaller root of the quadratic in alpha is evaluated in its rationalized
    form 2 sigma_X^2 t / (b t + e^{-(R+Rc)} sqrt((4 sigma_X^2 s^2 - b^2) t)), with
    b = sigma_X^2 + s^2 - P and t = 1 - e^{-2(R + Rc)}; it reduces to
    sigma_X^2 / b on the linear branch and to sigma_X / s when s = sigma_X - sqrt(P).
    """
    t = 1 - decay ** 2
    b = sigma ** 2 + s ** 2 - perception
    discriminant = (4 * sigma ** 2 * s ** 2 - b ** 2) * t

    slack = DISCRIMINANT_SLACK * sigma ** 4
    if np.any(discriminant < -slack):
        worst = float(np.min(discriminant))
        raise NumericalException("Negative alpha-hat discriminant {} (case dispatch error).".format(worst),
                                 diagnostics={'discriminant': worst, 'perception': perception})

    discriminant = np.maximum(discriminant, 0.0)

    return 2 * sigma ** 2 * t / (b * t + decay * np.sqrt(discriminant))


def alpha_hat(sigma_hat, q):
    """
    The unique maximizer over alpha > 0 of delta_+(sigma_hat, alpha).

    Only defined where the supremum is positive; raises StateException elsewhere.
    """
    sigma = q.source.std
    decay = neg_exp(q.total_rate)

    if not _positive_sup_mask(np.float64(sigma_hat), sigma, decay, q.perception):
        raise StateException("sup over alpha of delta_+ is not positive at sigma={} for {}.".format(sigma_hat, q))
    if decay == 1.0:
        raise StateException("The supremum over alpha is not attained when R + Rc = 0.")

    return float(_alpha_hat_values(np.float64(sigma_hat), sigma, decay, q.perception))


def alpha_hat_case(sigma_hat, q):
    sigma = q.source.std
    perception = q.perception

    if abs(sigma_hat - (sigma - _sqrt_ext(perception))) <= LINEAR_BRANCH_TOL * sigma:
        return AlphaHatCase.DEGENERATE

    b = q.source.variance + sigma_hat ** 2 - perception
    leading = b ** 2 - 4 * q.source.variance * sigma_hat ** 2 * neg_exp(2 * q.total_rate)
    if abs(leading) <= LINEAR_BRANCH_TOL * q.source.variance ** 2:
        return AlphaHatCase.LINEAR

    return AlphaHatCase.QUADRATIC


def _sup_delta_plus_values(s, q):
    sigma = q.source.std
    decay = neg_exp(q.total_rate)
    result = np.zeros_like(s, dtype=float)

    if decay == 1.0:
        return result

    mask = _positive_sup_mask(s, sigma, decay, q.perception)
    if np.any(mask):
        inside = s[mask]
        alphas = _alpha_hat_values(inside, sigma, decay, q.perception)
        result[mask] = _delta_plus_values(inside, alphas, sigma, decay, q.perception)

    return result


def improved_lower_w2(q):
    """
    Improved lower bound on D(R, Rc, P | W2^2):

        min over s in [(sigma_X - sqrt(P))_+, sigma_X] of sup over alpha > 0 of
        sigma_X^2 + s^2 - 2 sigma_X sqrt((1 - e^{-2R})(s^2 - delta_+^2(s, alpha)))

    The inner supremum is closed-form (alpha_hat); the outer minimum is a grid
    scan with golden-section refinement that also evaluates the closed-form
    minimizer of the plain W2 lower bound.
    """
    _check_measure(q, Measure.W2SQ)

    source = q.source
    sigma = source.std

    if q.rate == INF:
        return BoundResult(0.0, minimizer_sigma=sigma)
    if q.rate == 0:
        floor = _perception_floor(q)
        return BoundResult(source.variance + floor ** 2, minimizer_sigma=floor)

    rate_factor = one_minus_neg_exp(2 * q.rate)

    def objective(s):
        s = np.asarray(s, dtype=float)
        shift = _sup_delta_plus_values(s, q)
        radicand = np.maximum(s ** 2 - shift ** 2, 0.0)

        return source.variance + s ** 2 - 2 * sigma * np.sqrt(rate_factor * radicand)

    lo = _perception_floor(q)

    if sigma - lo <= SIGMA_REFINE_TOL * sigma:
        argmin = sigma
        value = float(objective(np.array([sigma]))[0])
    else:
        sigma_hat, _ = sigma_hat_w2(q)
        argmin, value = grid_min(objective,
                                 GridSpec(lo, sigma, SIGMA_GRID_POINTS),
                                 vectorized=True,
                                 extra_points=[sigma_hat],
                                 tol=SIGMA_REFINE_TOL * sigma)

    decay = neg_exp(q.total_rate)
    if decay < 1.0 and _positive_sup_mask(np.float64(argmin), sigma, decay, q.perception):
        maximizer = alpha_hat(argmin, q)
    else:
        maximizer = None

    logger.debug("Improved W2 lower bound %s at sigma=%s alpha=%s for %s", value, argmin, maximizer, q)

    return BoundResult(positive_part(value), minimizer_sigma=argmin, maximizer_alpha=maximizer)


def improvement_gap(q):
    return improved_lower_w2(q).value - lower_w2(q).value


# Bounds induced through the refined transportation inequality

def induced_lower_kl(q):
    _check_measure(q, Measure.KL)

    perception = 2 * q.source.variance * one_minus_neg_exp(q.perception)

    return lower_w2(q.replacing(perception=perception, measure=Measure.W2SQ))


def induced_upper_w2(q):
    _check_measure(q, Measure.W2SQ)

    perception = nu_of_p(q.perception, q.source)

    return upper_kl(q.replacing(perception=perception, measure=Measure.KL))
