import math

import numpy as np
from scipy import optimize, special

from ..exceptions import DomainException, NumericalException

from .models import INF, as_ext_real, one_minus_neg_exp


# Absolute tolerance of sigma_of_p on t = log(sigma / sigma_X).
SIGMA_OF_P_LOG_TOL = 1e-14

SIGMA_OF_P_MAX_ITERATIONS = 200


def psi(sigma_hat, source):
    """
    KL divergence of N(mu_X, sigma_hat^2) from the source N(mu_X, sigma_X^2):

        psi(s) = log(sigma_X / s) + (s^2 - sigma_X^2) / (2 sigma_X^2)

    Accepts a scalar or a numpy array of positive values.
    """
    values = np.asarray(sigma_hat, dtype=float)
    if np.any(~(values > 0)):
        raise DomainException("psi is only defined for positive sigma, got {}.".format(sigma_hat))

    result = np.log(source.std / values) + (values ** 2 - source.variance) / (2 * source.variance)

    if result.ndim == 0:
        return float(result)
    return result


def _psi_of_log_ratio(t):
    # psi(sigma_X e^t) = -t + (e^{2t} - 1) / 2
    return -t + math.expm1(2 * t) / 2


def sigma_of_p(perception, source):
    """ The unique sigma in [0, sigma_X] with psi(sigma) = P (0 when P is infinite). """
    perception = as_ext_real(perception, 'perception')

    if perception == INF:
        return 0.0
    if perception == 0:
        return source.std

    # psi is strictly decreasing in t on (-inf, 0] and psi(-P - 1) > P
    try:
        t = optimize.brentq(lambda t: _psi_of_log_ratio(t) - perception,
                            -perception - 1.0,
                            0.0,
                            xtol=SIGMA_OF_P_LOG_TOL,
                            rtol=4 * np.finfo(float).eps,
                            maxiter=SIGMA_OF_P_MAX_ITERATIONS)
    except (RuntimeError, ValueError) as e:
        raise NumericalException("sigma(P) root search failed for P={}.".format(perception),
                                 diagnostics={'perception': perception, 'error': str(e)})

    return source.std * math.exp(t)


def xi(rate, common_randomness):
    """ sqrt((1 - e^{-2R}) (1 - e^{-2(R + Rc)})), in [0, 1]. """
    rate = as_ext_real(rate, 'rate')
    common_randomness = as_ext_real(common_randomness, 'common randomness')

    return math.sqrt(one_minus_neg_exp(2 * rate) * one_minus_neg_exp(2 * (rate + common_randomness)))


def nu_of_p(perception, source):
    """ log(2 sigma_X^2 / (2 sigma_X^2 - P)_+), infinite once P reaches 2 sigma_X^2. """
    perception = as_ext_real(perception, 'perception')

    if perception >= 2 * source.variance:
        return INF

    return -math.log1p(-perception / (2 * source.variance))


def gaussian_kl(source, mean2, std2):
    if not std2 > 0:
        raise DomainException("Gaussian KL divergence needs a positive standard deviation, got {}.".format(std2))

    return math.log(source.std / std2) + ((source.mean - mean2) ** 2 + std2 ** 2 - source.variance) / (2 * source.variance)


def gaussian_w2sq(source, mean2, std2):
    if std2 < 0:
        raise DomainException("Standard deviation must be nonnegative, got {}.".format(std2))

    return (source.mean - mean2) ** 2 + (source.std - std2) ** 2


def std_normal_cdf(theta):
    return float(special.ndtr(theta))

