"""
Closed-form distortion-rate curves around entropy-constrained scalar
quantization of a Gaussian source.
"""

import math

from scipy import optimize, special, stats

from ..exceptions import DomainException, NumericalException
from ..scalar.models import as_ext_real, neg_exp

from .models import Quantizer


LOG_2 = math.log(2)

# R(theta) is below 1e-300 past this point
THETA_SEARCH_MAX = 40.0


def binary_rate(theta):
    """ Entropy in nats of the binary quantizer with threshold mu_X + theta sigma_X. """
    return float(special.entr(special.ndtr(-theta)) + special.entr(special.ndtr(theta)))


def binary_distortion(theta, source):
    """ sigma_X^2 - sigma_X^2 e^{-theta^2} / (2 pi Q(theta) (1 - Q(theta))). """
    upper = special.ndtr(-theta)
    if upper == 0:
        return source.variance

    lower = special.ndtr(theta)
    density = float(stats.norm.pdf(theta))

    return float(source.variance * (1 - density ** 2 / (upper * lower)))


def binary_quantizer(theta, source):
    """
    Two-cell quantizer split at mu_X + theta sigma_X with conditional-mean levels.

    Returns (quantizer, rate, distortion). Once the upper cell has no mass in
    floating point the single-cell quantizer is returned.
    """
    theta = float(theta)
    if not theta >= 0:
        raise DomainException("Binary quantizer needs theta >= 0, got {}.".format(theta))

    if special.ndtr(-theta) == 0:
        return Quantizer.single_cell(source), 0.0, source.variance

    quantizer = Quantizer.from_boundaries([source.mean + theta * source.std], source)

    return quantizer, binary_rate(theta), binary_distortion(theta, source)


def binary_bound_at_rate(rate, source):
    """ The binary construction's distortion at entropy `rate`, solving R(theta) = rate for theta >= 0. """
    rate = as_ext_real(rate, 'rate')
    if not 0 < rate <= LOG_2:
        raise DomainException("Binary bound needs a rate in (0, log 2], got {}.".format(rate))

    if rate == LOG_2:
        return binary_distortion(0.0, source)

    try:
        theta = optimize.brentq(lambda t: binary_rate(t) - rate, 0.0, THETA_SEARCH_MAX, xtol=1e-15, maxiter=200)
    except (RuntimeError, ValueError) as e:
        raise NumericalException("Binary rate inversion failed for R={}.".format(rate),
                                 diagnostics={'rate': rate, 'error': str(e)})

    return binary_distortion(theta, source)


def shannon_dr(rate, source):
    rate = as_ext_real(rate, 'rate')

    return source.variance * neg_exp(2 * rate)


def overline_de_expansion(rate, common_randomness, source):
    """ sigma_X^2 (1 - 2R + 2R e^{-2 Rc}): first-order expansion of the perception-free upper bound at low rate. """
    rate = as_ext_real(rate, 'rate')
    common_randomness = as_ext_real(common_randomness, 'common randomness')

    return source.variance * (1 - 2 * rate + 2 * rate * neg_exp(2 * common_randomness))


def de_low_rate_expansion(rate, source):
    """ sigma_X^2 (1 - 2R): first-order expansion of the scalar quantization curve at low rate. """
    rate = as_ext_real(rate, 'rate')

    return source.variance * (1 - 2 * rate)
