"""
Where the improved W2 lower bound departs from the plain one.
"""

import math

from ..exceptions import DomainException
from ..scalar.functions import xi
from ..scalar.models import INF, GaussianSource, as_ext_real, neg_exp, positive_part

from .models import ThresholdResult


# Relative size of zeta_1 below which the quadratic in z is treated as linear
LINEAR_ZETA_TOL = 1e-12


def _is_open_rate(value):
    return 0 < value < INF


def strictness_threshold_p(rate, common_randomness, source=GaussianSource()):
    """
    P*(R, Rc) = sigma_X^2 (2 - e^{-2R} - 2 xi(R, Rc)).

    The improved W2 lower bound is strictly larger than the plain one exactly
    when 0 < P < P*, for R and Rc in (0, inf). At the boundary values of R or
    Rc the two bounds coincide and the regime is NO_GAP.
    """
    rate = as_ext_real(rate, 'rate')
    common_randomness = as_ext_real(common_randomness, 'common randomness')

    threshold = source.variance * (2 - neg_exp(2 * rate) - 2 * xi(rate, common_randomness))

    if _is_open_rate(rate) and _is_open_rate(common_randomness):
        regime = ThresholdResult.Regime.CLOSED_FORM
    else:
        regime = ThresholdResult.Regime.NO_GAP

    return ThresholdResult(positive_part(threshold), regime)


def lower_bound_saturation_p(rate, common_randomness, source=GaussianSource()):
    """
    Smallest P at which the improved W2 lower bound reaches its P = inf value sigma_X^2 e^{-2R}.

    Coincides with P*(R, Rc).
    """
    return strictness_threshold_p(rate, common_randomness, source).threshold


def is_strict_improvement(rate, common_randomness, perception, source=GaussianSource()):
    threshold = strictness_threshold_p(rate, common_randomness, source)
    perception = as_ext_real(perception, 'perception')

    return threshold.regime == ThresholdResult.Regime.CLOSED_FORM and 0 < perception < threshold.threshold


def strictness_threshold_r(common_randomness, perception, source=GaussianSource()):
    """
    R*(Rc, P): the rate below which the improved W2 lower bound is strictly tighter
    for fixed Rc in (0, inf) and P in (0, inf].

    With z = e^{-2R}, R* = -log(z) / 2 where z is the smaller root of
    zeta_1 z^2 - zeta_2 z + zeta_3 = 0:

        zeta_1 = 4 e^{-2 Rc} - 1
        zeta_2 = 4 e^{-2 Rc} + 2 P / sigma_X^2
        zeta_3 = (4 sigma_X^2 - P) P / sigma_X^4

    The equation is linear when Rc = log 2. R* is 0 once P >= sigma_X^2.
    """
    common_randomness = as_ext_real(common_randomness, 'common randomness')
    perception = as_ext_real(perception, 'perception')

    if not _is_open_rate(common_randomness):
        raise DomainException("R* needs Rc in (0, inf), got {}.".format(common_randomness))
    if perception == 0:
        raise DomainException("R* needs P > 0.")

    if perception >= source.variance:
        return ThresholdResult(0.0, ThresholdResult.Regime.PERCEPTION_ABOVE_VARIANCE)

    scaled_decay = 4 * neg_exp(2 * common_randomness)
    ratio = perception / source.variance

    zeta_1 = scaled_decay - 1
    zeta_2 = scaled_decay + 2 * ratio
    zeta_3 = (4 - ratio) * ratio

    if abs(zeta_1) <= LINEAR_ZETA_TOL * scaled_decay:
        z = zeta_3 / zeta_2
        regime = ThresholdResult.Regime.LINEAR
    else:
        # Smaller root, rationalized
        z = 2 * zeta_3 / (zeta_2 + math.sqrt(max(zeta_2 ** 2 - 4 * zeta_1 * zeta_3, 0.0)))
        regime = ThresholdResult.Regime.QUADRATIC

    return ThresholdResult(positive_part(-0.5 * math.log(z)), regime)

