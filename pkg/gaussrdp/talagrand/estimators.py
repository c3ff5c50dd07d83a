"""
Numerical KL divergence and squared Wasserstein-2 distance between a Gaussian
mixture and the Gaussian source.
"""

import functools
import math

import numpy as np
from scipy import integrate, special, stats

from ..exceptions import NumericalException

from .models import DivergenceEstimate


# KL quadrature

KL_DOMAIN_STDS = 12.0

KL_ABS_TOL = 1e-11

KL_MAX_ERROR = 1e-9

KL_SUBDIVISIONS = 400


# W2 quadrature

QUANTILE_CLIP = 1e-9

W2_NODES = 2048

QUANTILE_BISECTION_STEPS = 200

QUANTILE_PROBABILITY_TOL = 1e-13


def mixture_moments(d):
    mean = float(np.sum(d.weights * d.means))
    second_moment = float(np.sum(d.weights * (d.stds ** 2 + d.means ** 2)))

    return mean, max(second_moment - mean ** 2, 0.0)


def moment_matched_gaussian(d):
    mean, variance = mixture_moments(d)

    return mean, math.sqrt(variance)


def _kl_domain(d, source):
    mean, variance = mixture_moments(d)
    widest = max(source.std, math.sqrt(variance), float(np.max(d.stds)))
    lo = min(mean, source.mean, float(np.min(d.means))) - KL_DOMAIN_STDS * widest
    hi = max(mean, source.mean, float(np.max(d.means))) + KL_DOMAIN_STDS * widest

    return lo, hi


def kl_to_gaussian(d, source):
    """
    KL divergence of the mixture d from the source, by adaptive quadrature of
    p(x) (log p(x) - log q(x)) with log-densities taken through log-sum-exp.
    """
    lo, hi = _kl_domain(d, source)
    breakpoints = sorted(set(d.means.tolist()) | {source.mean})

    def integrand(x):
        log_p = float(d.log_pdf(x))
        log_q = float(stats.norm.logpdf(x, loc=source.mean, scale=source.std))

        return math.exp(log_p) * (log_p - log_q)

    value, error, info = integrate.quad(integrand,
                                        lo,
                                        hi,
                                        points=breakpoints,
                                        epsabs=KL_ABS_TOL,
                                        epsrel=0.0,
                                        limit=KL_SUBDIVISIONS,
                                        full_output=True)[:3]

    if error > KL_MAX_ERROR:
        raise NumericalException("KL quadrature did not converge: error {} > {}.".format(error, KL_MAX_ERROR),
                                 diagnostics={'error': error, 'evaluations': info.get('neval'), 'domain': (lo, hi)})

    return DivergenceEstimate(max(value, 0.0), error)


def mixture_quantile(d, probabilities):
    probabilities = np.asarray(probabilities, dtype=float)

    spread = float(np.max(d.stds))
    lo = np.full_like(probabilities, float(np.min(d.means)) - 40 * spread)
    hi = np.full_like(probabilities, float(np.max(d.means)) + 40 * spread)

    if np.any(d.cdf(lo) > probabilities) or np.any(d.cdf(hi) < probabilities):
        raise NumericalException("Quantile bracket does not contain the target probabilities.",
                                 diagnostics={'bracket': (float(lo[0]), float(hi[0]))})

    for _ in range(QUANTILE_BISECTION_STEPS):
        middle = 0.5 * (lo + hi)
        below = d.cdf(middle) < probabilities
        lo = np.where(below, middle, lo)
        hi = np.where(below, hi, middle)

    quantiles = 0.5 * (lo + hi)

    # Unresolved only when the bracket is still wider than float resolution
    residual = np.abs(d.cdf(quantiles) - probabilities)
    unresolved = (residual > QUANTILE_PROBABILITY_TOL) & (hi - lo > 4 * np.spacing(np.abs(quantiles) + 1.0))
    if np.any(unresolved):
        raise NumericalException("Quantile bisection did not converge.",
                                 diagnostics={'residual': float(np.max(residual))})

    return quantiles


@functools.lru_cache(maxsize=None)
def _legendre_rule(nodes):
    return np.polynomial.legendre.leggauss(nodes)


def _gauss_legendre(fn, a, b, nodes):
    x, w = _legendre_rule(nodes)
    half = 0.5 * (b - a)

    return half * float(np.sum(w * fn(half * x + 0.5 * (a + b))))


def _tail_second_moment(d, source, cut, upper):
    """ E[(Y - mu_X)^2; Y beyond cut] for the mixture Y, lower or upper tail. """
    a = (cut - d.means) / d.stds
    offset = d.means - source.mean
    density = stats.norm.pdf(a)

    if upper:
        mass = special.ndtr(-a)
        moment = offset ** 2 * mass + 2 * offset * d.stds * density + d.stds ** 2 * (mass + a * density)
    else:
        mass = special.ndtr(a)
        moment = offset ** 2 * mass - 2 * offset * d.stds * density + d.stds ** 2 * (mass - a * density)

    return float(np.sum(d.weights * moment))


def _clipped_tail_bound(d, source):
    """ Bound on the W2 integrand mass outside [clip, 1 - clip], from (a - b)^2 <= 2 a^2 + 2 b^2. """
    z = float(special.ndtri(1 - QUANTILE_CLIP))

    # Source tail: E[Z^2; Z > z] = Q(z) + z phi(z), per side
    source_tail = source.variance * (QUANTILE_CLIP + z * float(stats.norm.pdf(z)))

    lower_cut, upper_cut = mixture_quantile(d, [QUANTILE_CLIP, 1 - QUANTILE_CLIP])
    mixture_tail = _tail_second_moment(d, source, lower_cut, upper=False) + \
        _tail_second_moment(d, source, upper_cut, upper=True)

    return 2 * (2 * source_tail + mixture_tail)


def w2sq_1d(d, source):
    """
    Squared Wasserstein-2 distance through the monotone coupling:

        int_0^1 (F_X^{-1}(u) - F_d^{-1}(u))^2 du

    over u in [clip, 1 - clip]. The integral is taken in source-quantile
    coordinates (u = Phi(z)), where the integrand is smooth, with a fixed
    Gauss-Legendre rule. The error bound is the difference against a rule with
    half the nodes plus a bound on the clipped tails.
    """
    z_lo = float(special.ndtri(QUANTILE_CLIP))
    z_hi = float(special.ndtri(1 - QUANTILE_CLIP))

    def integrand(z):
        reconstruction = mixture_quantile(d, special.ndtr(z))
        return (source.mean + source.std * z - reconstruction) ** 2 * stats.norm.pdf(z)

    fine = _gauss_legendre(integrand, z_lo, z_hi, W2_NODES)
    coarse = _gauss_legendre(integrand, z_lo, z_hi, W2_NODES // 2)

    error = abs(fine - coarse) + _clipped_tail_bound(d, source)

    return DivergenceEstimate(max(fine, 0.0), error)
