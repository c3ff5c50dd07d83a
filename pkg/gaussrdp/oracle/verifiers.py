"""
Brute-force counterparts of the closed-form optimizers, kept independent of
the code paths they check.
"""

import itertools
import math

import numpy as np

from ..bounds.calculators import delta_plus
from ..ecsq.models import Quantizer, quantizer_metrics
from ..exceptions import DomainException, UsageException

from .models import GridSpec
from .searches import grid_max


DEFAULT_ALPHA_GRID = GridSpec(1e-3, 1e3, 2001, spacing=GridSpec.Spacing.LOG)

BRUTE_FORCE_BUDGET = 10 ** 7


def grid_sup_alpha(sigma_hat, q, grid=DEFAULT_ALPHA_GRID):
    """ Scans delta_+(sigma_hat, alpha) over a (log-spaced) alpha grid and refines the best point. """
    if not grid.lo > 0:
        raise DomainException("alpha grid must start above 0, got {}.".format(grid.lo))

    return grid_max(lambda alpha: delta_plus(sigma_hat, alpha, q), grid)


def lower_w2_objective(q):
    """ The W2 lower bound objective in sigma_hat, written out from its definition. """
    sigma = q.source.std
    rate_factor = 1 - math.exp(-2 * q.rate)
    shift = max(sigma * math.exp(-(q.rate + q.common_randomness)) - math.sqrt(q.perception), 0.0)

    def objective(s):
        return sigma ** 2 + s ** 2 - 2 * sigma * math.sqrt(rate_factor * max(s * s - shift * shift, 0.0))

    return objective


def lower_kl_objective(q):
    sigma = q.source.std
    rate_factor = 1 - math.exp(-2 * q.rate)

    def objective(s):
        divergence = math.log(sigma / s) + (s * s - sigma ** 2) / (2 * sigma ** 2)
        exponent = q.rate + q.common_randomness + max(q.perception - divergence, 0.0)
        return sigma ** 2 + s ** 2 - 2 * sigma * s * math.sqrt(rate_factor * (1 - math.exp(-2 * exponent)))

    return objective


def min_sup_improved_w2(q, sigma_points=401, alpha_grid=DEFAULT_ALPHA_GRID):
    """
    min over a sigma grid of max over an alpha grid of the improved W2 objective.

    It approaches the closed-form bound as both grids are refined.
    """
    sigma = q.source.std
    rate_factor = 1 - math.exp(-2 * q.rate)
    lo = max(sigma - math.sqrt(q.perception), 0.0)

    decay = math.exp(-(q.rate + q.common_randomness))
    s = np.linspace(lo, sigma, sigma_points)[:, np.newaxis]
    alpha = alpha_grid.values[np.newaxis, :]

    radicand = np.maximum(sigma ** 2 - alpha * (sigma ** 2 + s ** 2 - q.perception) + alpha ** 2 * s ** 2, 0.0)
    shift = np.max(np.maximum(sigma * decay - np.sqrt(radicand), 0.0) / alpha, axis=1)

    s = s[:, 0]
    values = sigma ** 2 + s ** 2 - 2 * sigma * np.sqrt(rate_factor * np.maximum(s ** 2 - shift ** 2, 0.0))

    return float(np.min(values))


def _pareto_front(points):
    front = []
    for entropy, distortion in sorted(points):
        if not front or distortion < front[-1][1]:
            front.append((entropy, distortion))

    return front


def brute_quantizer_search(source, n, boundary_grid):
    """
    Every placement of at most n - 1 boundaries on the grid, each with centroid
    levels. Returns the Pareto-minimal (entropy, distortion) pairs.
    """
    if n not in (2, 3):
        raise DomainException("Brute-force quantizer search supports 2 or 3 cells, got {}.".format(n))

    values = boundary_grid.values
    evaluations = sum(math.comb(len(values), k) for k in range(n))
    if evaluations > BRUTE_FORCE_BUDGET:
        raise UsageException("Brute-force search needs {} evaluations, over the budget of {}.".format(
            evaluations, BRUTE_FORCE_BUDGET))

    points = []
    for k in range(n):
        for boundaries in itertools.combinations(values, k):
            quantizer = Quantizer.from_boundaries(boundaries, source)
            metrics = quantizer_metrics(quantizer, source)
            points.append((metrics.entropy, metrics.distortion))

    return _pareto_front(points)
