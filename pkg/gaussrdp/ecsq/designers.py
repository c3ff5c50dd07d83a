import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import special

from ..bounds.calculators import upper_kl
from ..exceptions import DomainException, NumericalException
from ..scalar.models import INF, Measure, RdpQuery

from .models import Quantizer, cell_statistics, quantizer_metrics


logger = logging.getLogger(__name__)


CONVERGENCE_TOL = 1e-10

MAX_ITERATIONS = 10000

EMPTY_CELL_MASS = 1e-12

JITTER = 0.1  # in sigma_X

STARTS_PER_LAMBDA = 3


def lower_envelope_boundaries(levels, probabilities, lagrange_multiplier):
    """
    Cells of the pointwise minimum over i of (x - y_i)^2 - lambda log p_i.

    Dropping the common x^2, each cost is the line -2 y_i x + y_i^2 - lambda log p_i,
    so the cells are the pieces of the lower envelope of these lines. Returns the
    indices of the levels that own a cell (ascending) and the boundaries between them.
    """
    order = np.argsort(levels, kind='stable')
    intercepts = levels ** 2 - lagrange_multiplier * np.log(probabilities)

    def crossing(i, j):
        # x where line j (larger level) takes over from line i
        return (intercepts[j] - intercepts[i]) / (2 * (levels[j] - levels[i]))

    hull = []
    crossings = []
    for j in order:
        if hull and levels[hull[-1]] == levels[j]:
            if intercepts[j] >= intercepts[hull[-1]]:
                continue
            hull.pop()
            if crossings:
                crossings.pop()

        while hull:
            x = crossing(hull[-1], j)
            if crossings and x <= crossings[-1]:
                hull.pop()
                crossings.pop()
            else:
                break

        if hull:
            crossings.append(crossing(hull[-1], j))
        hull.append(j)

    return np.array(hull, dtype=int), np.array(crossings, dtype=float)


class LagrangianDesigner():
    """
    Entropy-penalized Lloyd descent on D + lambda H.

    Each iteration assigns cells by the lower envelope of the penalized costs,
    moves levels to the cell centroids and probabilities to the cell masses.
    Cells whose mass falls under EMPTY_CELL_MASS are removed. The Lagrangian
    cost of every iterate is kept in `costs`.
    """

    def __init__(self, source, lagrange_multiplier, max_iterations=MAX_ITERATIONS, tol=CONVERGENCE_TOL):
        self.source = source
        self.lagrange_multiplier = lagrange_multiplier
        self.max_iterations = max_iterations
        self.tol = tol
        self.costs = []

    def _step(self, levels, probabilities):
        while True:
            owners, boundaries = lower_envelope_boundaries(levels, probabilities, self.lagrange_multiplier)
            masses, means, _ = cell_statistics(boundaries, self.source)

            kept = masses >= EMPTY_CELL_MASS
            if np.all(kept):
                return boundaries, means, masses

            levels = levels[owners][kept]
            probabilities = probabilities[owners][kept]

    def run(self, initial_levels):
        levels = np.sort(np.asarray(initial_levels, dtype=float))
        probabilities = np.full(len(levels), 1.0 / len(levels))

        self.costs = []
        previous = np.inf

        for iteration in range(self.max_iterations):
            boundaries, levels, probabilities = self._step(levels, probabilities)
            probabilities = probabilities / probabilities.sum()

            quantizer = Quantizer(boundaries, levels, probabilities)
            metrics = quantizer_metrics(quantizer, self.source, self.lagrange_multiplier)
            self.costs.append(metrics.lagrangian_cost)

            if previous - metrics.lagrangian_cost < self.tol:
                logger.debug("Lagrangian descent converged after %d iterations: %s", iteration + 1, metrics)
                return quantizer, metrics

            previous = metrics.lagrangian_cost

        raise NumericalException("Lagrangian descent did not converge in {} iterations (lambda={}).".format(
            self.max_iterations, self.lagrange_multiplier),
            diagnostics={'costs': self.costs[-10:]})


def initial_levels(source, n_max, rng):
    """ Source quantiles at k / (N + 1), jittered uniformly by up to JITTER sigma_X. """
    quantiles = special.ndtri(np.arange(1, n_max + 1) / (n_max + 1))
    jitter = rng.uniform(-JITTER, JITTER, n_max)

    return source.mean + source.std * (quantiles + jitter)


def design_ecsq(source, lagrange_multiplier, n_max, seed=0):
    """
    Locally optimal quantizer with at most n_max cells for E[(X - X_hat)^2] + lambda H(X_hat).

    The result is never worse than the single-cell quantizer. Returns (quantizer, metrics).
    """
    if not lagrange_multiplier >= 0:
        raise DomainException("lambda must be nonnegative, got {}.".format(lagrange_multiplier))
    if int(n_max) != n_max or n_max < 1:
        raise DomainException("n_max must be a positive integer, got {}.".format(n_max))

    single = Quantizer.single_cell(source)
    single_metrics = quantizer_metrics(single, source, lagrange_multiplier)

    if n_max == 1:
        return single, single_metrics

    rng = np.random.default_rng(seed)
    designer = LagrangianDesigner(source, lagrange_multiplier)
    quantizer, metrics = designer.run(initial_levels(source, int(n_max), rng))

    if single_metrics.lagrangian_cost < metrics.lagrangian_cost:
        return single, single_metrics

    return quantizer, metrics


def lower_convex_hull(points):
    """ Lower convex hull of (entropy, distortion) points, kept where distortion decreases. """
    points = sorted(set(points))

    hull = []
    for point in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # Drop the middle point unless the turn is strictly convex
            if (x2 - x1) * (point[1] - y1) - (y2 - y1) * (point[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(point)

    decreasing = hull[:1]
    for point in hull[1:]:
        if point[1] < decreasing[-1][1]:
            decreasing.append(point)

    return decreasing


def trace_de_curve(source, lambda_schedule, n_max, seed=0, threads=1, starts=STARTS_PER_LAMBDA):
    """
    Traces an upper bound on the scalar quantization distortion-entropy curve:
    `starts` seeded designs per lambda, then the lower convex hull of every
    achieved (entropy, distortion) point together with (0, sigma_X^2).
    """
    lambda_schedule = list(lambda_schedule)
    if not lambda_schedule:
        raise DomainException("lambda schedule must not be empty.")
    if any(not lam > 0 for lam in lambda_schedule):
        raise DomainException("lambda schedule must be positive, got {}.".format(lambda_schedule))

    tasks = [(lam, np.random.SeedSequence([seed, index, start]))
             for index, lam in enumerate(lambda_schedule)
             for start in range(starts)]

    def design(task):
        lam, seed_sequence = task
        _, metrics = design_ecsq(source, lam, n_max, seed=seed_sequence)
        return metrics.entropy, metrics.distortion

    logger.info("Designing %d quantizers (%d lambdas x %d starts)", len(tasks), len(lambda_schedule), starts)

    with ThreadPoolExecutor(max_workers=max(threads, 1)) as executor:
        points = list(executor.map(design, tasks))

    return lower_convex_hull(points + [(0.0, source.variance)])


def interpolate_curve(curve, entropy):
    entropies, distortions = zip(*curve)

    return float(np.interp(entropy, entropies, distortions))


def empirical_crossing_rate(curve, common_randomness, source):
    """
    First traced entropy at which the curve no longer lies strictly below the
    perception-free upper bound at common randomness Rc; inf if it never does.
    """
    for entropy, distortion in curve:
        if entropy <= 0:
            continue

        query = RdpQuery(source, entropy, common_randomness, INF, Measure.KL)
        if distortion >= upper_kl(query).value:
            return entropy

    return INF
