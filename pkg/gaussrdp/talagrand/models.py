import math

import numpy as np
from scipy import special

from ..exceptions import DomainException


WEIGHT_SUM_TOL = 1e-12


class ScalarDistribution():
    """ A finite Gaussian mixture on the real line, given as (weight, mean, std) components. """

    def __init__(self, components):
        components = list(components)
        if not components:
            raise DomainException("A mixture needs at least one component.")

        weights, means, stds = (np.array(column, dtype=float) for column in zip(*components))

        if not (np.all(np.isfinite(weights)) and np.all(np.isfinite(means)) and np.all(np.isfinite(stds))):
            raise DomainException("Mixture components must be finite, got {}.".format(components))
        if np.any(weights <= 0):
            raise DomainException("Mixture weights must be positive, got {}.".format(weights.tolist()))
        if abs(weights.sum() - 1.0) > WEIGHT_SUM_TOL:
            raise DomainException("Mixture weights must sum to 1, got {}.".format(weights.sum()))
        if np.any(stds <= 0):
            raise DomainException("Mixture standard deviations must be positive, got {}.".format(stds.tolist()))

        self.weights = weights
        self.means = means
        self.stds = stds

    @classmethod
    def gaussian(cls, mean, std):
        return cls([(1.0, mean, std)])

    def __eq__(self, other):
        return isinstance(other, ScalarDistribution) and self.components == other.components

    def __hash__(self):
        return hash(tuple(self.components))

    def __repr__(self):
        return "<ScalarDistribution> {}".format(' + '.join('{:.4g} N({:.4g}, {:.4g}^2)'.format(*c) for c in self.components))

    @property
    def components(self):
        return list(zip(self.weights.tolist(), self.means.tolist(), self.stds.tolist()))

    @property
    def is_gaussian(self):
        return len(self.weights) == 1

    def log_pdf(self, x):
        x = np.asarray(x, dtype=float)
        z = (x[..., np.newaxis] - self.means) / self.stds
        log_components = np.log(self.weights) - np.log(self.stds) - 0.5 * math.log(2 * math.pi) - 0.5 * z ** 2

        return special.logsumexp(log_components, axis=-1)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)

        return np.sum(self.weights * special.ndtr((x[..., np.newaxis] - self.means) / self.stds), axis=-1)


class DivergenceEstimate():

    def __init__(self, value, abs_error_bound):
        assert abs_error_bound >= 0
        assert value >= -abs_error_bound

        self.value = value
        self.abs_error_bound = abs_error_bound

    def __eq__(self, other):
        return isinstance(other, DivergenceEstimate) and \
            self.value == other.value and \
            self.abs_error_bound == other.abs_error_bound

    def __hash__(self):
        return hash((self.value, self.abs_error_bound))

    def __repr__(self):
        return "<DivergenceEstimate> {} +/- {}".format(self.value, self.abs_error_bound)


class TalagrandReport():
    """ Both sides of a transportation inequality W2^2 <= rhs for one reconstruction law. """

    def __init__(self, w2sq, kl, rhs_refined, rhs_original, error_bound):
        self.w2sq = w2sq
        self.kl = kl
        self.rhs_refined = rhs_refined
        self.rhs_original = rhs_original
        self.error_bound = error_bound

    def __repr__(self):
        return "<TalagrandReport> W2^2={} KL={} refined={} original={} (+/- {})".format(self.w2sq,
                                                                                       self.kl,
                                                                                       self.rhs_refined,
                                                                                       self.rhs_original,
                                                                                       self.error_bound)

    @property
    def holds_refined(self):
        return self.w2sq <= self.rhs_refined + self.error_bound

    @property
    def holds_original(self):
        return self.w2sq <= self.rhs_original + self.error_bound

    @property
    def refined_dominates(self):
        return self.rhs_refined <= self.rhs_original

    @property
    def slack(self):
        return self.rhs_refined - self.w2sq


class GapReport():
    """ W2^2 excess over the moment-matched Gaussian against its KL-based bound. """

    def __init__(self, lhs, rhs, error_bound):
        self.lhs = lhs
        self.rhs = rhs
        self.error_bound = error_bound

    def __repr__(self):
        return "<GapReport> {} <= {} (+/- {})".format(self.lhs, self.rhs, self.error_bound)

    @property
    def holds(self):
        return self.lhs <= self.rhs + self.error_bound
