import numpy as np
from scipy import special, stats

from ..exceptions import DomainException


PROBABILITY_SUM_TOL = 1e-10


def cell_statistics(boundaries, source):
    """
    Mass, conditional mean and conditional variance under the source of the
    cells cut by `boundaries` (ascending), from the truncated Gaussian moments.
    """
    boundaries = np.asarray(boundaries, dtype=float)
    edges = np.concatenate(([-np.inf], boundaries, [np.inf]))
    lo = (edges[:-1] - source.mean) / source.std
    hi = (edges[1:] - source.mean) / source.std

    # Upper-tail cells through the complementary CDF
    probabilities = np.where(lo > 0, special.ndtr(-lo) - special.ndtr(-hi), special.ndtr(hi) - special.ndtr(lo))

    with np.errstate(invalid='ignore', divide='ignore'):
        means, variances = stats.truncnorm.stats(lo, hi, loc=source.mean, scale=source.std, moments='mv')

    return probabilities, np.asarray(means, dtype=float), np.asarray(variances, dtype=float)


class Quantizer():
    """
    Deterministic scalar quantizer: N cells cut by N - 1 ascending boundaries,
    one reproduction level per cell and the cell masses under the source.
    """

    def __init__(self, boundaries, levels, probabilities):
        boundaries = np.asarray(boundaries, dtype=float)
        levels = np.asarray(levels, dtype=float)
        probabilities = np.asarray(probabilities, dtype=float)

        if len(levels) < 1:
            raise DomainException("A quantizer needs at least one level.")
        if len(boundaries) != len(levels) - 1 or len(probabilities) != len(levels):
            raise DomainException("A quantizer with {} levels needs {} boundaries and {} probabilities.".format(
                len(levels), len(levels) - 1, len(levels)))
        if np.any(np.diff(boundaries) <= 0) or not np.all(np.isfinite(boundaries)):
            raise DomainException("Quantizer boundaries must be finite and strictly ascending, got {}.".format(boundaries.tolist()))
        if not np.all(np.isfinite(levels)):
            raise DomainException("Quantizer levels must be finite, got {}.".format(levels.tolist()))
        if np.any(probabilities <= 0) or abs(probabilities.sum() - 1.0) > PROBABILITY_SUM_TOL:
            raise DomainException("Cell probabilities must be positive and sum to 1, got {}.".format(probabilities.tolist()))

        self.boundaries = boundaries
        self.levels = levels
        self.probabilities = probabilities

    @classmethod
    def from_boundaries(cls, boundaries, source):
        probabilities, means, _ = cell_statistics(boundaries, source)

        return cls(boundaries, means, probabilities)

    @classmethod
    def single_cell(cls, source):
        return cls([], [source.mean], [1.0])

    def __eq__(self, other):
        return isinstance(other, Quantizer) and \
            np.array_equal(self.boundaries, other.boundaries) and \
            np.array_equal(self.levels, other.levels) and \
            np.array_equal(self.probabilities, other.probabilities)

    def __hash__(self):
        return hash((tuple(self.boundaries), tuple(self.levels), tuple(self.probabilities)))

    def __repr__(self):
        return "<Quantizer> {} cells, boundaries {}, levels {}".format(len(self.levels),
                                                                      np.round(self.boundaries, 6).tolist(),
                                                                      np.round(self.levels, 6).tolist())

    @property
    def cell_count(self):
        return len(self.levels)

    def encode(self, values):
        """ Cell index of each value; a value on a boundary belongs to the upper cell. """
        return np.searchsorted(self.boundaries, np.asarray(values, dtype=float), side='right')

    def quantize(self, values):
        return self.levels[self.encode(values)]


class QuantizerMetrics():

    def __init__(self, distortion, entropy, lagrangian_cost):
        assert distortion >= 0
        assert entropy >= 0

        self.distortion = distortion
        self.entropy = entropy
        self.lagrangian_cost = lagrangian_cost

    def __eq__(self, other):
        return isinstance(other, QuantizerMetrics) and \
            (self.distortion, self.entropy, self.lagrangian_cost) == (other.distortion, other.entropy, other.lagrangian_cost)

    def __hash__(self):
        return hash((self.distortion, self.entropy, self.lagrangian_cost))

    def __repr__(self):
        return "<QuantizerMetrics> D={} H={} J={}".format(self.distortion, self.entropy, self.lagrangian_cost)


def quantizer_metrics(quantizer, source, lagrange_multiplier=0.0):
    """ Mean squared error, output entropy (nats) and D + lambda H of a quantizer on the source. """
    probabilities, means, variances = cell_statistics(quantizer.boundaries, source)

    distortion = float(np.sum(probabilities * (variances + (means - quantizer.levels) ** 2)))
    entropy = float(np.sum(special.entr(probabilities)))

    return QuantizerMetrics(max(distortion, 0.0), max(entropy, 0.0), distortion + lagrange_multiplier * entropy)
