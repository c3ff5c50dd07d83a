import math

from ..exceptions import DomainException, UsageException


INF = math.inf


def as_ext_real(value, name='value'):
    """ Validates a nonnegative extended real (a float in [0, inf]) and returns it as a float. """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainException("{} must be a real number or 'inf', got {!r}.".format(name, value))

    if math.isnan(value):
        raise DomainException("{} must not be NaN.".format(name))
    if value < 0:
        raise DomainException("{} must be nonnegative, got {}.".format(name, value))

    return value


def positive_part(x):
    return max(x, 0.0)


def neg_exp(x):
    """ e^{-x} on [0, inf], with e^{-inf} exactly 0. """
    if x == INF:
        return 0.0
    return math.exp(-x)


def one_minus_neg_exp(x):
    """ 1 - e^{-x} on [0, inf], accurate for small x. """
    if x == INF:
        return 1.0
    return -math.expm1(-x)


class Measure():

    KL = 'kl'
    W2SQ = 'w2'

    ALL = {
        KL,
        W2SQ,
    }


class GaussianSource():

    def __init__(self, mean=0.0, variance=1.0):
        mean = float(mean)
        variance = float(variance)

        if not math.isfinite(mean):
            raise DomainException("Source mean must be finite, got {}.".format(mean))
        if not math.isfinite(variance) or variance <= 0:
            raise DomainException("Source variance must be finite and positive, got {}.".format(variance))

        self.mean = mean
        self.variance = variance

    def __eq__(self, other):
        return isinstance(other, GaussianSource) and \
            self.mean == other.mean and \
            self.variance == other.variance

    def __hash__(self):
        return hash((self.mean, self.variance))

    def __repr__(self):
        return "<GaussianSource> N({}, {})".format(self.mean, self.variance)

    @property
    def std(self):
        return math.sqrt(self.variance)


class RdpQuery():

    def __init__(self, source, rate, common_randomness, perception, measure):
        assert isinstance(source, GaussianSource)

        if measure not in Measure.ALL:
            raise UsageException("Unknown perception measure '{}'. Available: {}.".format(measure, ', '.join(sorted(Measure.ALL))))

        self.source = source
        self.rate = as_ext_real(rate, 'rate')
        self.common_randomness = as_ext_real(common_randomness, 'common randomness')
        self.perception = as_ext_real(perception, 'perception')
        self.measure = measure

    def __eq__(self, other):
        return isinstance(other, RdpQuery) and \
            self.source == other.source and \
            self.rate == other.rate and \
            self.common_randomness == other.common_randomness and \
            self.perception == other.perception and \
            self.measure == other.measure

    def __hash__(self):
        return hash((self.source, self.rate, self.common_randomness, self.perception, self.measure))

    def __repr__(self):
        return "<RdpQuery> {} R={} Rc={} P={} [{}]".format(self.source,
                                                          self.rate,
                                                          self.common_randomness,
                                                          self.perception,
                                                          self.measure)

    def replacing(self, rate=None, common_randomness=None, perception=None, measure=None):
        return RdpQuery(self.source,
                        self.rate if rate is None else rate,
                        self.common_randomness if common_randomness is None else common_randomness,
                        self.perception if perception is None else perception,
                        self.measure if measure is None else measure)

    @property
    def total_rate(self):
        return self.rate + self.common_randomness
