from ...scalar.models import GaussianSource
from ..models import ScalarDistribution


class MixturesFixture():

    def standard_source(self):
        return GaussianSource(mean=0.0, variance=1.0)

    def symmetric_mixture(self, offset=0.6, std=0.7):
        return ScalarDistribution([(0.5, -offset, std), (0.5, offset, std)])

    def skewed_mixture(self):
        # Mean 0, variance 0.3 * 0.25 + 0.7 * 0.09 + 0.3 * 0.49 + 0.7 * 0.0441 ~ 0.315
        return ScalarDistribution([(0.3, -0.7, 0.5), (0.7, 0.3, 0.3)])
