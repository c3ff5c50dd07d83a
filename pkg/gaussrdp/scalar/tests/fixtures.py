from ..models import GaussianSource, Measure, RdpQuery


class ScalarModelsFixture():

    def any_source(self, mean=0.0, variance=1.0):
        return GaussianSource(mean=mean, variance=variance)

    def any_query(self, rate=0.5, common_randomness=0.1, perception=0.1, measure=Measure.W2SQ, source=None):
        return RdpQuery(source or self.any_source(), rate, common_randomness, perception, measure)
