from ...scalar.models import GaussianSource, Measure, RdpQuery


class BoundQueriesFixture():

    def standard_source(self):
        return GaussianSource(mean=0.0, variance=1.0)

    def kl_query(self, rate, common_randomness, perception, source=None):
        return RdpQuery(source or self.standard_source(), rate, common_randomness, perception, Measure.KL)

    def w2_query(self, rate, common_randomness, perception, source=None):
        return RdpQuery(source or self.standard_source(), rate, common_randomness, perception, Measure.W2SQ)
