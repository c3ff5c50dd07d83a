from ...scalar.models import GaussianSource


class QuantizersFixture():

    def standard_source(self):
        return GaussianSource(mean=0.0, variance=1.0)

    def shifted_source(self):
        return GaussianSource(mean=3.0, variance=4.0)
