from ...oracle.models import GridSpec
from ...scalar.models import INF, GaussianSource, Measure, RdpQuery
from ..models import SweepConfig


class SweepsFixture():

    def rate_sweep(self, outputs=None, source=None):
        fixed = RdpQuery(source or GaussianSource(), 0.0, 0.0, INF, Measure.KL)
        outputs = outputs or [SweepConfig.Output.LOWER, SweepConfig.Output.UPPER, SweepConfig.Output.SHANNON]

        return SweepConfig(SweepConfig.Variable.RATE, GridSpec(0.0, 1.0, 3), fixed, outputs)

    def theta_sweep(self):
        fixed = RdpQuery(GaussianSource(), 0.0, 0.0, INF, Measure.KL)

        return SweepConfig(SweepConfig.Variable.THETA,
                           GridSpec(0.0, 2.0, 3),
                           fixed,
                           SweepConfig.Output.THETA_OUTPUTS)

    def lambda_sweep(self):
        fixed = RdpQuery(GaussianSource(), 0.0, 0.0, INF, Measure.KL)

        return SweepConfig(SweepConfig.Variable.LAMBDA,
                           GridSpec(10.0, 20.0, 3),
                           fixed,
                           SweepConfig.Output.LAMBDA_OUTPUTS,
                           n_max=3)
