from ..exceptions import UsageException
from ..oracle.models import GridSpec
from ..scalar.models import RdpQuery


class SweepConfig():

    class Variable():
        RATE = 'R'
        COMMON_RANDOMNESS = 'Rc'
        PERCEPTION = 'P'
        THETA = 'theta'
        LAMBDA = 'lambda'

        ALL = {
            RATE,
            COMMON_RANDOMNESS,
            PERCEPTION,
            THETA,
            LAMBDA,
        }

        QUERY_FIELDS = {
            RATE: 'rate',
            COMMON_RANDOMNESS: 'common_randomness',
            PERCEPTION: 'perception',
        }

    class Output():
        # Bounds, for sweeps over R, Rc or P
        LOWER = 'lower'
        UPPER = 'upper'
        IMPROVED_LOWER = 'improved_lower'
        GAP = 'gap'
        INDUCED_LOWER = 'induced_lower'
        INDUCED_UPPER = 'induced_upper'
        SHANNON = 'shannon'
        BINARY = 'binary'
        UPPER_EXPANSION = 'upper_expansion'
        ECSQ_EXPANSION = 'ecsq_expansion'

        # Binary quantizer parametric curve, for sweeps over theta
        BINARY_RATE = 'binary_rate'
        BINARY_DISTORTION = 'binary_distortion'

        # Lagrangian quantizer design points, for sweeps over lambda
        ECSQ_ENTROPY = 'ecsq_entropy'
        ECSQ_DISTORTION = 'ecsq_distortion'
        ECSQ_CELLS = 'ecsq_cells'

        QUERY_OUTPUTS = [
            LOWER,
            UPPER,
            IMPROVED_LOWER,
            GAP,
            INDUCED_LOWER,
            INDUCED_UPPER,
            SHANNON,
            BINARY,
            UPPER_EXPANSION,
            ECSQ_EXPANSION,
        ]

        THETA_OUTPUTS = [
            BINARY_RATE,
            BINARY_DISTORTION,
        ]

        LAMBDA_OUTPUTS = [
            ECSQ_ENTROPY,
            ECSQ_DISTORTION,
            ECSQ_CELLS,
        ]

        # Columns that hold distortions, scaled by --normalize
        DISTORTIONS = {
            LOWER,
            UPPER,
            IMPROVED_LOWER,
            GAP,
            INDUCED_LOWER,
            INDUCED_UPPER,
            SHANNON,
            BINARY,
            UPPER_EXPANSION,
            ECSQ_EXPANSION,
            BINARY_DISTORTION,
            ECSQ_DISTORTION,
        }

    def __init__(self, variable, grid, fixed, outputs, n_max=8):
        assert isinstance(grid, GridSpec)
        assert isinstance(fixed, RdpQuery)

        if variable not in SweepConfig.Variable.ALL:
            raise UsageException("Unknown sweep variable '{}'. Available: {}.".format(
                variable, ', '.join(sorted(SweepConfig.Variable.ALL))))

        outputs = list(outputs)
        if not outputs:
            raise UsageException("A sweep needs at least one output.")

        allowed = self.allowed_outputs(variable)
        unknown = [o for o in outputs if o not in allowed]
        if unknown:
            raise UsageException("Outputs {} are not available when sweeping {}. Available: {}.".format(
                ', '.join(unknown), variable, ', '.join(allowed)))

        self.variable = variable
        self.grid = grid
        self.fixed = fixed
        self.outputs = outputs
        self.n_max = n_max

    def __repr__(self):
        return "<SweepConfig> {} over {} at {} -> {}".format(self.variable, self.grid, self.fixed, ', '.join(self.outputs))

    @staticmethod
    def allowed_outputs(variable):
        if variable == SweepConfig.Variable.THETA:
            return SweepConfig.Output.THETA_OUTPUTS
        elif variable == SweepConfig.Variable.LAMBDA:
            return SweepConfig.Output.LAMBDA_OUTPUTS
        else:
            return SweepConfig.Output.QUERY_OUTPUTS

    @property
    def header(self):
        return [self.variable] + self.outputs

    def query_at(self, value):
        field = SweepConfig.Variable.QUERY_FIELDS[self.variable]

        return self.fixed.replacing(**{field: value})


class CheckResult():

    def __init__(self, suite, name, passed, detail=''):
        self.suite = suite
        self.name = name
        self.passed = passed
        self.detail = detail

    def __repr__(self):
        return "<CheckResult> {}/{}: {}{}".format(self.suite,
                                                  self.name,
                                                  'pass' if self.passed else 'FAIL',
                                                  ' ({})'.format(self.detail) if self.detail else '')
