import csv
import logging
import math
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor

from termcolor import cprint

from ..bounds.calculators import (improved_lower_w2, improvement_gap, induced_lower_kl, induced_upper_w2,
                                  lower_kl, lower_w2, upper_kl, upper_w2)
from ..ecsq.constructions import (LOG_2, binary_bound_at_rate, binary_distortion, binary_rate,
                                  de_low_rate_expansion, overline_de_expansion, shannon_dr)
from ..ecsq.designers import design_ecsq
from ..exceptions import UsageException
from ..oracle.models import GridSpec
from ..scalar.models import INF, GaussianSource, Measure, RdpQuery

from .models import SweepConfig


logger = logging.getLogger(__name__)


FIGURES = (2, 3, 4, 5, 6)


def format_value(value):
    """ CSV cell: 17 significant digits, 'inf' for infinity, empty for a missing value. """
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if value == math.inf:
        return 'inf'

    return '{:.17g}'.format(value)


def figure_sweep(number, source=GaussianSource()):
    """ Sweep reproducing one of the published bound figures for the given source. """
    Output = SweepConfig.Output
    Variable = SweepConfig.Variable

    if number == 2:
        return SweepConfig(Variable.RATE,
                           GridSpec(0.0, 2.0, 201),
                           RdpQuery(source, 0.0, 0.0, 0.1, Measure.KL),
                           [Output.LOWER, Output.UPPER, Output.INDUCED_LOWER])
    elif number == 3:
        return SweepConfig(Variable.RATE,
                           GridSpec(0.0, 2.0, 201),
                           RdpQuery(source, 0.0, 0.0, 0.1, Measure.W2SQ),
                           [Output.LOWER, Output.UPPER, Output.INDUCED_UPPER])
    elif number == 4:
        return SweepConfig(Variable.PERCEPTION,
                           GridSpec(0.0, 1.0, 1001),
                           RdpQuery(source, 0.1, 0.1, 0.0, Measure.W2SQ),
                           [Output.LOWER, Output.IMPROVED_LOWER, Output.UPPER, Output.GAP])
    elif number == 5:
        return SweepConfig(Variable.RATE,
                           GridSpec(0.0, 2.0, 2001),
                           RdpQuery(source, 0.0, 0.1, 0.1, Measure.W2SQ),
                           [Output.LOWER, Output.IMPROVED_LOWER, Output.UPPER, Output.GAP])
    elif number == 6:
        return SweepConfig(Variable.RATE,
                           GridSpec(LOG_2 / 200, LOG_2, 200),
                           RdpQuery(source, LOG_2, 0.0, INF, Measure.KL),
                           [Output.UPPER, Output.LOWER, Output.SHANNON, Output.BINARY])
    else:
        raise UsageException("Unknown figure {}. Available: {}.".format(number, ', '.join(map(str, FIGURES))))


def _query_outputs(q):
    kl = q.measure == Measure.KL

    return {
        SweepConfig.Output.LOWER: lambda: (lower_kl(q) if kl else lower_w2(q)).value,
        SweepConfig.Output.UPPER: lambda: (upper_kl(q) if kl else upper_w2(q)).value,
        SweepConfig.Output.IMPROVED_LOWER: lambda: None if kl else improved_lower_w2(q).value,
        SweepConfig.Output.GAP: lambda: None if kl else improvement_gap(q),
        SweepConfig.Output.INDUCED_LOWER: lambda: induced_lower_kl(q).value if kl else None,
        SweepConfig.Output.INDUCED_UPPER: lambda: None if kl else induced_upper_w2(q).value,
        SweepConfig.Output.SHANNON: lambda: shannon_dr(q.rate, q.source),
        SweepConfig.Output.BINARY: lambda: binary_bound_at_rate(q.rate, q.source) if 0 < q.rate <= LOG_2 else None,
        SweepConfig.Output.UPPER_EXPANSION: lambda: None if q.rate == INF else overline_de_expansion(q.rate, q.common_randomness, q.source),
        SweepConfig.Output.ECSQ_EXPANSION: lambda: None if q.rate == INF else de_low_rate_expansion(q.rate, q.source),
    }


class SweepGenerator():
    """
    Evaluates a sweep point by point. Points run concurrently on `threads`
    workers and rows come back in grid order.
    """

    def __init__(self, config, threads=1, seed=0, normalize=False):
        self.config = config
        self.threads = max(threads, 1)
        self.seed = seed
        self.normalize = normalize

    def _evaluate(self, value):
        config = self.config
        source = config.fixed.source

        if config.variable == SweepConfig.Variable.THETA:
            values = {
                SweepConfig.Output.BINARY_RATE: binary_rate(value),
                SweepConfig.Output.BINARY_DISTORTION: binary_distortion(value, source),
            }
        elif config.variable == SweepConfig.Variable.LAMBDA:
            quantizer, metrics = design_ecsq(source, value, config.n_max, seed=self.seed)
            values = {
                SweepConfig.Output.ECSQ_ENTROPY: metrics.entropy,
                SweepConfig.Output.ECSQ_DISTORTION: metrics.distortion,
                SweepConfig.Output.ECSQ_CELLS: quantizer.cell_count,
            }
        else:
            columns = _query_outputs(config.query_at(value))
            values = {output: columns[output]() for output in config.outputs}

        row = [float(value)]
        for output in config.outputs:
            cell = values[output]
            if self.normalize and cell is not None and output in SweepConfig.Output.DISTORTIONS:
                cell = cell / source.variance
            row.append(cell)

        return row

    def rows(self):
        logger.info("Sweeping %s over %d points on %d threads", self.config.variable, self.config.grid.points, self.threads)

        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(self._evaluate, self.config.grid.values.tolist()))


def bound_summary(q, normalize=False):
    """ Header and row of every bound available for one query. """
    kl = q.measure == Measure.KL
    scale = q.source.variance if normalize else 1.0

    lower = lower_kl(q) if kl else lower_w2(q)
    upper = upper_kl(q) if kl else upper_w2(q)
    improved = None if kl else improved_lower_w2(q)
    induced = induced_lower_kl(q) if kl else induced_upper_w2(q)

    columns = OrderedDict([
        ('measure', q.measure),
        ('mean', q.source.mean),
        ('var', q.source.variance),
        ('R', q.rate),
        ('Rc', q.common_randomness),
        ('P', q.perception),
        ('lower', lower.value / scale),
        ('improved_lower', None if improved is None else improved.value / scale),
        ('upper', upper.value / scale),
        ('induced_lower', induced.value / scale if kl else None),
        ('induced_upper', None if kl else induced.value / scale),
        ('lower_sigma', lower.minimizer_sigma),
        ('improved_sigma', None if improved is None else improved.minimizer_sigma),
        ('improved_alpha', None if improved is None else improved.maximizer_alpha),
        ('upper_sigma', upper.minimizer_sigma),
    ])

    return list(columns.keys()), list(columns.values())


class CsvReporter():

    def __init__(self, stream):
        self.stream = stream

    def write(self, header, rows):
        writer = csv.writer(self.stream, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


class VerificationReporter():

    def __init__(self, results):
        self.results = results

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    @property
    def all_passed(self):
        return not self.failures

    def print_results(self):
        suite = None
        for result in self.results:
            if result.suite != suite:
                suite = result.suite
                print()
                cprint('{}:'.format(suite.capitalize()), attrs=['bold'])

            if result.passed:
                cprint('  PASS', 'green', end=' ')
            else:
                cprint('  FAIL', 'red', attrs=['bold'], end=' ')

            text = result.name
            if result.detail:
                text += ' ({})'.format(result.detail)
            print(text)

    def print_summary(self):
        print()
        passed_count = len(self.results) - len(self.failures)
        color = 'green' if self.all_passed else 'red'
        cprint('{:>3} / {} checks passed'.format(passed_count, len(self.results)), color, attrs=['bold'])

        for failure in self.failures:
            cprint('- {}/{}'.format(failure.suite, failure.name), 'red')
