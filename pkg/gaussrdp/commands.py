"""
Bodies of the command-line scripts. Each command takes the parsed arguments
and returns the process exit code.
"""

import logging
import sys
from contextlib import contextmanager

from termcolor import cprint

from .argparse import resolve_threads
from .exceptions import GaussRdpException, UsageException
from .oracle.models import GridSpec
from .reports.generators import CsvReporter, SweepGenerator, VerificationReporter, bound_summary, figure_sweep
from .reports.models import SweepConfig
from .reports.suites import Suite, run_suites
from .scalar.models import GaussianSource, RdpQuery


logger = logging.getLogger(__name__)


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


@contextmanager
def _output(path):
    if path is None or path == '-':
        yield sys.stdout
    else:
        with open(path, 'w', newline='') as stream:
            yield stream


def _print_error(e):
    cprint("An error occurred: {}".format(e.message), 'red', file=sys.stderr)


def _source(args):
    return GaussianSource(mean=args.mean, variance=args.var)


def cmd_bound(args):
    """ One CSV row with every bound at a single (R, Rc, P) point. """
    try:
        q = RdpQuery(_source(args), args.rate, args.common, args.perception, args.measure)
        header, row = bound_summary(q, normalize=args.normalize)

        with _output(args.out) as stream:
            CsvReporter(stream).write(header, [row])
    except UsageException as e:
        _print_error(e)
        return EXIT_USAGE
    except GaussRdpException as e:
        _print_error(e)
        return EXIT_FAILURE

    return EXIT_SUCCESS


def sweep_config_from_args(args):
    """ A figure preset, or the sweep described by --variable/--from/--to/--points/--outputs. """
    source = _source(args)

    if args.figure is not None:
        return figure_sweep(args.figure, source)

    if args.variable is None or args.lo is None or args.hi is None or not args.outputs:
        raise UsageException("A custom sweep needs --variable, --from, --to and --outputs (or use --figure).")

    spacing = GridSpec.Spacing.LOG if args.log_spaced else GridSpec.Spacing.LINEAR
    grid = GridSpec(args.lo, args.hi, args.points, spacing=spacing)
    fixed = RdpQuery(source, args.rate, args.common, args.perception, args.measure)
    outputs = [o.strip() for o in args.outputs.split(',') if o.strip()]

    return SweepConfig(args.variable, grid, fixed, outputs, n_max=args.cells)


def cmd_sweep(args):
    try:
        config = sweep_config_from_args(args)
        threads = resolve_threads(args.threads)

        generator = SweepGenerator(config, threads=threads, seed=args.seed, normalize=args.normalize)
        rows = generator.rows()

        with _output(args.out) as stream:
            CsvReporter(stream).write(config.header, rows)
    except UsageException as e:
        _print_error(e)
        return EXIT_USAGE
    except GaussRdpException as e:
        _print_error(e)
        return EXIT_FAILURE

    return EXIT_SUCCESS


def cmd_verify(args):
    """ Runs verification suites, prints the pass/fail table, fails when any check fails. """
    names = Suite.ALL if args.suite == 'all' else [args.suite]

    try:
        threads = resolve_threads(args.threads)
        results = run_suites(names, _source(args), seed=args.seed, trials=args.trials, threads=threads)
    except UsageException as e:
        _print_error(e)
        return EXIT_USAGE
    except GaussRdpException as e:
        _print_error(e)
        return EXIT_FAILURE

    reporter = VerificationReporter(results)
    reporter.print_results()
    reporter.print_summary()

    return EXIT_SUCCESS if reporter.all_passed else EXIT_FAILURE
