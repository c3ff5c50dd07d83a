import argparse
import math
import os

from .exceptions import UsageException


THREADS_ENVIRONMENT_VARIABLE = 'GAUSS_RDP_THREADS'

MAX_SEED = 2 ** 64 - 1


def parse_ext_real(text):
    """ A nonnegative real or 'inf', as an argparse type. """
    value = text.strip().lower()
    if value in ('inf', '+inf', 'infinity'):
        return math.inf

    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not a number or 'inf'.".format(text))

    if math.isnan(number) or number < 0:
        raise argparse.ArgumentTypeError("'{}' must be nonnegative.".format(text))

    return number


def parse_real(text):
    try:
        number = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not a number.".format(text))

    if not math.isfinite(number):
        raise argparse.ArgumentTypeError("'{}' must be finite.".format(text))

    return number


def parse_seed(text):
    """ An unsigned 64-bit integer, as an argparse type. """
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer seed.".format(text))

    if not 0 <= seed <= MAX_SEED:
        raise argparse.ArgumentTypeError("Seed {} must lie in [0, 2^64 - 1].".format(seed))

    return seed


def parse_positive_int(text):
    try:
        number = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer.".format(text))

    if number < 1:
        raise argparse.ArgumentTypeError("'{}' must be at least 1.".format(text))

    return number


def resolve_threads(threads, environ=os.environ):
    """
    Worker count: GAUSS_RDP_THREADS when set, else the --threads value, else the
    machine's CPU count.
    """
    text = environ.get(THREADS_ENVIRONMENT_VARIABLE)

    if text is not None:
        try:
            threads = int(text)
        except ValueError:
            raise UsageException("{} must be a positive integer, got '{}'.".format(THREADS_ENVIRONMENT_VARIABLE, text))
        if threads < 1:
            raise UsageException("{} must be a positive integer, got '{}'.".format(THREADS_ENVIRONMENT_VARIABLE, text))
        return threads

    if threads is None:
        return os.cpu_count() or 1

    return threads
