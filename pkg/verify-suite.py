#!/usr/bin/env python3

import argparse

from gaussrdp.argparse import parse_positive_int, parse_real, parse_seed
from gaussrdp.commands import cmd_verify, configure_logging
from gaussrdp.reports.suites import Suite


# --- Arguments ---
argument_parser = argparse.ArgumentParser(description="Run the invariant and oracle checks and print a pass/fail table.")

# Suite argument
argument_parser.add_argument('--suite',
                             choices=Suite.ALL + ['all'],
                             default='all',
                             help='Suite to run.')

# Source arguments
argument_parser.add_argument('--mean',
                             type=parse_real,
                             default=0.0,
                             help='Mean of the Gaussian source.')
argument_parser.add_argument('--var',
                             type=parse_real,
                             default=1.0,
                             help='Variance of the Gaussian source.')

# Execution arguments
argument_parser.add_argument('--seed',
                             type=parse_seed,
                             default=0,
                             help='Seed of the random trials.')
argument_parser.add_argument('--trials',
                             type=parse_positive_int,
                             default=1000,
                             help='Random mixtures checked against the transportation inequality.')
argument_parser.add_argument('--threads',
                             type=parse_positive_int,
                             help='Worker threads (default: CPU count, overridden by GAUSS_RDP_THREADS).')

# Verbose argument
argument_parser.add_argument('-v', '--verbose',
                             dest='verbose',
                             action='store_true',
                             help='Log every check.')


# --- Parse arguments ---
args = argument_parser.parse_args()

configure_logging(args.verbose)

exit(cmd_verify(args))
