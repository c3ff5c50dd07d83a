#!/usr/bin/env python3

import argparse

from gaussrdp.argparse import parse_ext_real, parse_real
from gaussrdp.commands import cmd_bound, configure_logging
from gaussrdp.scalar.models import Measure


# --- Arguments ---
argument_parser = argparse.ArgumentParser(description="Print every distortion bound at one (R, Rc, P) point as a CSV row.")

# Source arguments
argument_parser.add_argument('--mean',
                             type=parse_real,
                             default=0.0,
                             help='Mean of the Gaussian source.')
argument_parser.add_argument('--var',
                             type=parse_real,
                             default=1.0,
                             help='Variance of the Gaussian source.')

# Operating point arguments
argument_parser.add_argument('--rate',
                             type=parse_ext_real,
                             required=True,
                             help="Coding rate R in nats (accepts 'inf').")
argument_parser.add_argument('--common',
                             type=parse_ext_real,
                             default=0.0,
                             help="Common randomness rate Rc in nats (accepts 'inf').")
argument_parser.add_argument('--perception',
                             type=parse_ext_real,
                             default=float('inf'),
                             help="Perception constraint P (accepts 'inf').")
argument_parser.add_argument('--measure',
                             choices=sorted(Measure.ALL),
                             default=Measure.W2SQ,
                             help='Perception measure: KL divergence or squared Wasserstein-2 distance.')

# Output arguments
argument_parser.add_argument('--normalize',
                             action='store_true',
                             help='Divide distortions by the source variance.')
argument_parser.add_argument('--out',
                             help='Output CSV file (standard output by default).')

# Verbose argument
argument_parser.add_argument('-v', '--verbose',
                             dest='verbose',
                             action='store_true',
                             help='Log optimizer details.')


# --- Parse arguments ---
args = argument_parser.parse_args()

configure_logging(args.verbose)

exit(cmd_bound(args))
