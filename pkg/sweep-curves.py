#!/usr/bin/env python3

import argparse

from gaussrdp.argparse import parse_ext_real, parse_positive_int, parse_real, parse_seed
from gaussrdp.commands import cmd_sweep, configure_logging
from gaussrdp.reports.generators import FIGURES
from gaussrdp.reports.models import SweepConfig
from gaussrdp.scalar.models import Measure


# --- Arguments ---
argument_parser = argparse.ArgumentParser(description="Sweep one variable and write the selected bound curves as CSV.")

# Preset argument
argument_parser.add_argument('--figure',
                             type=int,
                             choices=FIGURES,
                             help='Reproduce the parameters of a published figure (ignores the custom sweep arguments).')

# Custom sweep arguments
argument_parser.add_argument('--variable',
                             choices=sorted(SweepConfig.Variable.ALL),
                             help='Swept variable.')
argument_parser.add_argument('--from',
                             dest='lo',
                             type=parse_real,
                             help='First grid value.')
argument_parser.add_argument('--to',
                             dest='hi',
                             type=parse_real,
                             help='Last grid value.')
argument_parser.add_argument('--points',
                             type=parse_positive_int,
                             default=101,
                             help='Number of grid points.')
argument_parser.add_argument('--log-spaced',
                             dest='log_spaced',
                             action='store_true',
                             help='Use a geometric grid.')
argument_parser.add_argument('--outputs',
                             help='Comma separated columns, e.g. `lower,improved_lower,upper,gap`.')
argument_parser.add_argument('--cells',
                             type=parse_positive_int,
                             default=8,
                             help='Largest number of quantizer cells for lambda sweeps.')

# Source and fixed point arguments
argument_parser.add_argument('--mean',
                             type=parse_real,
                             default=0.0,
                             help='Mean of the Gaussian source.')
argument_parser.add_argument('--var',
                             type=parse_real,
                             default=1.0,
                             help='Variance of the Gaussian source.')
argument_parser.add_argument('--rate',
                             type=parse_ext_real,
                             default=0.0,
                             help="Fixed coding rate R (accepts 'inf').")
argument_parser.add_argument('--common',
                             type=parse_ext_real,
                             default=0.0,
                             help="Fixed common randomness rate Rc (accepts 'inf').")
argument_parser.add_argument('--perception',
                             type=parse_ext_real,
                             default=float('inf'),
                             help="Fixed perception constraint P (accepts 'inf').")
argument_parser.add_argument('--measure',
                             choices=sorted(Measure.ALL),
                             default=Measure.W2SQ,
                             help='Perception measure.')

# Execution arguments
argument_parser.add_argument('--threads',
                             type=parse_positive_int,
                             help='Worker threads (default: CPU count, overridden by GAUSS_RDP_THREADS).')
argument_parser.add_argument('--seed',
                             type=parse_seed,
                             default=0,
                             help='Seed of the quantizer design starts.')

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
                             help='Log progress.')


# --- Parse arguments ---
args = argument_parser.parse_args()

configure_logging(args.verbose)

exit(cmd_sweep(args))
