import math

import numpy as np

from ..exceptions import DomainException


class GridSpec():

    class Spacing():
        LINEAR = 'linear'
        LOG = 'log'

        ALL = {
            LINEAR,
            LOG,
        }

    def __init__(self, lo, hi, points, spacing=Spacing.LINEAR):
        lo = float(lo)
        hi = float(hi)

        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise DomainException("Grid needs finite bounds with lo < hi, got [{}, {}].".format(lo, hi))
        if int(points) != points or points < 3:
            raise DomainException("Grid needs at least 3 points, got {}.".format(points))
        if spacing not in GridSpec.Spacing.ALL:
            raise DomainException("Unknown grid spacing '{}'.".format(spacing))
        if spacing == GridSpec.Spacing.LOG and lo <= 0:
            raise DomainException("Log-spaced grid needs lo > 0, got {}.".format(lo))

        self.lo = lo
        self.hi = hi
        self.points = int(points)
        self.spacing = spacing

    def __eq__(self, other):
        return isinstance(other, GridSpec) and \
            (self.lo, self.hi, self.points, self.spacing) == (other.lo, other.hi, other.points, other.spacing)

    def __hash__(self):
        return hash((self.lo, self.hi, self.points, self.spacing))

    def __repr__(self):
        return "<GridSpec> [{}, {}] x{} ({})".format(self.lo, self.hi, self.points, self.spacing)

    @property
    def values(self):
        if self.spacing == GridSpec.Spacing.LOG:
            values = np.geomspace(self.lo, self.hi, self.points)
        else:
            values = np.linspace(self.lo, self.hi, self.points)

        # Exact end points
        values[0] = self.lo
        values[-1] = self.hi

        return values
