import math

import numpy as np
from scipy import integrate

from ..exceptions import NumericalException


MAX_DEPTH = 50

TRAPEZOID_POINTS = 200001


def _simpson(fa, fm, fb, a, b):
    return (b - a) / 6 * (fa + 4 * fm + fb)


def adaptive_quadrature(f, a, b, tol=1e-10, max_depth=MAX_DEPTH):
    """
    Adaptive Simpson integration of f over [a, b].

    Returns (value, err) where err is the accumulated Richardson estimate,
    at most tol. Raises NumericalException when an interval still misses its
    share of the tolerance at max_depth.
    """
    if not tol > 0:
        raise NumericalException("Quadrature tolerance must be positive, got {}.".format(tol))

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)

    # Explicit stack of (a, b, fa, fm, fb, whole, tol, depth)
    stack = [(a, b, fa, fm, fb, _simpson(fa, fm, fb, a, b), tol, 0)]
    value = 0.0
    err = 0.0

    while stack:
        a, b, fa, fm, fb, whole, tol, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)

        left = _simpson(fa, flm, fm, a, m)
        right = _simpson(fm, frm, fb, m, b)
        delta = left + right - whole

        if abs(delta) <= 15 * tol:
            value += left + right + delta / 15
            err += abs(delta) / 15
        elif depth >= max_depth:
            raise NumericalException("Adaptive quadrature exhausted depth {} on [{}, {}].".format(max_depth, a, b),
                                     diagnostics={'interval': (a, b), 'delta': delta})
        else:
            stack.append((m, b, fm, frm, fb, right, tol / 2, depth + 1))
            stack.append((a, m, fa, flm, fm, left, tol / 2, depth + 1))

    return value, err


def trapezoid_kl(d, source, points=TRAPEZOID_POINTS, stds=14.0):
    """ KL divergence of a mixture from the source by a fine uniform trapezoid rule. """
    widest = max(source.std, float(np.max(d.stds)))
    lo = min(source.mean, float(np.min(d.means))) - stds * widest
    hi = max(source.mean, float(np.max(d.means))) + stds * widest

    x = np.linspace(lo, hi, points)
    log_p = d.log_pdf(x)
    log_q = -0.5 * ((x - source.mean) / source.std) ** 2 - math.log(source.std) - 0.5 * math.log(2 * math.pi)

    return float(integrate.trapezoid(np.exp(log_p) * (log_p - log_q), x))
