import math

import numpy as np

from .models import GridSpec


INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

DEFAULT_REFINE_ITERATIONS = 100


def golden_section_search(f, a, b, tol=1e-12, max_iterations=DEFAULT_REFINE_ITERATIONS):
    """
    Golden-section search for a minimum of f on [a, b].

    Returns the best evaluated point and its value. The bracket shrinks by 1/phi
    per iteration until it is narrower than tol or max_iterations is reached.
    """
    a, b = min(a, b), max(a, b)
    h = b - a

    best_x, best_y = a, f(a)
    yb = f(b)
    if yb < best_y:
        best_x, best_y = b, yb

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(max_iterations):
        if h <= tol:
            break

        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    for x, y in ((c, yc), (d, yd)):
        if y < best_y:
            best_x, best_y = x, y

    return best_x, best_y


def _evaluate_on_grid(objective, values, vectorized):
    if vectorized:
        return np.asarray(objective(values), dtype=float)

    return np.array([objective(v) for v in values], dtype=float)


def grid_min(objective, interval, refine_iters=DEFAULT_REFINE_ITERATIONS, vectorized=False, extra_points=(), tol=None):
    """
    Minimizes a function over a grid, then refines around the best grid point.

    The grid is scanned first (ties go to the first index), then a golden-section
    search runs inside the bracket formed by the neighbouring grid points. The
    refined point is kept only if it improves on the grid. `extra_points` are
    candidate abscissae evaluated alongside the grid.

    Returns (argmin, min).
    """
    assert isinstance(interval, GridSpec)

    values = interval.values
    if len(extra_points):
        extra = np.array([p for p in extra_points if interval.lo <= p <= interval.hi], dtype=float)
    else:
        extra = np.array([], dtype=float)

    grid_y = _evaluate_on_grid(objective, values, vectorized)
    index = int(np.argmin(grid_y))
    best_x, best_y = float(values[index]), float(grid_y[index])

    if extra.size:
        extra_y = _evaluate_on_grid(objective, extra, vectorized)
        extra_index = int(np.argmin(extra_y))
        if extra_y[extra_index] < best_y:
            best_x, best_y = float(extra[extra_index]), float(extra_y[extra_index])

    if refine_iters <= 0:
        return best_x, best_y

    # Bracket around the best point, in grid coordinates
    position = int(np.searchsorted(values, best_x))
    lo = values[max(position - 1, 0)]
    hi = values[min(position + 1, len(values) - 1)]
    if lo == hi:
        return best_x, best_y

    if tol is None:
        tol = 1e-12 * max(abs(interval.lo), abs(interval.hi), 1.0)

    if vectorized:
        def scalar_objective(x):
            return float(objective(np.array([x]))[0])
    else:
        scalar_objective = objective

    refined_x, refined_y = golden_section_search(scalar_objective, lo, hi, tol=tol, max_iterations=refine_iters)

    if refined_y < best_y:
        return float(refined_x), float(refined_y)
    return best_x, best_y


def grid_max(objective, interval, refine_iters=DEFAULT_REFINE_ITERATIONS, vectorized=False, extra_points=(), tol=None):
    """ Mirror of grid_min for maximization. Returns (argmax, max). """
    argmax, negated_max = grid_min(lambda x: -objective(x),
                                   interval,
                                   refine_iters=refine_iters,
                                   vectorized=vectorized,
                                   extra_points=extra_points,
                                   tol=tol)

    return argmax, -negated_max


def grid_min_sigma(objective, interval, refine_iters=DEFAULT_REFINE_ITERATIONS):
    return grid_min(objective, interval, refine_iters=refine_iters)
