"""Fraction-of-count rounding used by ranking and coverage selection.

Fractions like 0.05 or 0.3 are not exactly representable as binary floats,
so ``fraction * n`` can land an ulp on the wrong side of an integer (e.g.
``0.3 * 10 == 2.9999999999999996``).  A nudge of 1e-9 keeps the floor/ceil
on the intended side for any realistic entity count; counts here stay far
below the ~1e7 scale where the nudge itself could flip a result.
"""

import math

_NUDGE = 1e-9


def floor_count(fraction, n):
    """Largest k with k <= fraction * n, robust to float representation."""
    return math.floor(fraction * n + _NUDGE)


def ceil_count(fraction, n):
    """Smallest k with k >= fraction * n, robust to float representation."""
    return math.ceil(fraction * n - _NUDGE)
