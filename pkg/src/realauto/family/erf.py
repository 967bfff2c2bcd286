"""
Error function by its odd Maclaurin series.

    erf(x) = 2/sqrt(pi) * sum_n (-1)^n x^(2n+1) / (n! (2n+1))

Summation stops once a term drops below ERF_TERM_RTOL relative to the
partial sum. Arguments are limited to |x| <= ERF_K_MAX, where cancellation
in the alternating sum keeps the absolute error below 1e-12.
"""

import math

from ..errors import DomainError
from ..utils.constants import (
    ERF_K_MAX,
    ERF_MAX_TERMS,
    ERF_TERM_RTOL,
    TWO_OVER_SQRT_PI,
)


def erf_series(x: float) -> float:
    """Evaluate erf(x) for |x| <= ERF_K_MAX."""
    if not abs(x) <= ERF_K_MAX:
        raise DomainError(f"erf_series accepts |x| <= {ERF_K_MAX}, got {x}")
    if x == 0.0:
        return 0.0

    x2 = x * x
    power = x  # (-1)^n x^(2n+1) / n!
    terms = [x]
    running = x
    for n in range(1, ERF_MAX_TERMS):
        power *= -x2 / n
        term = power / (2 * n + 1)
        terms.append(term)
        running += term
        if abs(term) <= ERF_TERM_RTOL * abs(running):
            break
    return TWO_OVER_SQRT_PI * math.fsum(terms)


def erf_slope(k: float) -> float:
    """Slope at the origin of erf(k x) / erf(k): 2k / (sqrt(pi) erf(k))."""
    return TWO_OVER_SQRT_PI * k / erf_series(k)
