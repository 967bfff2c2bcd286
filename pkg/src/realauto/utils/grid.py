"""Sampling grids over the closed interval [-1+eps, 1-eps]."""

import numpy as np

from .constants import DOMAIN_HI


def symmetric_grid(grid_n: int, eps: float = 0.0) -> np.ndarray:
    """
    Uniform grid on [-(1-eps), 1-eps] that is exactly odd: xs[i] == -xs[-1-i].

    Odd grid sizes therefore contain x = 0.0 exactly. np.linspace alone does
    not guarantee either property in binary64.
    """
    hi = DOMAIN_HI - eps
    xs = np.linspace(-hi, hi, grid_n)
    return (xs - xs[::-1]) / 2.0
