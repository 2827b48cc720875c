"""Scalar special functions and double-double summation primitives."""

from shannonreg.special.extended import (
    LN2,
    ONE,
    PI,
    SQRT2,
    SQRT_PI,
    ZERO,
    ExtendedReal,
    comp_sum,
    ext_sin,
    quick_two_sum,
    sin_pi,
    two_prod,
    two_sum,
)
from shannonreg.special.tails import (
    MillsTriple,
    eps_lower,
    eps_threshold,
    ext_erfc,
    ext_exp_neg_square,
    ext_gauss_tail,
    gauss_tail,
    mills_bounds,
)


__all__ = [
    "ExtendedReal",
    "comp_sum",
    "ext_sin",
    "sin_pi",
    "two_sum",
    "quick_two_sum",
    "two_prod",
    "ZERO",
    "ONE",
    "PI",
    "LN2",
    "SQRT_PI",
    "SQRT2",
    "MillsTriple",
    "ext_erfc",
    "ext_exp_neg_square",
    "ext_gauss_tail",
    "gauss_tail",
    "mills_bounds",
    "eps_threshold",
    "eps_lower",
]
