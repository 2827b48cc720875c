"""Gaussian tail integral and its closed-form Mills-ratio bounds."""

import math
import sys
from collections import namedtuple

from shannonreg.exceptions import DomainError
from shannonreg.special.extended import ONE, SQRT_PI, ZERO, ExtendedReal
from shannonreg.special.extended import two_prod
from shannonreg.utils import DefaultConfig, check_finite, check_positive


MillsTriple = namedtuple("MillsTriple", ["lower", "upper", "crude_upper"])

_SERIES_RTOL = 1e-34
_SERIES_MAX_TERMS = 500
_CF_SCALE = 800.0
_CF_MIN_DEPTH = 16
_THRESHOLD_SLACK = 4 * sys.float_info.epsilon


def ext_exp_neg_square(x):
    """Compute e^{-x^2} in double-double, squaring x exactly.

    Args:
        x (float): the point

    Returns:
        ExtendedReal

    """
    return (-ExtendedReal.from_pair(two_prod(x, x))).exp()


def _erf_series(x):
    # erf(x) = 2/sqrt(pi) e^{-x^2} sum_k 2^k x^{2k+1} / (2k+1)!!, all terms
    # positive so there is no cancellation inside the sum.
    x2 = ExtendedReal.from_pair(two_prod(x, x)) * 2.0
    term = ExtendedReal(x)
    total = term
    for k in range(1, _SERIES_MAX_TERMS):
        term = term * x2 / (2 * k + 1)
        total = total + term
        if abs(term.hi) <= _SERIES_RTOL * abs(total.hi):
            break
    return total * ext_exp_neg_square(x) * 2.0 / SQRT_PI


def _erfc_continued_fraction(x):
    # erfc(x) = e^{-x^2} / sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...
    # evaluated bottom-up at a depth that shrinks like 1/x^2.
    depth = int(_CF_SCALE / (x * x)) + _CF_MIN_DEPTH
    denom = ExtendedReal(x)
    for k in range(depth, 0, -1):
        denom = x + ExtendedReal(0.5 * k) / denom
    return ext_exp_neg_square(x) / (SQRT_PI * denom)


def ext_erfc(x, crossover=DefaultConfig.ERFC_CROSSOVER):
    """Complementary error function in double-double for real x.

    Args:
        x (float): the point
        crossover (float): below this |x| the power series is used, above it
            the continued fraction

    Returns:
        ExtendedReal: erfc(x)

    """
    x = check_finite(x, "x")
    if x < 0:
        return 2.0 - ext_erfc(-x, crossover)
    if x == 0:
        return ONE
    if x < crossover:
        return ONE - _erf_series(x)
    return _erfc_continued_fraction(x)


def ext_gauss_tail(
    x,
    crossover=DefaultConfig.ERFC_CROSSOVER,
    cutoff=DefaultConfig.TAIL_CUTOFF,
):
    """Double-double version of :func:`gauss_tail`.

    Args:
        x (float): lower limit of the integral
        crossover (float): series / continued fraction switch point
        cutoff (float): from here on the tail is reported as 0

    Returns:
        ExtendedReal

    """
    x = check_finite(x, "x")
    if x >= cutoff:
        return ZERO
    if x < 0:
        return SQRT_PI - ext_gauss_tail(-x, crossover, cutoff)
    return ext_erfc(x, crossover) * SQRT_PI * 0.5


def gauss_tail(
    x,
    crossover=DefaultConfig.ERFC_CROSSOVER,
    cutoff=DefaultConfig.TAIL_CUTOFF,
):
    """Compute the Gaussian tail integral of e^{-tau^2} over [x, inf).

    Args:
        x (float): lower limit of the integral
        crossover (float): series / continued fraction switch point
        cutoff (float): from here on the tail is reported as 0

    Returns:
        float: the integral, sqrt(pi)/2 at 0 and sqrt(pi) as x -> -inf.

    """
    return float(ext_gauss_tail(x, crossover, cutoff))


def mills_bounds(x):
    """Closed-form two-sided bounds on the Gaussian tail.

    Args:
        x (float): a strictly positive point

    Returns:
        MillsTriple: ``lower <= gauss_tail(x) <= upper <= crude_upper``.

    """
    x = check_positive(x, "x")
    weight = float(ext_exp_neg_square(x))
    x2 = x * x
    return MillsTriple(
        lower=weight / (x + math.sqrt(x2 + 2.0)),
        upper=weight / (x + math.sqrt(x2 + 4.0 / math.pi)),
        crude_upper=weight / (2.0 * x),
    )


def _check_eps(eps):
    eps = check_finite(eps, "eps")
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1), got {}".format(eps))
    return eps


def eps_threshold(eps):
    """Smallest x for which :func:`eps_lower` is guaranteed.

    Args:
        eps (float): the accuracy parameter in (0, 1)

    Returns:
        float: sqrt(2 / (eps (2 + eps)))

    """
    eps = _check_eps(eps)
    return math.sqrt(2.0 / (eps * (2.0 + eps)))


def eps_lower(x, eps):
    """Sharpened lower bound e^{-x^2} / ((2 + eps) x) on the tail.

    Args:
        x (float): the point, at least :func:`eps_threshold`
        eps (float): the accuracy parameter in (0, 1)

    Returns:
        float: a value strictly below gauss_tail(x).

    Raises:
        DomainError: if x is below the threshold, where the inequality is not
            guaranteed.

    """
    threshold = eps_threshold(eps)
    x = check_finite(x, "x")
    # a few ulps of slack so the threshold itself, however it was rounded,
    # is accepted
    if x < threshold * (1.0 - _THRESHOLD_SLACK):
        raise DomainError(
            "x = {} is below the threshold {} for eps = {}".format(
                x, threshold, eps
            )
        )
    return float(ext_exp_neg_square(x)) / ((2.0 + eps) * x)
