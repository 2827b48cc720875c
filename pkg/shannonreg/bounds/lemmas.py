"""Numerical checks of the two integral inequalities behind the lower bound.

Both sides of each inequality are evaluated independently: the left side by
adaptive quadrature, the right side in closed form.
"""

import functools
import math
import warnings
from collections import namedtuple

from scipy import integrate

from shannonreg.bounds.certificates import MillsEpsilon
from shannonreg.config import config
from shannonreg.exceptions import CertificateInvalid, DomainError
from shannonreg.exceptions import QuadratureError
from shannonreg.logging import logging
from shannonreg.reconstruct import GaussWidth
from shannonreg.signals import Bandwidth
from shannonreg.special import gauss_tail
from shannonreg.utils import ConfigKey


LemmaReport = namedtuple(
    "LemmaReport",
    [
        "lemma1_ok",
        "lemma2_ok",
        "lemma1_lhs",
        "lemma1_rhs",
        "lemma2_lhs",
        "lemma2_rhs",
    ],
)

MIN_K_MAX = 50


def _quad(fn, a, b, epsabs, epsrel, limit):
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(
                fn, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit
            )
        except integrate.IntegrationWarning as e:
            raise QuadratureError(
                "quadrature on [{}, {}] did not converge: {}".format(a, b, e)
            )
    return value, abserr


def _window_side(delta, eps, r):
    pd = math.pi - delta
    return 2.0 / ((2.0 + eps) * pd) - math.exp(
        -2.0 * math.pi * delta * r * r
    ) / (math.pi + delta)


def lemma1_sides(delta, eps, r, epsabs, epsrel, limit, tail=gauss_tail):
    """Both sides of the first inequality.

    The left side is the integral over [-delta, delta] of the Gaussian mass
    outside [(xi - pi) r / sqrt(2), (xi + pi) r / sqrt(2)], divided by
    sqrt(pi). It is written with two upper tails so no cancellation occurs.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        r (float): the Gaussian width
        epsabs (float): absolute quadrature tolerance
        epsrel (float): relative quadrature tolerance
        limit (int): maximum number of subintervals
        tail (callable): the Gaussian tail integral used by the integrand

    Returns:
        tuple: ``(lhs, rhs)``

    Raises:
        CertificateInvalid: if r is below 2 / (sqrt(eps (2 + eps))
            (pi - delta)) or the bracket of the right side is not positive

    """
    pd = math.pi - delta
    r_min = 2.0 / (math.sqrt(eps * (2.0 + eps)) * pd)
    if r < r_min:
        raise CertificateInvalid(
            "r = {} is below the corridor floor {}".format(r, r_min)
        )
    bracket = _window_side(delta, eps, r)
    if bracket <= 0:
        raise CertificateInvalid(
            "side condition fails at r = {}: {} <= 0".format(r, bracket)
        )
    scale = r / math.sqrt(2.0)

    def integrand(xi):
        return (
            tail((math.pi - xi) * scale) + tail((math.pi + xi) * scale)
        ) / math.sqrt(math.pi)

    lhs, _ = _quad(integrand, -delta, delta, epsabs, epsrel, limit)
    rhs = (
        2.0
        * math.sqrt(2.0)
        / ((2.0 + eps) * (math.pi + delta) * math.sqrt(math.pi))
        * bracket
        * math.exp(-(pd * pd) * r * r / 2.0)
        / r ** 3
    )
    return lhs, rhs


def lemma2_sides(delta, r, k_max, epsabs, epsrel, limit):
    """Both sides of the second inequality.

    Args:
        delta (float): the bandwidth
        r (float): the Gaussian width
        k_max (int): number of spectral copies summed
        epsabs (float): absolute quadrature tolerance
        epsrel (float): relative quadrature tolerance
        limit (int): maximum number of subintervals

    Returns:
        tuple: ``(lhs, rhs)``

    """
    pd = math.pi - delta

    def integrand(xi):
        return math.exp(-((xi - math.pi) ** 2) * r * r / 2.0)

    parts = []
    for k in range(1, k_max + 1):
        centre = 2.0 * k * math.pi
        value, _ = _quad(
            integrand, centre - delta, centre + delta, epsabs, epsrel, limit
        )
        parts.append(value)
    lhs = math.fsum(parts)
    rhs = math.exp(-(pd * pd) * r * r / 2.0) / (pd * r * r)
    return lhs, rhs


def lemma_checks(delta, eps, r, k_max=MIN_K_MAX, quadrature=None):
    """Check both integral inequalities at (delta, eps, r).

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        r (float): the Gaussian width
        k_max (int): spectral copies summed in the second check, >= 50
        quadrature (dict): ``epsabs``, ``epsrel`` and ``limit`` overrides of
            the ``quadrature`` configuration section

    Returns:
        LemmaReport: both verdicts and the four sides

    Raises:
        DomainError: if k_max < 50

    """
    delta = Bandwidth(delta)
    eps = MillsEpsilon(eps)
    r = GaussWidth(r)
    if k_max < MIN_K_MAX:
        raise DomainError(
            "k_max must be >= {}, got {}".format(MIN_K_MAX, k_max)
        )
    resolved = config.get_config()
    settings = dict(resolved[ConfigKey.QUADRATURE])
    settings.update(quadrature or {})
    special = resolved[ConfigKey.SPECIAL]
    tail = functools.partial(
        gauss_tail,
        crossover=special[ConfigKey.ERFC_CROSSOVER],
        cutoff=special[ConfigKey.TAIL_CUTOFF],
    )
    lhs1, rhs1 = lemma1_sides(
        float(delta), float(eps), float(r), tail=tail, **settings
    )
    lhs2, rhs2 = lemma2_sides(float(delta), float(r), int(k_max), **settings)
    logging.debug(
        "Lemma checks at r = {}: {} > {} and {} < {}".format(
            float(r), lhs1, rhs1, lhs2, rhs2
        )
    )
    return LemmaReport(
        lemma1_ok=lhs1 > rhs1,
        lemma2_ok=lhs2 < rhs2,
        lemma1_lhs=lhs1,
        lemma1_rhs=rhs1,
        lemma2_lhs=lhs2,
        lemma2_rhs=rhs2,
    )
