"""Closed-form lower and upper bounds on the worst-case reconstruction error.

The bounds concern unit-norm signals of bandwidth delta reconstructed on
(0, 1) from the 2n samples of the window -n+1, ..., n. Lower bounds come
with preconditions; when those fail a :class:`CertificateInvalid` is raised
instead of a number.
"""

import math
from collections import namedtuple

from shannonreg.exceptions import CertificateInvalid, DomainError
from shannonreg.logging import logging
from shannonreg.reconstruct import GaussWidth, optimal_width
from shannonreg.signals import Bandwidth
from shannonreg.special import PI, SQRT2, SQRT_PI, ExtendedReal
from shannonreg.utils import DefaultConfig, check_finite, check_window


BoundPair = namedtuple("BoundPair", ["lower", "upper"])
UpperBoundTerms = namedtuple(
    "UpperBoundTerms", ["aliasing", "main", "truncation"]
)

# relative slack when r is compared with the ends of its corridor
_CORRIDOR_RTOL = 8 * 2.0 ** -52


class MillsEpsilon(float):
    """Accuracy parameter 0 < eps < 1 of the sharpened Mills bound.

    Args:
        eps (float): the parameter

    Raises:
        DomainError: if eps is not strictly inside (0, 1)

    """

    def __new__(cls, eps):  # noqa: D102
        eps = check_finite(eps, "eps")
        if not 0 < eps < 1:
            raise DomainError("eps must lie in (0, 1), got {}".format(eps))
        return super().__new__(cls, eps)


class BoundParams(object):
    """The parameters (delta, eps, n, r) a certificate is evaluated at.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n (int): the window half-size
        r (float): the Gaussian width; defaults to the optimal width for n

    """

    def __init__(self, delta, eps, n, r=None):
        self.delta = Bandwidth(delta)
        self.eps = MillsEpsilon(eps)
        self.n = check_window(n)
        self.r = (
            optimal_width(self.delta, self.n) if r is None else GaussWidth(r)
        )

    def __repr__(self):
        return "BoundParams(delta={!r}, eps={!r}, n={!r}, r={!r})".format(
            float(self.delta), float(self.eps), self.n, float(self.r)
        )

    def corridor(self):
        """Admissible widths for the lower bound at these parameters.

        Returns:
            tuple: ``(r_min, r_max)``, both inclusive

        """
        return r_corridor(self.delta, self.eps, self.n)

    def check_lower(self):
        """Check every precondition of :func:`lower_bound_general`.

        Raises:
            CertificateInvalid: naming the first violated precondition

        """
        _check_lower_band(self.delta)
        r_min, r_max = self.corridor()
        if r_min > r_max * (1.0 + _CORRIDOR_RTOL):
            raise CertificateInvalid(
                "n = {} is too small: the width corridor [{}, {}] is "
                "empty".format(self.n, r_min, r_max)
            )
        if not (
            r_min * (1.0 - _CORRIDOR_RTOL)
            <= self.r
            <= r_max * (1.0 + _CORRIDOR_RTOL)
        ):
            raise CertificateInvalid(
                "r = {} lies outside the corridor [{}, {}]".format(
                    float(self.r), r_min, r_max
                )
            )
        c_value = c_const(self.delta, self.eps, self.r)
        if c_value <= 0:
            raise CertificateInvalid(
                "C = {} is not positive at r = {}".format(
                    c_value, float(self.r)
                )
            )


def _check_lower_band(delta):
    if not delta < math.pi / 2:
        raise CertificateInvalid(
            "the lower bound needs delta < pi/2, got {}".format(float(delta))
        )


def _exp(x):
    if not isinstance(x, ExtendedReal):
        x = ExtendedReal(x)
    return x.exp()


def _pi_minus(delta):
    return PI - float(delta)


def r_corridor(delta, eps, n):
    """Widths r for which the lower bound is proved.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n (int): the window half-size

    Returns:
        tuple: ``(r_min, r_max)`` with r_min = 2 / (sqrt(eps (2 + eps))
            (pi - delta)) and r_max = sqrt((n - 1) / (pi - delta)); both
            ends are inclusive.

    """
    delta = Bandwidth(delta)
    eps = MillsEpsilon(eps)
    n = check_window(n)
    pd = math.pi - delta
    r_min = 2.0 / (math.sqrt(eps * (2.0 + eps)) * pd)
    return r_min, float(optimal_width(delta, n))


def c_const(delta, eps, r):
    """The constant C_{r,delta,eps} of the lower bound.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        r (float): the Gaussian width

    Returns:
        float: C, which may be negative; a lower bound is only certified
            when it is positive.

    """
    delta = Bandwidth(delta)
    eps = MillsEpsilon(eps)
    r = GaussWidth(r)
    pd = _pi_minus(delta)
    pp = PI + float(delta)
    two_eps = 2.0 + eps
    inner = 2.0 / (two_eps * pd) - _exp(
        -2.0 * PI * float(delta) * r * r
    ) / pp
    value = 4.0 / (two_eps * pp * float(delta)) * inner - 2.0 / (
        (2.0 * PI - float(delta)) * pd * pd
    )
    return float(value * math.sin(delta / 2.0))


def sufficient_c(delta, eps):
    """C at the smallest useful width r = 1 / sqrt(pi - delta).

    Since C grows with r, a positive value here makes C positive for every
    optimal width with n >= 2.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter

    Returns:
        float

    """
    delta = Bandwidth(delta)
    return c_const(delta, eps, 1.0 / math.sqrt(math.pi - delta))


def _truncate_significant(value, digits):
    exponent = digits - 1 - int(math.floor(math.log10(abs(value))))
    scale = 10.0 ** exponent
    return math.trunc(value * scale) / scale


def certified_c_floor(
    delta, eps, n_from, n_to=None, digits=DefaultConfig.C_FLOOR_DIGITS
):
    """Smallest C over the optimal widths of a range of windows.

    The minimum is truncated toward zero to ``digits`` significant digits so
    it stays a valid lower estimate of every C in the range.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n_from (int): first window half-size
        n_to (int): last window half-size, inclusive
        digits (int): significant digits kept

    Returns:
        float

    Raises:
        CertificateInvalid: if C is not positive somewhere in the range

    """
    n_from = check_window(n_from)
    n_to = (
        DefaultConfig.C_SCAN_N_MAX if n_to is None else check_window(n_to)
    )
    if n_to < n_from:
        raise DomainError(
            "empty window range {}..{}".format(n_from, n_to)
        )
    values = [
        (c_const(delta, eps, optimal_width(delta, n)), n)
        for n in range(n_from, n_to + 1)
    ]
    smallest, at_n = min(values)
    if smallest <= 0:
        raise CertificateInvalid(
            "C = {} is not positive at n = {}".format(smallest, at_n)
        )
    floor = _truncate_significant(smallest, digits)
    logging.debug(
        "C floor over n in [{}, {}] is {} (min {} at n = {})".format(
            n_from, n_to, floor, smallest, at_n
        )
    )
    return floor


def n_min(delta, eps, c_value):
    """Smallest window half-size for which the lower bound applies.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        c_value (float): the value of C used in the bound

    Returns:
        int

    Raises:
        DomainError: if c_value is not positive

    """
    delta = Bandwidth(delta)
    eps = MillsEpsilon(eps)
    c_value = check_finite(c_value, "c_value")
    if c_value <= 0:
        raise DomainError(
            "C must be > 0 for a window rule, got {}".format(c_value)
        )
    pd = math.pi - delta
    corridor_n = math.ceil(4.0 / (eps * (2.0 + eps) * pd) + 1.0)
    sign_n = math.ceil(8.0 / (math.pi * c_value ** 2 * pd ** 5) - 1.0)
    return int(max(2, corridor_n, sign_n))


def e1_lower_bound(delta, eps, r):
    """Lower bound on the regularization part of the error for f0.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        r (float): the Gaussian width

    Returns:
        float: C e^{-(pi - delta)^2 r^2 / 2} / (pi sqrt(2 delta) r^3)

    """
    delta = Bandwidth(delta)
    r = GaussWidth(r)
    return float(_ext_e1(delta, c_const(delta, eps, r), r))


def _ext_e1(delta, c_value, r):
    pd = _pi_minus(delta)
    weight = _exp(-(pd * pd) * (r * r) * 0.5)
    return c_value * weight / (PI * ExtendedReal(2.0 * delta).sqrt() * r ** 3)


def _ext_f0_truncation(delta, r, n):
    weight = _exp(-ExtendedReal((n - 1) ** 2) / (2.0 * r * r))
    denom = PI * n * (n + 0.5) * (n - 1) * (PI * float(delta)).sqrt()
    return 2.0 * r * r * weight / denom


def f0_truncation_bound(delta, r, n):
    """Upper bound on the truncation part of the error for f0.

    Args:
        delta (float): the bandwidth
        r (float): the Gaussian width
        n (int): the window half-size

    Returns:
        float: 2 r^2 e^{-(n-1)^2 / (2 r^2)} / (pi n (n + 1/2) (n - 1)
            sqrt(pi delta))

    """
    delta = Bandwidth(delta)
    r = GaussWidth(r)
    n = check_window(n)
    return float(_ext_f0_truncation(delta, r, n))


def lower_bound_general(p):
    """Certified lower bound on the worst-case error at any admissible r.

    Args:
        p (BoundParams): the parameters

    Returns:
        float: the bound, possibly negative when n is small, in which case
            it carries no information

    """
    p.check_lower()
    c_value = c_const(p.delta, p.eps, p.r)
    value = _ext_e1(p.delta, c_value, p.r) - _ext_f0_truncation(
        p.delta, p.r, p.n
    )
    return float(value)


def lower_bound_opt(delta, eps, n, c_value=None):
    """Certified lower bound at the optimal width.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n (int): the window half-size
        c_value (float): a positive lower estimate of C to use instead of
            C at the optimal width, e.g. from :func:`certified_c_floor`

    Returns:
        float

    Raises:
        CertificateInvalid: if delta >= pi/2, C is not positive or n is
            below :func:`n_min`

    """
    delta = Bandwidth(delta)
    eps = MillsEpsilon(eps)
    n = check_window(n)
    _check_lower_band(delta)
    if c_value is None:
        c_value = c_const(delta, eps, optimal_width(delta, n))
    else:
        c_value = check_finite(c_value, "c_value")
    if c_value <= 0:
        raise CertificateInvalid("C = {} is not positive".format(c_value))
    smallest = n_min(delta, eps, c_value)
    if n < smallest:
        raise CertificateInvalid(
            "n = {} is below the admissible minimum {}".format(n, smallest)
        )
    pd = _pi_minus(delta)
    nm1 = ExtendedReal(n - 1)
    nm1_32 = nm1 * nm1.sqrt()
    head = c_value * pd * pd.sqrt()
    tail = 2.0 * SQRT2 / (pd * SQRT_PI) * nm1_32 / (n * (n + 0.5))
    weight = _exp(-(pd * nm1) * 0.5)
    denom = PI * ExtendedReal(2.0 * delta).sqrt() * nm1_32
    return float((head - tail) * weight / denom)


def e2_tail_bound(delta, r, n):
    """Upper bound on the truncation error of any unit-norm signal.

    Args:
        delta (float): the bandwidth
        r (float): the Gaussian width
        n (int): the window half-size

    Returns:
        float: r e^{-(n-1)^2 / (2 r^2)} / (pi n sqrt(n - 1))

    """
    Bandwidth(delta)
    r = GaussWidth(r)
    n = check_window(n)
    return float(_ext_e2(r, n))


def _ext_e2(r, n):
    weight = _exp(-ExtendedReal((n - 1) ** 2) / (2.0 * r * r))
    return r * weight / (PI * n * ExtendedReal(n - 1).sqrt())


def upper_bound_terms(delta, r, n):
    """The three additive pieces of the general upper bound.

    Args:
        delta (float): the bandwidth
        r (float): the Gaussian width
        n (int): the window half-size

    Returns:
        UpperBoundTerms: the aliasing term from the spectral copies, the main
            spectral term and the truncation tail

    """
    delta = Bandwidth(delta)
    r = GaussWidth(r)
    n = check_window(n)
    pd = _pi_minus(delta)
    r2 = ExtendedReal(r) * r
    scale = _exp(-(pd * pd) * r2 * 0.5) / (PI * pd * r)
    correction = 1.0 + 1.0 / (2.0 * PI * (3.0 * PI - float(delta)) * r2)
    copies = 1.0 + correction * _exp(
        -2.0 * PI * (2.0 * PI - float(delta)) * r2
    )
    aliasing = copies / ((2.0 * pd).sqrt() * r) * scale
    main = ExtendedReal(2.0 * delta).sqrt() * scale
    return UpperBoundTerms(
        aliasing=float(aliasing),
        main=float(main),
        truncation=float(_ext_e2(r, n)),
    )


def upper_bound_general(delta, r, n):
    """Upper bound on the worst-case error at any width r.

    Args:
        delta (float): the bandwidth
        r (float): the Gaussian width
        n (int): the window half-size

    Returns:
        float

    """
    terms = upper_bound_terms(delta, r, n)
    return terms.aliasing + terms.main + terms.truncation


def upper_bound_opt(delta, n):
    """Upper bound on the worst-case error at the optimal width.

    Args:
        delta (float): the bandwidth
        n (int): the window half-size

    Returns:
        float

    """
    delta = Bandwidth(delta)
    n = check_window(n)
    pd = _pi_minus(delta)
    nm1 = ExtendedReal(n - 1)
    copies = 1.0 + (1.0 + 1.0 / (6.0 * PI)) * _exp(-4.0 * PI)
    factor = (
        ExtendedReal(2.0 * delta).sqrt()
        + nm1.sqrt() / n
        + copies / (2.0 * nm1).sqrt()
    )
    weight = _exp(-(pd * nm1) * 0.5)
    return float(factor * weight / (PI * (pd * nm1).sqrt()))


def theoretical_rate(delta):
    """Exponential decay rate per unit of n shared by both bounds.

    Args:
        delta (float): the bandwidth

    Returns:
        float: -(pi - delta) / 2

    """
    delta = Bandwidth(delta)
    return -(math.pi - delta) / 2.0


def bound_pair(delta, eps, n, r=None):
    """Lower and upper bound at one window, at r or at the optimal width.

    Args:
        delta (float): the bandwidth
        eps (float): the Mills accuracy parameter
        n (int): the window half-size
        r (float): the Gaussian width, None for the optimal width

    Returns:
        BoundPair

    """
    if r is None:
        return BoundPair(
            lower=lower_bound_opt(delta, eps, n),
            upper=upper_bound_opt(delta, n),
        )
    params = BoundParams(delta, eps, n, r)
    return BoundPair(
        lower=lower_bound_general(params),
        upper=upper_bound_general(delta, r, n),
    )
