"""Truncated Shannon series, with and without a Gaussian window.

Every sum runs over the sample window in increasing order of j. Kernel
values are evaluated in double-double, multiplied by the samples and
accumulated with :func:`shannonreg.special.comp_sum`, so a reconstruction is
bit-for-bit deterministic.
"""

import math

from shannonreg.exceptions import DomainError
from shannonreg.signals import Bandwidth, signal_samples
from shannonreg.special import (
    ONE,
    PI,
    ZERO,
    ExtendedReal,
    comp_sum,
    sin_pi,
    two_prod,
    two_sum,
)
from shannonreg.utils import check_finite, check_window


# e^{-x} is 0 in double beyond this x
_GAUSS_UNDERFLOW = 745.2


class GaussWidth(float):
    """Width r > 0 of the Gaussian window e^{-(t-j)^2 / (2 r^2)}.

    Args:
        r (float): the width

    Raises:
        DomainError: if r is not strictly positive

    """

    def __new__(cls, r):  # noqa: D102
        r = check_finite(r, "r")
        if r <= 0:
            raise DomainError("r must be > 0, got {}".format(r))
        return super().__new__(cls, r)


def _ext_width(r):
    return ExtendedReal.from_pair(two_prod(r, r)).ldexp(1)


def _ext_kernel(sin_pi_t, t, j, width2=None):
    # sin(pi (t - j)) = (-1)^j sin(pi t) for integer j
    d = ExtendedReal.from_pair(two_sum(t, -float(j)))
    if not d:
        return ONE
    if not sin_pi_t:
        return ZERO
    s = -sin_pi_t if j % 2 else sin_pi_t
    value = s / (PI * d)
    if width2 is None:
        return value
    return value * (-(d * d) / width2).exp()


def gauss_kernel(t, j, r):
    """Gaussian-regularized sinc kernel centred at node j.

    Args:
        t (float): the evaluation point
        j (int): the node
        r (float): the Gaussian width

    Returns:
        float: sinc(t - j) e^{-(t - j)^2 / (2 r^2)}, rounded once from
            double-double

    """
    r = GaussWidth(r)
    t = check_finite(t, "t")
    return float(_ext_kernel(sin_pi(t), t, j, _ext_width(r)))


def _ext_series(samples, t, width2=None):
    s = sin_pi(t)
    return comp_sum(
        _ext_kernel(s, t, j, width2) * v for j, v in samples.pairs
    )


def ext_reconstruct_gauss(samples, r, t):
    """Double-double value of :func:`reconstruct_gauss`.

    Args:
        samples (SampleSet): the samples f(j), j = -n+1, ..., n
        r (float): the Gaussian width
        t (float): the evaluation point

    Returns:
        ExtendedReal

    """
    r = GaussWidth(r)
    t = check_finite(t, "t")
    return _ext_series(samples, t, _ext_width(r))


def reconstruct_gauss(samples, r, t):
    """Evaluate the truncated Gaussian-regularized Shannon series.

    Args:
        samples (SampleSet): the samples f(j), j = -n+1, ..., n
        r (float): the Gaussian width
        t (float): the evaluation point; any finite t is accepted

    Returns:
        float: sum of f(j) sinc(t - j) e^{-(t - j)^2 / (2 r^2)}

    """
    return float(ext_reconstruct_gauss(samples, r, t))


def ext_reconstruct_shannon(samples, t):
    """Double-double value of :func:`reconstruct_shannon`.

    Args:
        samples (SampleSet): the samples
        t (float): the evaluation point

    Returns:
        ExtendedReal

    """
    t = check_finite(t, "t")
    return _ext_series(samples, t)


def reconstruct_shannon(samples, t):
    """Evaluate the plainly truncated Shannon series.

    Args:
        samples (SampleSet): the samples
        t (float): the evaluation point

    Returns:
        float: sum of f(j) sinc(t - j) over the window

    """
    return float(ext_reconstruct_shannon(samples, t))


def optimal_width(delta, n):
    """Gaussian width that balances the two error sources for window n.

    Args:
        delta (float): the bandwidth
        n (int): the window half-size

    Returns:
        GaussWidth: sqrt((n - 1) / (pi - delta))

    """
    delta = Bandwidth(delta)
    n = check_window(n)
    return GaussWidth(math.sqrt((n - 1) / (math.pi - delta)))


def _outer_nodes(t, r, n):
    reach = math.sqrt(2.0 * _GAUSS_UNDERFLOW) * r
    right = range(n + 1, int(math.ceil(t + reach)) + 1)
    left = range(-n, int(math.floor(t - reach)) - 1, -1)
    return right, left


def _ext_remainder(signal, r, t, n):
    right, left = _outer_nodes(t, r, n)
    s = sin_pi(t)
    width2 = _ext_width(r)
    return comp_sum(
        _ext_kernel(s, t, j, width2) * signal.ext_evaluate(j)
        for nodes in (right, left)
        for j in nodes
    )


def truncation_remainder(signal, r, t, n):
    """The part of the infinite regularized series outside the window.

    Nodes are summed outward from the window until the Gaussian factor
    underflows.

    Args:
        signal (PWSignal): the signal whose samples are summed
        r (float): the Gaussian width
        t (float): the evaluation point
        n (int): the window half-size

    Returns:
        float: the sum of f(j) sinc(t - j) e^{-(t - j)^2 / (2 r^2)} over
            j <= -n and j > n

    """
    r = GaussWidth(r)
    t = check_finite(t, "t")
    n = check_window(n)
    return float(_ext_remainder(signal, r, t, n))


def regularization_error(signal, r, t, n):
    """Error of the untruncated regularized series at t.

    The window of half-size n is summed first, then the remainder outside
    it, so the result does not depend on n beyond rounding.

    Args:
        signal (PWSignal): the signal
        r (float): the Gaussian width
        t (float): the evaluation point
        n (int): the window half-size used to split the sum

    Returns:
        float: f(t) minus the full regularized series at t

    """
    r = GaussWidth(r)
    t = check_finite(t, "t")
    n = check_window(n)
    window = ext_reconstruct_gauss(signal_samples(signal, n), r, t)
    full = window + _ext_remainder(signal, r, t, n)
    return float(signal.ext_evaluate(t) - full)
