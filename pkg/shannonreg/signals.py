"""Bandlimited test signals, the sinc kernel and finite sample windows."""

import math

import numpy as np

from shannonreg.config import config
from shannonreg.exceptions import DomainError, SampleFileError
from shannonreg.logging import logging
from shannonreg.special import (
    PI,
    ExtendedReal,
    comp_sum,
    ext_sin,
    two_sum,
)
from shannonreg.utils import (
    ConfigKey,
    check_finite,
    check_positive,
    check_window,
)


_TAYLOR_THRESHOLD = 1e-8


class Bandwidth(float):
    """Angular band edge delta of a Paley-Wiener space, 0 < delta < pi.

    Args:
        delta (float): the band edge in radians

    Raises:
        DomainError: if delta is not strictly inside (0, pi)

    """

    def __new__(cls, delta):  # noqa: D102
        delta = check_finite(delta, "delta")
        if not 0 < delta < math.pi:
            raise DomainError(
                "delta must lie in (0, pi), got {}".format(delta)
            )
        return super().__new__(cls, delta)


def sinc(x):
    """Normalized sinc, sin(pi x) / (pi x) with sinc(0) = 1.

    The argument is reduced to [-1/2, 1/2] before the sine is taken, so the
    kernel is exactly 0 at every nonzero integer.

    Args:
        x (float): the point

    Returns:
        float

    """
    x = float(x)
    if abs(x) < _TAYLOR_THRESHOLD:
        px = math.pi * x
        return 1.0 - px * px / 6.0
    k = round(x)
    frac = x - k
    if frac == 0.0:
        return 0.0
    s = math.sin(math.pi * frac)
    if k % 2:
        s = -s
    return s / (math.pi * x)


def ext_f0_eval(delta, t):
    """Double-double value of :func:`f0_eval`.

    Args:
        delta (float): the bandwidth
        t (float): the point

    Returns:
        ExtendedReal

    """
    delta = Bandwidth(delta)
    t = check_finite(t, "t")
    peak = (ExtendedReal(delta) / PI).sqrt()
    u = ExtendedReal.from_pair(two_sum(t, -0.5)) * delta
    if not u:
        return peak
    return peak * ext_sin(u) / u


def f0_eval(delta, t):
    """Evaluate the extremal test function of the space B_delta.

    f0(t) = sin((t - 1/2) delta) / (sqrt(pi delta) (t - 1/2)), which has unit
    norm and peaks at t = 1/2 with value sqrt(delta / pi). The value is
    computed in double-double and rounded once.

    Args:
        delta (float): the bandwidth
        t (float): the point

    Returns:
        float

    """
    return float(ext_f0_eval(delta, t))


def f0_hat_abs(delta, xi):
    """Modulus of the Fourier transform of f0.

    Args:
        delta (float): the bandwidth
        xi (float): the frequency

    Returns:
        float: 1 / sqrt(2 delta) on [-delta, delta], 0 elsewhere

    """
    delta = Bandwidth(delta)
    xi = check_finite(xi, "xi")
    if abs(xi) <= delta:
        return 1.0 / math.sqrt(2.0 * delta)
    return 0.0


class PWSignal(object):
    """A real bandlimited signal that can be evaluated pointwise.

    Subclasses implement :meth:`evaluate`; :meth:`evaluate_many` may be
    overridden with a vectorized version.

    Args:
        bandwidth (float): the band edge delta of the signal
        declared_norm (float): the L2 norm of the signal if known, else None

    """

    def __init__(self, bandwidth, declared_norm=None):
        self.bandwidth = Bandwidth(bandwidth)
        self.declared_norm = declared_norm

    def evaluate(self, t):  # noqa
        raise NotImplementedError(
            "evaluate is not implemented by PWSignal. Please override in "
            "subclasses."
        )

    def ext_evaluate(self, t):
        """Evaluate the signal in double-double.

        The base version widens :meth:`evaluate`; subclasses with a
        closed form override it.

        Args:
            t (float): the point

        Returns:
            ExtendedReal

        """
        return ExtendedReal(self.evaluate(t))

    def evaluate_many(self, ts):
        """Evaluate the signal on an array of points.

        Args:
            ts: array-like of points

        Returns:
            numpy.ndarray: the values

        """
        return np.array([self.evaluate(t) for t in np.ravel(ts)], dtype=float)

    def __call__(self, t):
        """Evaluate the signal at a point.

        Args:
            t (float): the point

        Returns:
            float

        """
        return self.evaluate(t)


class ShiftedSincSignal(PWSignal):
    """The unit-norm signal f0 of bandwidth delta, centred at t = 1/2."""

    def __init__(self, delta):
        super().__init__(delta, declared_norm=1.0)

    def evaluate(self, t):
        """Evaluate f0 at t.

        Args:
            t (float): the point

        Returns:
            float

        """
        return f0_eval(self.bandwidth, t)

    def ext_evaluate(self, t):
        """Evaluate f0 at t in double-double.

        Args:
            t (float): the point

        Returns:
            ExtendedReal

        """
        return ext_f0_eval(self.bandwidth, t)

    def evaluate_many(self, ts):
        """Evaluate f0 on an array of points with numpy.

        Args:
            ts: array-like of points

        Returns:
            numpy.ndarray: the values

        """
        u = (np.asarray(ts, dtype=float) - 0.5) * self.bandwidth
        return math.sqrt(self.bandwidth / math.pi) * np.sinc(u / math.pi)

    def __repr__(self):
        return "ShiftedSincSignal(delta={!r})".format(float(self.bandwidth))


class CallableSignal(PWSignal):
    """Wrap a user function of one real variable as a bandlimited signal.

    Args:
        bandwidth (float): the band edge delta the function is known to have
        fn (callable): maps a float to a float
        declared_norm (float): its L2 norm, if known

    """

    def __init__(self, bandwidth, fn, declared_norm=None):
        super().__init__(bandwidth, declared_norm=declared_norm)
        if not callable(fn):
            raise DomainError("fn must be callable, got {!r}".format(fn))
        self.fn = fn

    def evaluate(self, t):
        """Evaluate the wrapped function.

        Args:
            t (float): the point

        Returns:
            float

        """
        return float(self.fn(t))


class SampleSet(object):
    """The samples f(j) for j = -n+1, ..., n.

    Args:
        n (int): the window half-size, at least 2
        values: the 2n sample values in increasing order of j

    Raises:
        DomainError: if n is invalid or the number of values is not 2n

    """

    def __init__(self, n, values):
        self.n = check_window(n)
        values = tuple(check_finite(v, "sample value") for v in values)
        if len(values) != 2 * self.n:
            raise DomainError(
                "a window with n = {} needs {} samples, got {}".format(
                    self.n, 2 * self.n, len(values)
                )
            )
        self.values = values

    @classmethod
    def from_pairs(cls, pairs):
        """Build from ``(j, value)`` pairs, checking the node layout.

        Args:
            pairs: iterable of ``(j, value)`` in increasing order of j

        Returns:
            SampleSet

        Raises:
            DomainError: if the nodes are not exactly -n+1, ..., n

        """
        pairs = list(pairs)
        if len(pairs) % 2:
            raise DomainError(
                "a sample window holds an even number of nodes, "
                "got {}".format(len(pairs))
            )
        n = len(pairs) // 2
        expected = list(range(-n + 1, n + 1))
        nodes = [j for j, _ in pairs]
        if nodes != expected:
            raise DomainError(
                "nodes must be the consecutive integers {}..{}".format(
                    -n + 1, n
                )
            )
        return cls(n, [v for _, v in pairs])

    @property
    def nodes(self):
        """range: the sample positions -n+1, ..., n."""
        return range(-self.n + 1, self.n + 1)

    @property
    def pairs(self):
        """list: the ``(j, value)`` pairs in increasing order of j."""
        return list(zip(self.nodes, self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, j):
        if not -self.n < j <= self.n:
            raise KeyError("node {} is outside the window".format(j))
        return self.values[j + self.n - 1]

    def __eq__(self, other):
        if not isinstance(other, SampleSet):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self):
        return "SampleSet(n={}, values={!r})".format(self.n, self.values)

    def combine(self, a, other, b):
        """Linear combination ``a * self + b * other`` on the same window.

        Args:
            a (float): weight of this sample set
            other (SampleSet): a sample set with the same n
            b (float): weight of the other sample set

        Returns:
            SampleSet

        Raises:
            DomainError: if the windows differ

        """
        if other.n != self.n:
            raise DomainError(
                "cannot combine windows n = {} and n = {}".format(
                    self.n, other.n
                )
            )
        return SampleSet(
            self.n,
            [
                float(comp_sum((a * u, b * v)))
                for u, v in zip(self.values, other.values)
            ],
        )


def signal_samples(signal, n):
    """Sample a signal at the integers of the window of half-size n.

    Args:
        signal (PWSignal): the signal
        n (int): the window half-size

    Returns:
        SampleSet

    """
    n = check_window(n)
    return SampleSet(n, [signal.evaluate(j) for j in range(-n + 1, n + 1)])


def f0_samples(delta, n):
    """Sample f0 at j = -n+1, ..., n.

    Args:
        delta (float): the bandwidth
        n (int): the window half-size

    Returns:
        SampleSet

    """
    return signal_samples(ShiftedSincSignal(delta), n)


def pw_norm_estimate(signal, half_width=None, step=None):
    """Estimate the L2 norm of a signal with the trapezoid rule.

    Args:
        signal (PWSignal): the signal
        half_width (float): integrate over [-half_width, half_width];
            defaults to the ``norm`` configuration section
        step (float): the grid spacing; defaults to the ``norm``
            configuration section

    Returns:
        float: sqrt of the trapezoid sum of |f|^2

    """
    settings = config.get_config()[ConfigKey.NORM]
    if half_width is None:
        half_width = settings[ConfigKey.HALF_WIDTH]
    if step is None:
        step = settings[ConfigKey.STEP]
    half_width = check_positive(half_width, "half_width")
    step = check_positive(step, "step")
    count = int(math.ceil(2.0 * half_width / step))
    ts = np.linspace(-half_width, half_width, count + 1)
    h = 2.0 * half_width / count
    squares = signal.evaluate_many(ts) ** 2
    squares[0] *= 0.5
    squares[-1] *= 0.5
    logging.debug(
        "Norm estimate of {} on {} points".format(signal, count + 1)
    )
    total = float(comp_sum(squares.tolist())) * h
    return math.sqrt(max(total, 0.0))


_SAMPLE_HEADER = "# j,value\n"


def write_samples(samples, path):
    """Write a sample set as ``j,value`` lines.

    Args:
        samples (SampleSet): the samples
        path (str): the destination file

    """
    with open(path, "w", encoding="utf-8", newline="\n") as fout:
        fout.write(_SAMPLE_HEADER)
        for j, v in samples.pairs:
            fout.write("{},{:.16e}\n".format(j, v))
    logging.info("Wrote {} samples to {}".format(len(samples), path))


def read_samples(path):
    """Read a sample file written by :func:`write_samples`.

    Blank lines and lines starting with ``#`` are skipped.

    Args:
        path (str): the sample file

    Returns:
        SampleSet

    Raises:
        SampleFileError: if a line does not parse or the nodes are not a
            contiguous window -n+1, ..., n

    """
    pairs = []
    try:
        with open(path, encoding="utf-8") as fin:
            lines = fin.readlines()
    except UnicodeDecodeError as e:
        raise SampleFileError("{}: not a UTF-8 text file: {}".format(path, e))
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            j, value = line.split(",")
            pairs.append((int(j), float(value)))
        except ValueError:
            raise SampleFileError(
                "{}:{}: expected 'j,value', got {!r}".format(
                    path, lineno, line
                )
            )
    try:
        samples = SampleSet.from_pairs(pairs)
    except DomainError as e:
        raise SampleFileError("{}: {}".format(path, e))
    logging.info("Read {} samples from {}".format(len(samples), path))
    return samples
