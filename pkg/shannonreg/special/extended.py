"""Double-double arithmetic built from error-free transformations.

An :class:`ExtendedReal` is an unevaluated pair ``hi + lo`` with
``|lo| <= ulp(hi) / 2``, which carries roughly 106 significant bits. The
reconstruction and the certified bounds need it because the interesting
errors sit a few ulps away from the magnitude of the operands.
"""

import functools
import math
import numbers


_SPLITTER = 134217729.0  # 2^27 + 1, exact in double
_EXP_SQUARINGS = 10
_EXP_TERMS = 12
_EXP_OVERFLOW = 709.0
_EXP_UNDERFLOW = -745.2
_SIN_TERMS = 24
_SERIES_CUTOFF = 1e-34


def two_sum(a, b):
    """Sum two doubles exactly.

    Args:
        a (float): first summand
        b (float): second summand

    Returns:
        tuple: ``(s, err)`` with ``s = fl(a + b)`` and ``s + err == a + b``
            exactly.

    """
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    """Sum two doubles exactly, assuming ``|a| >= |b|``.

    Args:
        a (float): the larger summand
        b (float): the smaller summand

    Returns:
        tuple: ``(s, err)`` as in :func:`two_sum`.

    """
    s = a + b
    err = b - (s - a)
    return s, err


def _split(a):
    c = _SPLITTER * a
    abig = c - a
    ahi = c - abig
    return ahi, a - ahi


if hasattr(math, "fma"):

    def two_prod(a, b):
        """Multiply two doubles exactly.

        Args:
            a (float): first factor
            b (float): second factor

        Returns:
            tuple: ``(p, err)`` with ``p = fl(a * b)`` and
                ``p + err == a * b`` exactly.

        """
        p = a * b
        return p, math.fma(a, b, -p)


else:

    def two_prod(a, b):
        """Multiply two doubles exactly (Dekker splitting).

        Args:
            a (float): first factor
            b (float): second factor

        Returns:
            tuple: ``(p, err)`` with ``p = fl(a * b)`` and
                ``p + err == a * b`` exactly.

        """
        p = a * b
        ahi, alo = _split(a)
        bhi, blo = _split(b)
        err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
        return p, err


def _coerce(value):
    if isinstance(value, ExtendedReal):
        return value
    if isinstance(value, numbers.Real):
        return ExtendedReal(float(value))
    return NotImplemented


@functools.total_ordering
class ExtendedReal(object):
    """A real number stored as an unevaluated sum of two doubles.

    Args:
        hi (float): leading component
        lo (float): trailing component; the pair is renormalized so that
            ``hi`` is the double nearest to ``hi + lo``

    """

    __slots__ = ("hi", "lo")

    def __init__(self, hi, lo=0.0):
        hi, lo = two_sum(float(hi), float(lo))
        if not math.isfinite(hi):
            lo = 0.0
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "lo", lo)

    def __setattr__(self, name, value):
        """Reject mutation.

        Args:
            name: ignored
            value: ignored

        Raises:
            AttributeError: always, ExtendedReal is immutable.

        """
        raise AttributeError("ExtendedReal is immutable")

    @classmethod
    def from_pair(cls, pair):
        """Build from the ``(value, err)`` output of a transformation.

        Args:
            pair (tuple): a ``(hi, lo)`` tuple

        Returns:
            ExtendedReal

        """
        return cls(pair[0], pair[1])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        s, e = two_sum(self.hi, other.hi)
        t, f = two_sum(self.lo, other.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        return ExtendedReal(*quick_two_sum(s, e))

    __radd__ = __add__

    def __neg__(self):
        return ExtendedReal(-self.hi, -self.lo)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        return ExtendedReal(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.hi == 0.0:
            raise ZeroDivisionError("ExtendedReal division by zero")
        q1 = self.hi / other.hi
        rem = self - other * q1
        q2 = rem.hi / other.hi
        rem = rem - other * q2
        q3 = rem.hi / other.hi
        q1, q2 = quick_two_sum(q1, q2)
        return ExtendedReal(q1, q2) + q3

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __abs__(self):
        if self.hi < 0 or (self.hi == 0 and self.lo < 0):
            return -self
        return self

    def __float__(self):
        return self.hi + self.lo

    def __bool__(self):
        return self.hi != 0.0 or self.lo != 0.0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.hi == other.hi and self.lo == other.lo

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.hi < other.hi or (
            self.hi == other.hi and self.lo < other.lo
        )

    def __hash__(self):
        return hash((self.hi, self.lo))

    def __repr__(self):
        return "ExtendedReal(hi={!r}, lo={!r})".format(self.hi, self.lo)

    def ldexp(self, exponent):
        """Scale by a power of two, exactly unless the result is subnormal.

        Args:
            exponent (int): the power of two

        Returns:
            ExtendedReal

        """
        return ExtendedReal(
            math.ldexp(self.hi, exponent), math.ldexp(self.lo, exponent)
        )

    def sqrt(self):
        """Square root with one Newton correction in double-double.

        Returns:
            ExtendedReal

        Raises:
            ValueError: for negative values.

        """
        if self.hi < 0:
            raise ValueError("square root of a negative ExtendedReal")
        if self.hi == 0:
            return ExtendedReal(0.0)
        s = math.sqrt(self.hi)
        rem = self - ExtendedReal.from_pair(two_prod(s, s))
        return ExtendedReal(*quick_two_sum(s, rem.hi / (2.0 * s)))

    def exp(self):
        """Exponential in double-double.

        The argument is reduced by multiples of ln 2, scaled by 2^-10, summed
        as an expm1 Taylor series and squared back up.

        Returns:
            ExtendedReal

        """
        if self.hi > _EXP_OVERFLOW:
            return ExtendedReal(math.inf)
        if self.hi < _EXP_UNDERFLOW:
            return ExtendedReal(0.0)
        k = int(round(self.hi / LN2.hi))
        red = (self - LN2 * k).ldexp(-_EXP_SQUARINGS)
        term = red
        total = red
        for i in range(2, _EXP_TERMS + 1):
            term = term * red / i
            total = total + term
            if abs(term.hi) <= abs(total.hi) * _SERIES_CUTOFF:
                break
        # (1 + m)^2 - 1 = m * (m + 2) keeps the expm1 form exact-ish.
        for _ in range(_EXP_SQUARINGS):
            total = total * (total + 2.0)
        return (total + 1.0).ldexp(k)


def comp_sum(terms):
    """Sum a sequence with double-double accuracy, in the given order.

    Each ExtendedReal term contributes both of its components. The result is
    the compensated (two-sum cascade) sum, whose error does not grow with the
    length of the sequence at double precision scale.

    Args:
        terms (iterable): floats, ints or ExtendedReal values

    Returns:
        ExtendedReal: the sum; 0 for an empty sequence.

    """
    s = 0.0
    c = 0.0
    for term in terms:
        if isinstance(term, ExtendedReal):
            parts = (term.hi, term.lo)
        else:
            parts = (float(term),)
        for x in parts:
            t = s + x
            z = t - s
            c += (s - (t - z)) + (x - z)
            s = t
    return ExtendedReal(s, c)


ZERO = ExtendedReal(0.0)
ONE = ExtendedReal(1.0)
PI = ExtendedReal(3.141592653589793, 1.2246467991473532e-16)
LN2 = ExtendedReal(0.6931471805599453, 2.3190468138462996e-17)
SQRT_PI = PI.sqrt()
SQRT2 = ExtendedReal(2.0).sqrt()


def _sin_taylor(x):
    x2 = x * x
    term = x
    total = x
    for i in range(1, _SIN_TERMS):
        term = -(term * x2) / ((2 * i) * (2 * i + 1))
        total = total + term
        if abs(term.hi) <= abs(total.hi) * _SERIES_CUTOFF:
            break
    return total


def ext_sin(x):
    """Sine in double-double.

    The argument is reduced by the nearest multiple of pi held in
    double-double, so accuracy degrades slowly as |x| grows.

    Args:
        x: a float or ExtendedReal

    Returns:
        ExtendedReal

    Raises:
        ValueError: for a non-finite argument

    """
    x = ExtendedReal(x) if not isinstance(x, ExtendedReal) else x
    if not math.isfinite(x.hi):
        raise ValueError("sine of a non-finite value")
    k = int(round(x.hi / PI.hi))
    total = _sin_taylor(x - PI * k)
    return -total if k % 2 else total


def sin_pi(x):
    """Compute sin(pi x) in double-double.

    x is reduced modulo 1 exactly before pi is applied, so the result is
    exactly 0 at every integer.

    Args:
        x: a float or ExtendedReal

    Returns:
        ExtendedReal

    Raises:
        ValueError: for a non-finite argument

    """
    x = ExtendedReal(x) if not isinstance(x, ExtendedReal) else x
    if not math.isfinite(x.hi):
        raise ValueError("sine of a non-finite value")
    k = round(x.hi)
    frac = x - k
    if not frac:
        return ZERO
    total = _sin_taylor(PI * frac)
    return -total if int(k) % 2 else total
