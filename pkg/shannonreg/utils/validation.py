"""Argument checks shared by the numerical modules."""

import math

from shannonreg.exceptions import DomainError


def check_finite(value, name):
    """Check that a value is a finite real number.

    Args:
        value: the number to check
        name (str): argument name used in the error message

    Returns:
        float: the value converted to float

    Raises:
        DomainError: if the value is not a finite real number

    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(
            "{} must be a real number, got {!r}".format(name, value)
        )
    if not math.isfinite(value):
        raise DomainError("{} must be finite, got {}".format(name, value))
    return value


def check_positive(value, name):
    """Check that a value is a finite, strictly positive real.

    Args:
        value: the number to check
        name (str): argument name used in the error message

    Returns:
        float: the value converted to float

    Raises:
        DomainError: if the value is not strictly positive

    """
    value = check_finite(value, name)
    if value <= 0:
        raise DomainError("{} must be > 0, got {}".format(name, value))
    return value


def check_window(n, minimum=2):
    """Check a window half-size.

    Args:
        n: the half-size of the sample window
        minimum (int): smallest admissible value

    Returns:
        int: n as an int

    Raises:
        DomainError: if n is not an integer or is below minimum

    """
    try:
        is_integral = not isinstance(n, bool) and int(n) == n
    except (TypeError, ValueError, OverflowError):
        is_integral = False
    if not is_integral:
        raise DomainError("n must be an integer, got {!r}".format(n))
    n = int(n)
    if n < minimum:
        raise DomainError("n must be >= {}, got {}".format(minimum, n))
    return n
