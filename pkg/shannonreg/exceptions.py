"""Custom exceptions for the shannonreg project."""


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation.

    An example of when this might occur is asking for the Mills-ratio bounds
    at a non-positive point, or for a sample window with fewer than 2 nodes
    on each side.

    """

    pass


class CertificateInvalid(Exception):
    """Raised when the preconditions of a closed-form bound do not hold.

    A certificate is void when C_{r,delta,eps} is not positive, when n is
    below the admissible window size, when r leaves the width corridor, or
    when the bandwidth is outside the range the lower bound is proved for.

    """

    pass


class QuadratureError(Exception):
    """Raised when a numerical quadrature fails to converge."""

    pass


class DegenerateFitError(ValueError):
    """Raised when a decay-rate fit has no meaningful slope."""

    pass


class SampleFileError(IOError):
    """Raised when a sample or table file is malformed."""

    pass


class ConfigurationError(ValueError):
    """Raised when a configuration file does not parse or validate."""

    pass
