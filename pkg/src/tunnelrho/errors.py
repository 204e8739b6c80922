"""Typed errors raised by the library.

Every domain error derives from :class:`TunnelRhoError`, so callers (the CLI
in particular) can separate domain failures from programming errors.
"""


class TunnelRhoError(Exception):
    """Base class for domain errors."""


class InfiniteSlope(TunnelRhoError):
    pass


class EqualSlopes(TunnelRhoError):
    pass


class NotCoprime(TunnelRhoError):
    pass


class DegenerateTorusKnot(TunnelRhoError):
    pass


class NotFound(TunnelRhoError):
    pass


class NoWaves(TunnelRhoError):
    pass


class MixedBases(TunnelRhoError):
    pass


class InvalidSystem(TunnelRhoError):
    pass


class UnknownGenerator(TunnelRhoError):
    pass


class EvenNumeratorTarget(TunnelRhoError):
    pass


class NotUnimodular(TunnelRhoError):
    pass


class AmbiguousNumerator(TunnelRhoError):
    pass


class CertificateError(TunnelRhoError):
    pass
