"""Exception hierarchy shared by all suites."""


class VerifierError(Exception):
    """Base class for every error raised by this package."""


class NonSymmetric(VerifierError):
    pass


class UnknownName(VerifierError):
    pass


class DimensionMismatch(VerifierError):
    pass


class NotIntegralPairing(VerifierError):
    pass


class NotEven(VerifierError):
    pass


class NotDefinite(VerifierError):
    pass


class Degenerate(VerifierError):
    pass


class TooLarge(VerifierError):
    pass


class ParityViolation(VerifierError):
    pass


class NonIntegralGenus(VerifierError):
    pass


class TooManyHypersurfaces(VerifierError):
    pass


class BadMonomial(VerifierError):
    pass


class ExhaustedDomain(VerifierError):
    pass


class CenterOnImage(VerifierError):
    pass


class RankNotStabilized(VerifierError):
    pass


class NotIdentified(VerifierError):
    pass


class NotTransverse(VerifierError):
    pass


class SpanNotPlane(VerifierError):
    pass


class ContainmentFails(VerifierError):
    pass


class RetriesExhausted(VerifierError):
    pass


class EnumerationTooLarge(VerifierError):
    pass


class ConfigError(VerifierError):
    pass
