"""Shared exception hierarchy."""


class SoftscaleError(Exception):
    """Base class for all errors raised by this package."""


class ValuationMismatchError(SoftscaleError, TypeError):
    """Operands or structures belong to different truth-value algebras."""


class CarrierError(SoftscaleError, ValueError):
    """A value lies outside the carrier of its truth-value algebra."""


class DimensionError(SoftscaleError, ValueError):
    """Matrix or vector shape does not match the declared element sets."""


class UnknownElementError(SoftscaleError, KeyError):
    """An element, term, object, or attribute identifier is not declared."""
