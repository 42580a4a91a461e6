class SlopesightError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(SlopesightError, ZeroDivisionError):
    pass


class InvalidTier(SlopesightError, ValueError):
    pass


class EmptySlopeList(SlopesightError, ValueError):
    pass


class DuplicateSlope(SlopesightError, ValueError):
    pass


class InvalidConfiguration(SlopesightError, ValueError):
    pass


class UnboundedPotential(SlopesightError):
    """Fewer than two slopes were observed, so every point of a line is a candidate."""


class InconsistentPair(SlopesightError):
    """A configuration does not generate the observation it was paired with."""


class OrderExhausted(SlopesightError):
    """No prefix of the slope order determines the configuration."""


class OrderTooShort(SlopesightError, ValueError):
    pass


class OracleInconsistent(SlopesightError):
    """The search oracle's answers match no configuration of the stated size."""


class DocumentError(SlopesightError, ValueError):
    """A JSON document or text token could not be decoded."""
