"""Exception types raised across the package.

Every error derives from :class:`ErleError`, itself a ``ValueError``, so
callers that only care about "bad input" can catch one thing.
"""


class ErleError(ValueError):
    pass


class Truncated(ErleError):
    """Input ended before a complete structure could be read."""


# BMP

class BmpError(ErleError):
    pass


class BadSignature(BmpError):
    pass


class UnsupportedFormat(BmpError):
    pass


class BmpTruncated(BmpError, Truncated):
    pass


class DimensionOverflow(BmpError):
    pass


# codec

class NegativeThreshold(ErleError):
    pass


class CountMismatch(ErleError):
    pass


# container

class ContainerError(ErleError):
    pass


class BadMagic(ContainerError):
    pass


class UnsupportedVersion(ContainerError):
    pass


class BadMode(ContainerError):
    pass


class ZeroCountRecord(ContainerError):
    pass


class CountConservationViolated(ContainerError):
    pass


class TooManyRecords(ContainerError):
    pass


class ContainerTruncated(ContainerError, Truncated):
    pass


# metrics

class ZeroCompressedSize(ErleError):
    pass


class DimensionMismatch(ErleError):
    pass
