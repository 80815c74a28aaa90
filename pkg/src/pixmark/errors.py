"""Exception hierarchy.

Three families map onto the command-line exit codes: format problems (3),
capacity problems (4) and geometry/metadata mismatches (5).
"""


class WatermarkError(Exception):
    """Base class for every error raised by pixmark."""


class FormatError(WatermarkError):
    pass


class MalformedHeader(FormatError):
    pass


class UnsupportedMaxval(FormatError):
    pass


class TruncatedData(FormatError):
    pass


class DimensionOverflow(FormatError):
    pass


class BadHeader(FormatError):
    pass


class LengthMismatch(FormatError):
    pass


class CapacityExceeded(WatermarkError):
    def __init__(self, needed, available):
        super().__init__(f"payload needs {needed} bits but only {available} are available")
        self.needed = needed
        self.available = available


class GeometryError(WatermarkError):
    pass


class OddDimensions(GeometryError):
    pass


class GeometryMismatch(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class MapInconsistent(GeometryError):
    pass


class RangeViolation(GeometryError):
    """Inverse transform produced a value that is not a valid 8-bit pixel."""
