"""Exception types shared across the package."""


class AntimagicError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(AntimagicError):
    """A requested size exceeds the configured resource cap."""


class UnlabelableGraphError(AntimagicError):
    """The graph has no edges, so no edge labeling exists."""


class LabelingError(AntimagicError):
    """Base class for invalid explicit label assignments."""


class LabelLengthError(LabelingError):
    """Assignment length differs from the graph's edge count."""


class DuplicateLabelError(LabelingError):
    """Assignment repeats a label."""


class NonPrimeLabelError(LabelingError):
    """Assignment contains a non-prime entry."""


class GraphLabelingMismatchError(AntimagicError):
    """A labeling was paired with a graph it does not belong to."""


class WeightOverflowError(AntimagicError):
    """Vertex weights would exceed the 64-bit unsigned range."""


class InvalidAddressError(AntimagicError):
    """A tree address lies outside the tree it refers to."""


class InsufficientPrimesError(AntimagicError):
    """A prime table is too short for the requested computation."""


class CensusTooLargeError(AntimagicError):
    """Exhaustive enumeration was requested beyond the edge-count limit."""


class UnsupportedFormatError(AntimagicError):
    """The artifact cannot be exported in the requested format."""
