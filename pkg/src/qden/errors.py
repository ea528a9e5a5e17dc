"""Domain exception types shared across the toolkit."""


class QdenError(ValueError):
    """Base class for every domain error raised by this package."""


class NodeValidationError(QdenError):
    """A technology-node record is missing fields or has bad lengths."""


class UnknownNodeError(QdenError):
    """A node name is not present in the registry."""


class DegenerateGeometryError(QdenError):
    """A computed layout dimension came out non-positive."""
