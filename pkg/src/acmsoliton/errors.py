"""Exception hierarchy for the workbench."""

from __future__ import annotations


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class BadIndex(GeometryError):
    pass


class DuplicateBracket(GeometryError):
    pass


class JacobiViolation(GeometryError):
    """Structure constants do not define a Lie algebra."""


class MetricNotSPD(GeometryError):
    pass


class BadSlot(GeometryError):
    pass


class BadValence(GeometryError):
    pass


class NotSymmetric(GeometryError):
    pass


class DegeneratePlane(GeometryError):
    """The two vectors spanning a plane are linearly dependent."""


class PreconditionNotMet(GeometryError):
    pass


class ManifestError(ValueError):
    """Base class for manifest input problems (CLI exit code 2)."""


class ParseError(ManifestError):
    pass


class SchemaError(ManifestError):
    pass


class RationalFormatError(ManifestError):
    pass
