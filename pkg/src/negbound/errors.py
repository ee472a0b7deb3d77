"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class NegboundError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(NegboundError):
    """A cluster of infinitely near points violates a structural rule."""

    def __init__(self, message: str, *, point_id: int | None = None):
        super().__init__(message)
        self.point_id = point_id


class DuplicateIdError(ConfigurationError):
    """Two points were declared with the same id."""


class ForwardReferenceError(ConfigurationError):
    """A point lists a proximity to an id that is not strictly smaller."""


class TooManyProximitiesError(ConfigurationError):
    """A point lists more than two proximities."""


class InvalidSatelliteError(ConfigurationError):
    """A satellite's second target is not among its parent's proximities."""


class NormalizationError(ConfigurationError):
    """Proximities are not normalized (parent, i.e. largest id, first)."""


class DanglingProximityError(ConfigurationError):
    """A subcluster would retain a proximity to a removed point."""


class MultipleOriginsError(ConfigurationError):
    """An operation requiring a unique origin received several."""


class UnknownPointError(ConfigurationError):
    """A point id does not belong to the cluster."""


class NonPositiveCoefficientError(NegboundError):
    """An unloading coefficient that must be positive is not."""


class LatticeError(NegboundError):
    """Base class for intersection-lattice errors."""


class SurfaceMismatchError(LatticeError):
    """Two divisor classes live on different surfaces or lattices."""


class NotHirzebruchError(LatticeError):
    """A Hirzebruch-only operation was applied to the plane."""


class UnknownChartError(LatticeError):
    """An affine chart id is not one of the supported charts."""


class NonPositiveEpsilonError(NegboundError):
    """An epsilon parameter must be a positive rational."""


class ParseError(NegboundError):
    """A text input (cluster file, divisor literal) could not be parsed."""

    def __init__(self, message: str, *, line: int | None = None,
                 source: str | None = None):
        prefix = ""
        if source is not None:
            prefix = source if line is None else f"{source}:{line}"
        elif line is not None:
            prefix = f"line {line}"
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.source = source
