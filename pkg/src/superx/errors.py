"""Exception types shared across the package."""


class SuperxError(Exception):
    """Base class for all superx errors."""


class GroupParseError(SuperxError, ValueError):
    """A group name does not match the supported grammar."""


class CapacityError(SuperxError):
    """A requested computation exceeds the supported size limits."""


class ConsistencyError(SuperxError):
    """An internal structural invariant failed to hold."""
