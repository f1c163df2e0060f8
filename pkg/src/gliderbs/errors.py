"""Typed errors shared by all gliderbs modules."""


class GbsError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(GbsError):
    """Two operands live in different fields, or a valuation was applied
    to an element outside its field of definition."""


class ParseError(GbsError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SpecValidationError(GbsError):
    """A filtration / step-function / glider spec violates an invariant."""


class BaseMismatchError(GbsError):
    """Lattice operands over different base rings or ambient dimensions."""


class RankError(GbsError):
    """Generators do not span a full lattice where one is required."""


class ContainmentError(GbsError):
    """An operation required Y to be contained in X and it is not."""


class UnsupportedError(GbsError):
    """Input is well-formed but outside the implemented class."""


class MaximalityError(GbsError):
    """An operation requires a maximal order and the hypothesis failed
    (or was not declared by the caller)."""


class SchemaError(GbsError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)
