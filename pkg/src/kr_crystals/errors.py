class ShapeError(ValueError):
    """Grid or column dimensions do not fit the requested shape."""


class NotAMemberError(ValueError):
    """Input is not an element of the requested crystal."""


class InvariantError(RuntimeError):
    """A postcondition the library asserts on its own output failed."""
