"""Exception types shared across the package."""


class CostOverflowError(ArithmeticError):
    """A finite move count would exceed the 64-bit cap."""


class ResourceLimitError(RuntimeError):
    """A configured limit (cell budget, materialization cap, search size) was exceeded."""


class UnsolvableError(ValueError):
    """The requested instance has no solution under the given pebble budget."""


class TableRangeError(ValueError):
    """A lookup needs entries beyond the extents of the supplied tables."""
