"""Exception hierarchy shared by the library and the command line."""


class FsnError(Exception):
    """Base class for all library errors."""


class InputError(FsnError, ValueError):
    """Malformed input: bad permutation, subgroup outside its parent, parse failure."""


class ResourceCapError(FsnError):
    """A configured degree/order/lattice cap was exceeded."""

    def __init__(self, message, value=None, cap=None):
        super().__init__(message)
        self.value = value
        self.cap = cap


class ConstructionError(FsnError):
    """A group construction could not satisfy its required facts."""
