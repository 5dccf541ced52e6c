"""Error types shared by the library and the CLI."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class CapabilityError(RuntimeError):
    """The request exceeds an enumeration budget."""


class ConsistencyError(AssertionError):
    """An internal cross-check disagreed."""
