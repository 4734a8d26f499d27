"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input document or an argument outside an operation's domain."""


class LemmaViolation(RuntimeError):
    """A structural fact that holds by theory failed computationally.

    Raised only from consistency checks that are unreachable for correct
    code; seeing one means an implementation bug, not a bad input.
    """
