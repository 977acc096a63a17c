"""Exception hierarchy shared by every module."""


class LatDualError(Exception):
    """Base class for all errors raised by latdual."""


class InputError(LatDualError, ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(LatDualError):
    """A documented precondition of an operation does not hold."""


class SizeLimitError(LatDualError):
    """A brute-force guard or a resource limit was exceeded."""


class UnsupportedDimensionError(InputError):
    pass


class NotAPosetError(InputError):
    """The order induced by singleton implications has a directed cycle."""

    def __init__(self, cycle, names=None):
        self.cycle = tuple(cycle)
        shown = [names[i] for i in self.cycle] if names else list(self.cycle)
        super().__init__("not a partial order, cycle: " + " -> ".join(map(str, shown)))


class AntichainError(InputError):
    """A family rejected by antichain validation.

    ``kind`` is one of ``"not-closed"``, ``"comparable"`` or ``"duplicate"``;
    ``indices`` are the positions of the offending members in the input.
    """

    def __init__(self, kind, indices, message):
        self.kind = kind
        self.indices = tuple(indices)
        super().__init__(message)
