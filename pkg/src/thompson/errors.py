"""Exception hierarchy.

Every error raised by the package derives from :class:`ThompsonError`.  The
three intermediate classes decide the CLI exit status: notation problems
exit 2, violated preconditions exit 3, exhausted resource bounds exit 4.
"""


class ThompsonError(Exception):
    pass


class NotationError(ThompsonError):
    pass


class PreconditionError(ThompsonError):
    pass


class ResourceError(ThompsonError):
    pass


class ParseError(NotationError):
    """Malformed text.  Carries a 1-based line/column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SemanticError(NotationError):
    pass


class DepthExceeded(ResourceError):
    pass


class BoundExceeded(ResourceError):
    pass


class IncompleteAntichain(PreconditionError):
    pass


class IncompleteDomain(IncompleteAntichain):
    pass


class IncompleteRange(IncompleteAntichain):
    pass


class NotBijective(PreconditionError):
    pass


class LeafNotPresent(PreconditionError):
    pass


class SingletonAntichain(PreconditionError):
    pass


class AddressTooShort(PreconditionError):
    pass


class NotIncomparable(PreconditionError):
    pass


class TooShort(PreconditionError):
    pass


class NotFiniteOrder(PreconditionError):
    pass


class FullSupport(PreconditionError):
    pass


class IdentityInput(PreconditionError):
    pass


class NotOrdered(PreconditionError):
    pass


class NotInterleaved(PreconditionError):
    pass


class GapMismatch(PreconditionError):
    pass


class NotInterleavedSwap(PreconditionError):
    pass


class NotSwap(PreconditionError):
    pass


class FullSupportSwap(PreconditionError):
    pass


class NotThreeCycle(PreconditionError):
    pass


class GeneratorInT(PreconditionError):
    pass
