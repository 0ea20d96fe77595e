"""Exception hierarchy shared by all tracezero modules."""


class TraceZeroError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(TraceZeroError, ZeroDivisionError):
    pass


class InvalidInput(TraceZeroError, ValueError):
    pass


class InvalidParameters(InvalidInput):
    pass


class InvalidCurve(InvalidParameters):
    pass


class NotSymmetric(TraceZeroError, ValueError):
    pass


class NotOnCurve(TraceZeroError, ValueError):
    pass


class CannotCompressIdentity(TraceZeroError, ValueError):
    pass


class NotTraceZero(TraceZeroError, ValueError):
    pass


class DegenerateInput(TraceZeroError, ValueError):
    """The symmetrized equation vanishes identically in the missing coordinate."""


class InternalError(TraceZeroError, RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
