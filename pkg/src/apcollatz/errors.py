"""Exception hierarchy shared by the library and the CLI."""


class CollatzError(Exception):
    """Base class for every error raised by apcollatz."""


class InvalidProgression(CollatzError, ValueError):
    pass


class UniformParity(CollatzError, ValueError):
    """Raised when splitting a progression whose terms already share one parity."""


class NotUniformlyEven(CollatzError, ValueError):
    pass


class NotUniformlyOdd(CollatzError, ValueError):
    pass


class NotOdd(CollatzError, ValueError):
    pass


class ZeroInput(CollatzError, ValueError):
    """The concrete oracle refuses 0, a fixed point of halving."""


class WordSyntaxError(CollatzError, ValueError):
    pass


class DepthLimitExceeded(CollatzError):
    def __init__(self, depth, limit):
        super().__init__(f"depth {depth} exceeds limit {limit}")
        self.depth = depth
        self.limit = limit


class NotFound(CollatzError, LookupError):
    pass
