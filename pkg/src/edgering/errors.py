"""Exception hierarchy shared by all edgering modules."""


class EdgeringError(Exception):
    """Base class for every error raised by the package."""


class InvalidSpec(EdgeringError, ValueError):
    pass


class SubsetTooSmall(EdgeringError, ValueError):
    pass


class TooLarge(EdgeringError):
    """A configured resource cap would be exceeded."""


class NotBipartite(EdgeringError, ValueError):
    pass


class NotEvenType(EdgeringError, ValueError):
    pass


class NotTopBetti(EdgeringError, ValueError):
    pass


class OverlapError(EdgeringError, ValueError):
    pass


class EmptyTable(EdgeringError, ValueError):
    pass


class VerificationFailed(EdgeringError):
    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class DisjointnessViolated(EdgeringError):
    pass


class FormulaMismatch(EdgeringError):
    pass
