"""Exception hierarchy."""


class SgSplitError(Exception):
    """Base class for all errors raised by this package."""


class NotComposableError(SgSplitError):
    """Two paths were composed whose endpoints do not match."""


class InvalidPresentationError(SgSplitError):
    """A quiver, relation or module presentation violates its invariants."""


class NotAdmissibleError(SgSplitError):
    """The relation ideal is not admissible within the configured length bound."""


class HypothesisError(SgSplitError):
    """A computation was requested whose stated hypotheses do not hold."""


class DSLError(SgSplitError):
    """Parse error in the presentation DSL, with source position."""

    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
