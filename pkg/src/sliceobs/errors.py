"""Exception hierarchy.  The CLI maps each family to an exit code."""


class SliceObsError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class InvalidInputError(SliceObsError, ValueError):
    exit_code = 1


class NotSeifertMatrixError(InvalidInputError):
    def __init__(self, reason):
        super().__init__(f"not a Seifert matrix: {reason}")
        self.reason = reason


class SingularMatrixError(SliceObsError, ZeroDivisionError):
    def __init__(self, msg="singular matrix"):
        super().__init__(msg)


class UnsupportedComputationError(SliceObsError):
    """The input is valid but the requested computation is outside scope."""

    exit_code = 2


class VerificationError(SliceObsError):
    """A computed value disagrees with its closed-form expectation."""

    exit_code = 3
