"""Exception types shared across the package."""


class SuperweylError(Exception):
    """Base class for all library errors."""


class SignatureMismatchError(SuperweylError, ValueError):
    """Operands built over different signatures were combined."""


class UndefinedDegreeError(SuperweylError, ValueError):
    """The zero element carries no degree."""


class InhomogeneityError(SuperweylError, ValueError):
    """A degree was requested for an element mixing several degrees."""

    def __init__(self, degrees):
        self.degrees = sorted(degrees)
        super().__init__(f"element is not homogeneous; degrees present: {self.degrees}")


class NilpotencyError(SuperweylError, ValueError):
    """A Clifford-direction generator was raised to a power that vanishes."""


class InvalidGammaError(SuperweylError, ValueError):
    """An operation requiring a valid integer matrix received an invalid one."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"matrix failed validation: {report.summary()}")


class ResourceCapError(SuperweylError, RuntimeError):
    """A configurable resource cap (box size, word length) was exceeded."""
