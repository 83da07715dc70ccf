"""Exception types shared across the package."""


class FreqintError(ValueError):
    """Base class for all validation and numerical-domain errors."""


class StepSizeError(FreqintError):
    """Step size violates the admissible bound of an integrator kind.

    Carries the offending bound so callers can report it.
    """

    def __init__(self, kind, h, bound):
        self.kind = kind
        self.h = h
        self.bound = bound
        super().__init__(
            f"step size h={h!r} s is not admissible for kind {kind}: "
            f"required 0 < h < {bound!r} s"
        )


class SingularDenominatorError(FreqintError):
    """Amplification denominator vanished at the requested point."""


class SingularStepMatrixError(FreqintError):
    """Left-hand step matrix is singular for this system and coefficient set."""


class GridError(FreqintError):
    """Requested evaluation grid is empty, inverted, or otherwise unusable."""
