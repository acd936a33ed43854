"""Exception types shared across the package."""


class TermCapError(RuntimeError):
    """A series needed more terms than the configured cap allows."""

    def __init__(self, max_terms, context=""):
        self.max_terms = max_terms
        suffix = f" while evaluating {context}" if context else ""
        super().__init__(f"term cap {max_terms} exceeded{suffix}")


class PrefactorOverflowError(OverflowError):
    """The Gaussian prefactor of the rescaled kernel exceeds double range.

    Use F_kernel instead, or work with logarithms of the magnitudes.
    """

    def __init__(self, exponent):
        self.exponent = exponent
        super().__init__(
            f"prefactor exponent {exponent:.6g} exceeds double-precision range; "
            "evaluate F_kernel instead or use log-scaled output"
        )


class BracketingError(ArithmeticError):
    """Root bracketing or bisection failed; carries the last bracket."""

    def __init__(self, message, bracket):
        self.bracket = bracket
        super().__init__(f"{message} (last bracket: [{bracket[0]:.6g}, {bracket[1]:.6g}])")
