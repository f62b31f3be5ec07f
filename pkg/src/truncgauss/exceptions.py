"""Exception types raised by the quadrature pipeline."""


class InvalidPrecisionError(ValueError):
    """Requested working precision is below the supported floor."""


class DomainError(ValueError):
    """An argument lies outside the domain of a function."""


class ConvergenceError(ArithmeticError):
    """A series or iteration did not converge within its budget."""

    def __init__(self, message, terms_used=None, index=None):
        super().__init__(message)
        self.terms_used = terms_used
        self.index = index


class BreakdownError(ArithmeticError):
    """The modified Chebyshev recursion lost positive definiteness.

    ``k`` is the first recursion step whose squared norm came out
    nonpositive. Raising the working precision usually cures it.
    """

    def __init__(self, k, value=None, z=None):
        self.k = k
        self.value = value
        self.z = z
        where = "" if z is None else f" at z={z}"
        super().__init__(
            f"modified Chebyshev breakdown at k={k}{where}: sigma[k,k]={value} <= 0; "
            "increase digits"
        )

    def with_z(self, z):
        return BreakdownError(self.k, self.value, z)


class AccuracyError(ArithmeticError):
    """Computed rule is not trustworthy at the current precision."""
