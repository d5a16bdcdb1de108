"""Exception types shared by the whole package.

Mathematical refusals (a point on an exceptional hyperplane, a pole of a
norm, ...) derive from :class:`MathematicalRefusal` so callers such as the
CLI can tell them apart from malformed input.
"""


class Gr1nError(Exception):
    """Base class for every error raised by this package."""


class MathematicalRefusal(Gr1nError):
    """The inputs are well formed but the requested computation is undefined."""

    code = "refusal"


class DivisionByZero(Gr1nError, ZeroDivisionError):
    """Inversion of zero in an exact field."""


class PoleAtPoint(MathematicalRefusal):
    """A factor with negative exponent vanishes at the evaluation point."""

    code = "pole"


class OutOfDomain(Gr1nError, ValueError):
    """An operation was applied outside of its domain (e.g. psi shift with mu_n = 0)."""


class SizeMismatch(Gr1nError, ValueError):
    """Two partitions of different sizes were compared in dominance order."""


class ConsistencyFailure(Gr1nError):
    """An internal cross-check between two independent computations failed."""


class SpectrumNotSimple(MathematicalRefusal):
    """Some t-eigenspace of M(lambda) has dimension greater than one."""

    code = "spectrum-not-simple"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OutOfScope(MathematicalRefusal):
    """The parameters fall in a regime the library does not handle (c0 = 0)."""

    code = "out-of-scope"


class KappaNotOne(MathematicalRefusal):
    """A lattice-level operation was requested at a point with kappa != 1."""

    code = "kappa-not-one"


class PreconditionFailed(MathematicalRefusal):
    """A documented precondition (e.g. the Clifford symmetry of d) does not hold."""

    code = "precondition-failed"


class TruncationExceeded(Gr1nError):
    """An oracle computation would leave the truncated polynomial degree range."""
