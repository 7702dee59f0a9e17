"""Exception types raised across zetaforge."""


class ZetaforgeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZetaforgeError, ValueError):
    """An argument lies outside the domain where the function is defined here."""


class ConfigurationError(ZetaforgeError, ValueError):
    """A series or integral description is malformed (e.g. a divergent tail basis)."""


class PrecisionError(ZetaforgeError, ArithmeticError):
    """The requested accuracy cannot be reached at working precision."""


class ConvergenceError(ZetaforgeError, ArithmeticError):
    """A sequence does not behave the way its declared convergence model says."""


class IntegrabilityError(ZetaforgeError, ArithmeticError):
    """Quadrature refinement indicates a non-integrable singularity or no decay."""


class UsageError(ZetaforgeError, ValueError):
    """Bad filter, unknown identifier or other caller mistake."""


class UnknownIdentityError(UsageError, KeyError):
    """No identity with the requested id is registered."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else "unknown identity"


class EvaluationError(ZetaforgeError, RuntimeError):
    """One side of an identity failed; ``route`` names the evaluator."""

    def __init__(self, identity: str, route: str, cause: BaseException):
        self.identity = identity
        self.route = route
        self.cause = cause
        super().__init__(f"{identity} [{route}]: {type(cause).__name__}: {cause}")
