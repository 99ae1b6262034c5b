"""Exception hierarchy shared by every module of the package."""


class ZbhypError(Exception):
    """Base class for all package errors."""


class DomainError(ZbhypError, ValueError):
    """Argument outside the region where the quantity is defined."""


class DegenerateParameterError(DomainError):
    """a = 0 or b = 0 where a threshold or auxiliary root is undefined."""


class DivergenceError(ZbhypError, ArithmeticError):
    """A constant or value is infinite (e.g. zeta(1))."""


class NonConvergenceError(ZbhypError, ArithmeticError):
    """A series hit its term cap before reaching working precision."""


class PreconditionError(ZbhypError, ValueError):
    """A verification routine was called outside the hypothesis of its claim."""


class StepUnderflowError(ZbhypError, ArithmeticError):
    """Finite-difference step too small to be meaningful in double precision."""


class ConfigError(ZbhypError, ValueError):
    """Malformed verification configuration."""
