"""Exception hierarchy for the package."""


class BoysError(Exception):
    """Base class for all errors raised by fastboys."""


class DomainError(BoysError, ValueError):
    """An argument lies outside the domain an evaluator is defined for."""


class TableError(BoysError):
    """An exponential-sum or quadrature table is missing or fails validation."""


class ConvergenceError(BoysError, ArithmeticError):
    """An iterative construction (root finding, panel refinement) did not converge."""


class OracleError(ConvergenceError):
    """The reference integrator failed its refinement check."""
