"""Exception hierarchy shared by every module of the package."""


class QReorderError(Exception):
    """Base class for all errors raised by :mod:`qreorder`."""


class ContractViolation(QReorderError, ValueError):
    """An argument broke a documented precondition (shape, range, hermiticity)."""


class NumericalFailure(QReorderError, ArithmeticError):
    """An iterative factorization did not converge within its sweep cap."""

    def __init__(self, message: str, iterations: int):
        super().__init__(f"{message} (after {iterations} sweeps)")
        self.iterations = iterations


class NotCompletelyPositive(QReorderError):
    """The dynamical matrix of a map has an eigenvalue below the CP tolerance."""

    def __init__(self, eigenvalue: float, tol: float):
        super().__init__(
            f"dynamical matrix has eigenvalue {eigenvalue!r} < -{tol!r}; "
            "the map is not completely positive"
        )
        self.eigenvalue = eigenvalue
        self.tol = tol


class NotTracePreserving(QReorderError):
    """The trace of a dynamical matrix differs from the system dimension."""

    def __init__(self, trace: complex, expected: int, tol: float):
        super().__init__(
            f"dynamical matrix has trace {trace!r}, expected {expected} within {tol!r}"
        )
        self.trace = trace
        self.expected = expected
