"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Raised when a request would enumerate more subsets than the guard allows."""


class PartitionError(ValueError):
    """Raised when a list of index sets is not a partition of {1, ..., n}."""


class SingularBlockError(ArithmeticError):
    """A principal block (or Schur complement) failed the scaled pivot test.

    Attributes
    ----------
    indices : IndexSet or None
        The index set naming the offending block, when known.
    what : str
        Short description of which block failed ("principal block",
        "Schur complement of the principal block", ...).
    """

    def __init__(self, indices=None, what="principal block", detail=""):
        self.indices = indices
        self.what = what
        label = "empty" if indices is not None and len(indices) == 0 else str(indices)
        msg = f"{what} [{label}] is numerically singular"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class ZeroDiagonalError(ArithmeticError):
    """A diagonal entry required for the Jacobi splitting is (near) zero."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"diagonal entry {index} is zero within tolerance; "
                         "Jacobi splitting undefined")


class NotOrthogonalError(ArithmeticError):
    """The supplied matrix is not orthogonal within tolerance."""


class RootConvergenceError(RuntimeError):
    """The simultaneous root iteration did not converge within its cap.

    The best iterates found so far are attached as ``best``.
    """

    def __init__(self, best):
        self.best = best
        super().__init__("root finding did not converge within the iteration cap")


class FeasibilityUndecided(RuntimeError):
    """The feasibility solver hit its iteration cap without a verdict."""


class MatrixFormatError(ValueError):
    """A matrix or vector file failed to parse.

    Attributes ``line`` and ``column`` give the 1-based position of the
    offending token (column 0 when the whole line is at fault).
    """

    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
