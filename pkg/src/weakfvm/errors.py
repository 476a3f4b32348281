"""Exception types shared across the solver library."""


class WeakFVMError(Exception):
    """Base class for all library errors."""


class InvalidInputError(WeakFVMError, ValueError):
    """Malformed or non-finite input data."""


class PreconditionError(WeakFVMError, ValueError):
    """A documented precondition of an operation was violated."""


class UnsupportedConfigurationError(WeakFVMError):
    """Requested configuration is outside what the library supports
    (e.g. a Jordan chain shorter than the matrix dimension)."""


class ChainConstructionError(WeakFVMError):
    """The generalized-eigenvector system admits no solution within tolerance."""


class VacuumStateError(WeakFVMError):
    """Nonpositive density where a positive one is required."""


class OracleError(WeakFVMError):
    """Exact-solution iteration failed to converge (typically a post-shock query)."""


class MetricError(WeakFVMError):
    """A diagnostic metric could not be evaluated on the given data."""


class NotCompressiveError(WeakFVMError, ValueError):
    """Riemann data does not form a compressive (u_L > u_R) configuration."""


class BlowUpError(WeakFVMError, RuntimeError):
    """The time integration produced a non-finite cell value."""

    def __init__(self, cell_index: int, time: float):
        self.cell_index = cell_index
        self.time = time
        super().__init__(
            f"non-finite state in cell {cell_index} at t = {time:.6g}"
        )
