"""Exception types shared across the engine.

Division by zero is reported with the builtin ZeroDivisionError.
"""


class ClusterError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "cluster_error"


class NotDivisibleError(ClusterError):
    """Exact division has no solution in the ring.

    During a seed mutation this would refute the Laurent phenomenon, so
    the error carries enough context (seed, mutation direction, path) to
    reproduce the failure.  It is never swallowed by the library.
    """

    code = "not_divisible"

    def __init__(self, message, seed=None, direction=None, path=None):
        super().__init__(message)
        self.seed = seed
        self.direction = direction
        self.path = path


class IncompatibleError(ClusterError):
    """The pair (Lambda, B) fails the compatibility condition.

    ``position`` is the offending 0-based (i, j) entry of the product
    B^T * Lambda, when known.
    """

    code = "incompatible"

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotSymmetrizableError(ClusterError):
    """No positive integer skew-symmetrizer exists for the matrix."""

    code = "not_symmetrizable"


class FrameMismatchError(ClusterError):
    """Two torus elements live over different skew matrices.

    Mixing frames would corrupt q-exponents invisibly, so it is always
    an error, never a coercion.
    """

    code = "frame_mismatch"
