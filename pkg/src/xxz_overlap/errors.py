"""Exception hierarchy shared across the package."""


class XXZError(Exception):
    """Base class for all package-specific errors."""


class DomainError(XXZError):
    """Argument outside the convergence/validity domain of a special function."""


class PoleProximityError(XXZError):
    """Evaluation requested too close to a pole (|sin| below the guard threshold)."""


class BranchError(XXZError):
    """Requested point crosses a log-branch cut of p, theta or g."""


class GaplessRegimeError(XXZError):
    """Boundary fields put the chain in the gapless region; formulas refuse such inputs."""


class DegenerateBoundaryError(XXZError):
    """|h| = sinh(zeta) exactly: delta is ambiguous and |p| = 1 breaks q-product domains."""


class CriticalFieldError(XXZError):
    """A boundary field sits exactly on h_cr1 or h_cr2 (regime boundary)."""


class AmbiguousSectorError(XXZError):
    """Ground-state sector is not uniquely determined (degenerate configuration)."""


class NoConvergenceError(XXZError):
    """Root solver failed to converge; carries the iteration trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace if trace is not None else []


class WrongRootCountError(XXZError):
    """A root left (0, pi/2) or two roots collided during the solve."""


class RealityViolationError(XXZError):
    """A quantity that must be real came out with a large imaginary part."""


class SingularPrefactorError(XXZError):
    """A pairwise sine prefactor vanished (coincident arguments)."""


class SingularMatrixError(XXZError):
    """Determinant evaluation hit an exactly singular matrix."""


class NegativeNormError(XXZError):
    """Norm determinant came out non-positive: root set or branch error upstream."""


class SectorMismatchError(XXZError):
    """Root sets live in different magnetization sectors."""


class UnclassifiedConfigurationError(XXZError):
    """Field pattern matches no case of the final overlap classification."""


class DegenerateGroundStateError(XXZError):
    """Two lowest eigenvalues coincide within tolerance; overlap ill-defined."""


class SizeCapError(XXZError):
    """Chain length exceeds the exact-diagonalization cap."""
