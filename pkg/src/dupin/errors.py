"""Exception types shared across the package."""


class DupinError(Exception):
    """Base class for errors raised by this package."""


class ArgumentError(DupinError, ValueError):
    """A caller-supplied argument is malformed or out of range."""


class NonFiniteError(DupinError, FloatingPointError):
    """A NaN or infinity appeared where finite data was required."""


class RankDeficientError(DupinError):
    """A vector family lost rank during orthonormalization.

    ``index`` is the position of the offending vector in the input family.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"vector {index} is dependent on its predecessors")


class RadonHurwitzError(DupinError, ValueError):
    """Requested Clifford system size violates the Radon-Hurwitz bound."""


class AdmissibilityError(DupinError, ValueError):
    """Parameters fail an admissibility requirement (dimension counts etc.)."""


class ConvergenceError(DupinError):
    """An iterative solve failed to reach its tolerance."""


class AsymmetryError(DupinError):
    """A finite-difference shape operator came out too asymmetric to trust."""


class ChartDomainError(DupinError):
    """A point left the valid domain of the active coordinate chart."""


class DegenerateCrossRatioError(DupinError, ZeroDivisionError):
    """Cross ratio requested for a quadruple with coincident entries."""


class GCountError(DupinError):
    """A spectrum's distinct-eigenvalue count is outside the admitted set."""

    def __init__(self, g, message=None):
        self.g = g
        super().__init__(message or f"distinct curvature count g={g} not in (1, 2, 3, 4, 6)")


class UnreliableSearchError(DupinError):
    """Too few multistart branches converged for counts to be trusted."""


class FocalRadiusWarning(UserWarning):
    """Tube radius is within tolerance of a focal radius of the base."""


class ClusterAmbiguityWarning(UserWarning):
    """Eigenvalue gaps sit near the clustering tolerance boundary."""
