"""Exception and warning types shared across the package."""


class HodoflowError(Exception):
    """Base class for all library errors."""


class PoleError(HodoflowError, ValueError):
    """A special function was evaluated at one of its poles."""


class DomainError(HodoflowError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ParameterError(HodoflowError, ValueError):
    """A parameter combination is not admitted (e.g. Kummer b a non-positive integer)."""


class RegionError(HodoflowError, ValueError):
    """A momentum radius lies on the wrong side of the sonic circle rho_T for the requested branch."""


class NodeError(HodoflowError, ArithmeticError):
    """Evaluation hit a nodal line (zero of the angular factor, of M, or of u)."""


class DegenerateMapError(HodoflowError, ValueError):
    """The inverse Legendre transform degenerates (lambda = 1: the map Jacobian vanishes identically)."""


class FoldError(HodoflowError, RuntimeError):
    """The inverse-map Newton path crossed a fold (sign change of the inverse Jacobian)."""


class NoConvergenceError(HodoflowError, RuntimeError):
    """An iterative method (series, quadrature, Newton) failed to converge."""


class SeriesOverflowError(HodoflowError, OverflowError):
    """A series partial sum left the representable floating-point range."""


class DivergenceError(HodoflowError, ValueError):
    """A requested integral (normalization, moment) does not converge."""


class SaturationWarning(UserWarning):
    """An evaluation was clamped at a documented floor (e.g. elliptic characteristics near rho = 0)."""


class UnivalenceWarning(UserWarning):
    """The inverse Jacobian changes sign over the requested grid: the image is not a single leaf."""
