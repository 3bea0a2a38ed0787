"""Exception hierarchy shared by the whole package."""


class HarmodiskError(Exception):
    """Base class for all harmodisk errors."""


class BoundaryDataError(HarmodiskError):
    """Boundary data is unusable: non-finite values, bad samples, broken periodicity."""


class BranchCutError(HarmodiskError):
    """Point lies on the excluded half-line {x <= 0, y = 0} (or at the origin),
    where the polar angle has no continuous definition."""


class DomainError(HarmodiskError):
    """Point or parameter outside the admissible region (disk, radius order,
    Taylor convergence region)."""


class AliasingError(HarmodiskError):
    """Quadrature node count too small for the requested number of harmonics."""


class EvalOverflowError(HarmodiskError):
    """Floating-point overflow in falling factorials at extreme (degree, order)."""


class ExpansionUnsupportedError(HarmodiskError):
    """Monomial expansion requested beyond the supported degree."""
