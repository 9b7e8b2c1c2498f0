"""Exception types shared across the package."""


class AngleDevError(Exception):
    """Base class for all package-specific errors."""


class CoincidentPoints(AngleDevError, ValueError):
    """An angle or direction was requested at coincident points."""


class DegenerateInput(AngleDevError, ValueError):
    """Input violates a structural invariant (too few points, duplicates, non-finite)."""


class SubsetTooSmall(AngleDevError, ValueError):
    """A subset has fewer than three points, so it has no angles."""


class InvalidK(AngleDevError, ValueError):
    """Subset size k outside 3 <= k <= n."""


class BudgetExceeded(AngleDevError):
    """C(n, k) exceeds the configured enumeration budget."""


class TooFewPoints(AngleDevError, ValueError):
    """Not enough points for the requested witness extraction."""


class DuplicateXCoordinate(AngleDevError, ValueError):
    """Two points share an x-coordinate where distinct x is required."""


class InvalidScale(AngleDevError, ValueError):
    """A scale parameter is outside its valid range."""


class InvalidCount(AngleDevError, ValueError):
    """A point count is outside its valid range."""


class InvalidParams(AngleDevError, ValueError):
    """Search parameters violate their constraints."""


class ParseError(AngleDevError, ValueError):
    """A points or certificate file could not be parsed."""


class ShapeError(AngleDevError, ValueError):
    """A certificate document is structurally malformed."""
