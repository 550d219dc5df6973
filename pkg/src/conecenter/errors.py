"""Exception hierarchy shared across the package.

``InputError`` subclasses flag invalid user data or parameters (the CLI
maps them to exit status 2); ``SolverError`` subclasses flag numerical
failures in an otherwise valid problem (exit status 1).
"""


class InputError(ValueError):
    """Invalid input data or parameters."""


class DegenerateInput(InputError):
    """Polygon is degenerate: too few vertices, repeated points, or near-zero area."""


class SelfIntersecting(InputError):
    """Polygon boundary crosses or touches itself."""


class NotATriangle(InputError):
    """Operation requires a polygon with exactly three vertices."""


class NotConvex(InputError):
    """Operation requires a convex polygon."""


class NonpositiveHeight(InputError):
    """Cone height must be strictly positive."""


class NonpositiveArgument(InputError):
    """Argument must be strictly positive."""


class SolverError(RuntimeError):
    """A numerical routine failed to produce a trustworthy result."""


class BracketingFailed(SolverError):
    """No bracket around an interior minimum of the height objective was found.

    ``trace`` holds the sampled ``(height, objective)`` pairs, sorted by
    height, for diagnosis.
    """

    def __init__(self, message: str, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)
