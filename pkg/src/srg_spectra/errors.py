"""Exception hierarchy shared by every module."""


class SrgError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(SrgError, ValueError):
    pass


class NonIntegralMultiplicity(SrgError, ValueError):
    """Eigenvalue multiplicities are not non-negative integers."""


class ComplementDegenerate(SrgError, ValueError):
    pass


class ThresholdUndefined(SrgError, ValueError):
    """An iterated logarithm in a threshold is not positive."""


class NotSrg(SrgError):
    pass


class NotRegular(NotSrg):
    pass


class Disconnected(NotSrg):
    pass


class SizeLimit(SrgError, ValueError):
    pass


class TooSmall(SrgError, ValueError):
    pass


class Complete(SrgError, ValueError):
    """The graph is complete, so no vertex set disconnects it."""


class ConstructionError(SrgError, ValueError):
    """A family constructor was called outside its supported domain."""


class NonPrimeOrder(ConstructionError):
    pass


class TooManySquares(ConstructionError):
    pass


class UnsupportedOrder(ConstructionError):
    pass


class BadModulus(ConstructionError):
    pass


class DegenerateGraph(ConstructionError):
    """The construction produced a complete graph."""


class DegenerateBlockGraph(DegenerateGraph):
    pass


class InvalidDesign(ConstructionError):
    pass


class AmbiguousClustering(SrgError, ValueError):
    pass


class BadIndex(SrgError, ValueError):
    pass


class NotDrg(SrgError):
    pass


class Inapplicable(SrgError):
    """The hypotheses of a check are not met by the input."""


class Bipartite(Inapplicable):
    pass


class DegenerateGraphWarning(UserWarning):
    """The construction produced an imprimitive (complete multipartite) graph."""
