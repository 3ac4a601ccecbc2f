"""Exception types shared across the package."""


class CksKitError(Exception):
    """Base class for all package errors."""


class EmptyGraph(CksKitError):
    pass


class DisconnectedGraph(CksKitError):
    pass


class BondDeletion(CksKitError):
    """Deleting this edge set would disconnect the graph."""


class NotACotree(CksKitError):
    pass


class NotASpanningTree(CksKitError):
    pass


class FaceNotInComplex(CksKitError):
    pass


class MismatchedGraph(CksKitError):
    """A derived structure was paired with a graph it was not built from."""


class SupportContainsBond(CksKitError):
    pass


class ChoiceOutsideIn(CksKitError):
    pass


class EdgeIsBondOrLoop(CksKitError):
    pass


class NotAComplex(CksKitError):
    """Differentials do not square to zero."""


class ParseError(CksKitError):
    pass


class ResourceGuard(CksKitError):
    """Computation would exceed the configured size ceiling."""
