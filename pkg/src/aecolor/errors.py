"""Exception hierarchy for graph, coloring, and engine failures."""


class AecolorError(Exception):
    """Base class for every package-specific error."""


class PreconditionViolated(AecolorError):
    """An operation was invoked outside its documented preconditions."""


class SelfLoop(PreconditionViolated):
    pass


class DuplicateEdge(PreconditionViolated):
    pass


class DegreeViolation(PreconditionViolated):
    """Adding the edge would push an endpoint past degree 4."""


class Disconnected(PreconditionViolated):
    pass


class UnknownEdge(AecolorError):
    pass


class AlreadyColored(AecolorError):
    pass


class NotACandidate(AecolorError):
    """The color is already present on an adjacent edge."""


class InvalidPair(AecolorError):
    """A bichromatic query needs two distinct palette colors."""


class OnCycle(AecolorError):
    """A path walk ran into a bichromatic cycle; the coloring is not acyclic."""


class NotConfigurationA(AecolorError):
    pass


class CycleCreated(AecolorError):
    """A color exchange closed a bichromatic cycle through a checked vertex."""

    def __init__(self, vertex, pair):
        super().__init__(
            f"exchange creates a ({pair[0]},{pair[1]}) cycle through vertex {vertex}"
        )
        self.vertex = vertex
        self.pair = pair


class InternalError(AecolorError):
    """A step of the extension engine violated a contract it relies on.

    This always indicates an implementation bug, never bad input; the
    ``claim`` tag names the step whose guarantee failed.
    """

    def __init__(self, claim, message=""):
        super().__init__(f"{claim}: {message}" if message else claim)
        self.claim = claim


class TooLarge(AecolorError):
    pass


class InfeasibleSpec(AecolorError):
    pass


class TraceError(AecolorError):
    """A move trace does not apply cleanly to the given graph."""
