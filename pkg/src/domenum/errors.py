"""Exception types raised across the package."""


class DomEnumError(Exception):
    """Base class for every error raised by :mod:`domenum`."""


class UnknownVertex(DomEnumError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class IsolatedVertex(DomEnumError):
    """Raised when a total dominating set cannot exist."""

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} is isolated; no total dominating set exists")
        self.vertex = vertex


class NotChordalBipartite(DomEnumError):
    pass


class NotChainError(DomEnumError):
    """A neighborhood that should form a bipartite chain does not."""


class BadIndex(DomEnumError, IndexError):
    pass


class NotMember(DomEnumError):
    pass


class NotMinimalTransversal(DomEnumError):
    pass


class EmptyDelta(DomEnumError):
    pass


class TooLarge(DomEnumError):
    """An exhaustive oracle was asked to run above its configured cap."""


class SupportTooLarge(TooLarge):
    pass


class AdjacentPair(DomEnumError):
    pass


class NotSeparator(DomEnumError):
    pass


class Disconnected(DomEnumError):
    pass


class Unsupported(DomEnumError):
    pass


class InvalidPartition(DomEnumError):
    pass


class EmptyEdge(DomEnumError):
    pass


class NotSperner(DomEnumError):
    pass


class MissingVStar(DomEnumError):
    pass


class GenerationFailed(DomEnumError):
    pass


class ParseError(DomEnumError, ValueError):
    pass
