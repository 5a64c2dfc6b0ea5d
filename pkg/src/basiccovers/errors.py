"""Exception hierarchy.  Every error the library raises derives from CoverError."""


class CoverError(Exception):
    pass


class InvalidVertexId(CoverError):
    pass


class NotBipartite(CoverError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"graph has an odd cycle {self.cycle}")


class NoEdges(CoverError):
    pass


class InvalidParameters(CoverError):
    pass


class LengthMismatch(CoverError):
    pass


class NotACover(CoverError):
    pass


class NotBasic(CoverError):
    pass


class DecompositionNotFound(CoverError):
    pass


class NotATree(CoverError):
    pass


class NotAnEdge(CoverError):
    pass


class NotUnmixed(CoverError):
    pass


class ClosureViolation(CoverError):
    pass


class DrawingNotEligible(CoverError):
    pass


class NotDescending(CoverError):
    pass


class PositionOutOfRange(CoverError):
    pass


class NotFound(CoverError):
    pass


class Budget(CoverError):
    pass


class Unstable(CoverError):
    pass


class NoFaces(CoverError):
    pass


class ParseError(CoverError):
    pass
