class ArrangementError (Exception):
    """
    Base class for every error raised by the pseudolines package.
    """
    pass

class InvalidDiagram (ArrangementError):
    """
    Raise this when a wiring diagram is malformed or does not describe a simple arrangement.
    """
    pass

class EnumerationRangeError (ArrangementError):
    """
    Raise this when an exhaustive operation is asked for a wire count outside its supported range.
    """
    pass

class ParallelLinesError (ArrangementError):
    """
    Two lines have no intersection point. This is a contract violation, distinct from concurrency.
    """
    pass

class NonSimpleArrangement (ArrangementError):
    """
    Raise this when an operation needs a simple arrangement (no parallels, no three concurrent lines).
    """
    pass

class ConstructionError (ArrangementError):
    """
    A star/pull/line construction could not be carried out on the given input.
    """
    pass

class InvalidSequence (ArrangementError):
    """
    Raise this when a degree sequence cannot be parsed or breaks the DegreeSequence invariants.
    The position of the offending entry (0 based) is kept in 'position' when known.
    """
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position

class GraphTooLarge (ArrangementError):
    """
    The brute-force graph routines refuse inputs above the configured size cap.
    """
    pass

class InvalidEmbedding (ArrangementError):
    """
    The rotation system of a graph is not a consistent planar embedding.
    """
    pass

class TwoSwitchError (ArrangementError):
    """
    A 2-switch was requested on edges that do not satisfy its preconditions.
    """
    pass

class PathCapExceeded (ArrangementError):
    """
    Shortest path enumeration produced more paths than the configured cap allows.
    """
    pass

class UnknownClaim (ArrangementError):
    """
    The oracle was asked to check a claim id that is not registered.
    """
    pass

class InvalidDocument (ArrangementError):
    """
    Raise this when an input file is neither a wiring diagram nor a line arrangement document.
    """
    pass
