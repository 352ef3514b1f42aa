# edgespace/exceptions.py

class EdgeSpaceError(Exception):
    """Base exception for edgespace errors"""
    pass


class GraphError(EdgeSpaceError):
    """Raised when a graph or edge set violates its structural invariants"""
    pass


class LinearAlgebraError(EdgeSpaceError):
    """Raised when a basis is not independent or leaves its ambient space"""
    pass


class GraphFormatError(EdgeSpaceError):
    """Raised when a graph file cannot be parsed"""

    def __init__(self, line_number, message):
        """
        Initialize with the offending line

        Args:
            line_number (int): 1-based line number in the graph file
            message (str): What is wrong with the line
        """
        self.line_number = line_number
        self.message = message
        super().__init__(f"line {line_number}: {message}")


class DisconnectedGraphError(EdgeSpaceError):
    """Raised when an operation needs a connected graph"""

    def __init__(self, vertex):
        """
        Initialize with a vertex outside the first component

        Args:
            vertex (int): A vertex not reachable from the least vertex
        """
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex} is not reachable")


class BoundExceededError(EdgeSpaceError):
    """Raised when a brute-force enumeration would exceed its configured bound"""

    def __init__(self, size, bound, what="vertices"):
        """
        Initialize with the size that was refused

        Args:
            size (int): Actual size of the input
            bound (int): Configured bound
            what (str): What was counted
        """
        self.size = size
        self.bound = bound
        super().__init__(f"bound exceeded: {size} {what} > {bound}")


class NotInSpaceError(EdgeSpaceError):
    """Raised when an edge set is not an element of the requested space"""

    def __init__(self, space, witness=None):
        self.space = space
        self.witness = witness
        detail = f" (witness {witness})" if witness is not None else ""
        super().__init__(f"edge set is not in {space}{detail}")


class OddDegreeError(EdgeSpaceError):
    """Raised when an edge set has odd degree at a vertex that must be even"""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has odd degree in the edge set")


class NotACutError(EdgeSpaceError):
    """Raised when an edge set is not a cut of the graph"""
    pass


class RayError(EdgeSpaceError):
    """Raised when a generator cannot supply the requested rays"""
    pass


class UnknownGeneratorError(EdgeSpaceError):
    """Raised when a generator name is not in the catalog"""

    def __init__(self, name, catalog):
        self.name = name
        self.catalog = list(catalog)
        super().__init__(f"unknown generator '{name}'; known: {', '.join(self.catalog)}")


class UnknownExperimentError(EdgeSpaceError):
    """Raised when an experiment name is not known"""

    def __init__(self, name, catalog):
        self.name = name
        self.catalog = list(catalog)
        super().__init__(f"unknown experiment '{name}'; known: {', '.join(self.catalog)}")
