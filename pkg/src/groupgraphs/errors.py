"""Exception hierarchy shared by every module of the package."""


class GroupGraphsError(Exception):
    """Base class for all errors raised by groupgraphs."""


class NotAGroup(GroupGraphsError):
    """A Cayley table violates a group axiom.

    ``axiom`` names the violated axiom and ``witness`` holds the offending
    element indices (a triple for associativity).
    """

    def __init__(self, axiom, witness=(), message=None):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"{axiom} fails at {self.witness}")


class BadShape(GroupGraphsError):
    pass


class ParseError(GroupGraphsError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BadParameter(GroupGraphsError):
    pass


class OrderLimitExceeded(GroupGraphsError):
    def __init__(self, order, limit, what="group"):
        self.order = order
        self.limit = limit
        super().__init__(f"{what} order {order} exceeds limit {limit}")


class NotAPGroup(GroupGraphsError):
    pass


class NotAWitness(GroupGraphsError):
    pass


class DimensionMismatch(GroupGraphsError):
    pass
