"""Exception types raised across the package."""


class SchurTreesError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SchurTreesError, ValueError):
    pass


class NotPrefixClosed(SchurTreesError, ValueError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"word {word or '0'!r} has a missing prefix")


class NotRightChildless(SchurTreesError, ValueError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"node {word or '0'!r} is absent or has a right child")


class ChainTooShort(SchurTreesError, ValueError):
    def __init__(self, length, requested):
        self.length = length
        self.requested = requested
        super().__init__(f"removal chain has {length} nodes, {requested} requested")


class NotInDetachedTree(SchurTreesError, ValueError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"word {word or '0'!r} is not a node of the detached tree")


class InvalidLabelling(SchurTreesError, ValueError):
    pass


class MalformedPath(SchurTreesError, ValueError):
    def __init__(self, step, reason=""):
        self.step = step
        super().__init__(f"step {step} is not an edge" + (f": {reason}" if reason else ""))


class NoPreimage(SchurTreesError):
    pass


class AmbiguousPreimage(SchurTreesError):
    pass


class LimitExceeded(SchurTreesError, ValueError):
    pass


class BinaryViolation(SchurTreesError, ValueError):
    pass


class ShapeMismatch(SchurTreesError, ValueError):
    pass


class CellFailure(SchurTreesError):
    pass
