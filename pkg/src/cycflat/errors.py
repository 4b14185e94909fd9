"""Exception hierarchy shared by every cycflat module."""

from __future__ import annotations


class CycflatError(Exception):
    """Base class for all errors raised on invalid input."""


class NotAPartialOrder(CycflatError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"order relation has a cycle through {list(self.cycle)}")


class NotALattice(CycflatError):
    """Raised when a pair has no unique least upper or greatest lower bound."""

    def __init__(self, pair, kind, bounds):
        self.pair = tuple(pair)
        self.kind = kind
        self.bounds = tuple(bounds)
        what = "minimal upper" if kind == "join" else "maximal lower"
        super().__init__(
            f"pair {self.pair[0]!r}, {self.pair[1]!r} has no {kind}: "
            f"{what} bounds are {list(self.bounds)}"
        )


class SizeLimitExceeded(CycflatError):
    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class RankViolation(CycflatError):
    """A cyclic-flat family or rank assignment breaks one of its axioms."""

    def __init__(self, condition, elements, message):
        self.condition = condition
        self.elements = tuple(elements)
        super().__init__(message)


class InvalidFamily(CycflatError):
    pass


class NotEnoughCovers(CycflatError):
    pass


class ParseError(CycflatError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
