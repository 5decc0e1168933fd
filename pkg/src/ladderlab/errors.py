"""Exception types raised across ladderlab."""

from __future__ import annotations


class LadderLabError(Exception):
    pass


class SetLangError(LadderLabError, ValueError):
    pass


class ParseError(SetLangError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f"{message} at byte {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


# errors in set-expression text, whatever the cause
ExprError = SetLangError


class ConstantTermError(SetLangError):
    """A polynomial was given a nonzero constant term."""


class ResourceError(LadderLabError):
    pass


class DimensionMismatch(LadderLabError, ValueError):
    pass


class MalformedCertificate(LadderLabError, ValueError):
    pass


class GapConditionUnverifiable(LadderLabError):
    pass


class WindowTooSmall(LadderLabError):
    pass


class NeighborBoundViolated(LadderLabError):
    pass


class WindowExhausted(LadderLabError):
    def __init__(self, message: str, partial):
        self.partial = partial
        super().__init__(message)


class LoopDetected(LadderLabError, ValueError):
    pass


class CycleDetected(LadderLabError, ValueError):
    pass


class Interrupted(LadderLabError):
    """Search stopped by node budget or time limit.

    ``lower_bound`` is the best proven lower bound on the threshold
    (one more than the longest avoiding coloring seen), or None.
    """

    def __init__(self, message: str, lower_bound=None, nodes: int = 0):
        self.lower_bound = lower_bound
        self.nodes = nodes
        super().__init__(message)


class ConfigError(LadderLabError):
    def __init__(self, message: str, line=None, key=None):
        self.line = line
        self.key = key
        super().__init__(message if line is None else f"line {line}: {message}")
