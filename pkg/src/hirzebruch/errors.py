"""Exception types raised by the domain layer.

Every domain failure derives from :class:`DomainError` so callers (the CLI in
particular) can separate mathematical rejections from malformed input.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Base class for mathematically meaningful failures."""

    code = "DomainError"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class ParityViolation(DomainError):
    code = "ParityViolation"


class NonIntegral(DomainError):
    code = "NonIntegral"


class NotExceptional(DomainError):
    code = "NotExceptional"


class ZeroRank(DomainError):
    code = "ZeroRank"


class NonpositiveRank(DomainError):
    code = "NonpositiveRank"


class NotExceptionalCollection(DomainError):
    code = "NotExceptionalCollection"


class NotFound(DomainError):
    """Bounded search exhausted without a certificate. Inconclusive."""

    code = "NotFound"

    def __init__(self, max_depth: int, visited: int = 0):
        self.max_depth = max_depth
        self.visited = visited
        super().__init__(
            f"no group element found up to depth {max_depth} "
            f"({visited} collections visited); this is not a refutation"
        )


class Mismatch(DomainError):
    """Two independent computations disagree. Indicates a bug."""

    code = "Mismatch"


class UnsupportedSurface(DomainError):
    code = "UnsupportedSurface"
