"""Intersection theory and line-bundle cohomology on the Hirzebruch surface F_n.

Divisors are written ``x*F + y*C`` where ``F`` is the fiber class and ``C`` the
negative section, so that ``F.F = 0``, ``F.C = 1`` and ``C.C = -n``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SurfaceParams:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"Hirzebruch surface degree must be a non-negative integer, got {self.n!r}")


def _as_params(n) -> SurfaceParams:
    return n if isinstance(n, SurfaceParams) else SurfaceParams(n)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """The divisor class ``x*F + y*C``."""

    x: int = 0
    y: int = 0

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.x, k * self.y)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"f": self.x, "c": self.y}

    @classmethod
    def from_json(cls, data: dict) -> DivisorClass:
        return cls(int(data["f"]), int(data["c"]))

    def __str__(self) -> str:
        return f"{self.x}F{self.y:+d}C"


F = DivisorClass(1, 0)
C = DivisorClass(0, 1)
ZERO = DivisorClass(0, 0)


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    @property
    def euler_characteristic(self) -> int:
        return self.h0 - self.h1 + self.h2

    def reversed(self) -> CohomologyDims:
        return CohomologyDims(self.h2, self.h1, self.h0)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def intersect(n, D: DivisorClass, D2: DivisorClass) -> int:
    n = _as_params(n).n
    return D.x * D2.y + D2.x * D.y - n * D.y * D2.y


def canonical_class(n) -> DivisorClass:
    n = _as_params(n).n
    return DivisorClass(-(n + 2), -2)


def _p1_cohomology(d: int) -> tuple[int, int]:
    return max(d + 1, 0), max(-d - 1, 0)


def line_bundle_cohomology(n, D: DivisorClass) -> CohomologyDims:
    """Dimensions of ``H^i(F_n, O(D))``.

    For ``y >= 0`` the bundle pushes forward to ``sum_j O(x - n*j)`` on the base
    line, ``j = 0..y``. ``y = -1`` has no cohomology at all, and ``y <= -2`` is
    reduced to the first case through Serre duality.
    """
    p = _as_params(n)
    if D.y >= 0:
        h0 = h1 = 0
        for j in range(D.y + 1):
            a, b = _p1_cohomology(D.x - p.n * j)
            h0 += a
            h1 += b
        return CohomologyDims(h0, h1, 0)
    if D.y == -1:
        return CohomologyDims(0, 0, 0)
    return line_bundle_cohomology(p, canonical_class(p) - D).reversed()


def euler_char_line_bundle(n, D: DivisorClass) -> int:
    """Riemann-Roch: ``chi(O(D)) = 1 + D.(D - K)/2``."""
    num = intersect(n, D, D - canonical_class(n))
    # D.(D-K) is always even by adjunction
    assert num % 2 == 0
    return 1 + num // 2
