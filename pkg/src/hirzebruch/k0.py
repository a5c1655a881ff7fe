"""The numerical Grothendieck lattice of F_n and its Euler form.

A class is stored through its Chern character ``(rank, c1, ch2)`` with ``ch2``
kept doubled, so everything stays in the integers. The Euler pairing comes from
Hirzebruch-Riemann-Roch:

    chi(v, w) = r r' + r s' + r' s - c.c' - K.(r c' - r' c) / 2

where ``s = ch2``. Negating a class models the shift by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NonIntegral, NotExceptional, ParityViolation, ZeroRank
from .surface import C, ZERO, DivisorClass, _as_params, canonical_class, intersect


@dataclass(frozen=True, order=True)
class K0Class:
    rank: int
    c1: DivisorClass = ZERO
    ch2_x2: int = 0

    def __add__(self, other: K0Class) -> K0Class:
        return K0Class(self.rank + other.rank, self.c1 + other.c1, self.ch2_x2 + other.ch2_x2)

    def __sub__(self, other: K0Class) -> K0Class:
        return K0Class(self.rank - other.rank, self.c1 - other.c1, self.ch2_x2 - other.ch2_x2)

    def __neg__(self) -> K0Class:
        return K0Class(-self.rank, -self.c1, -self.ch2_x2)

    def __mul__(self, k: int) -> K0Class:
        return K0Class(k * self.rank, k * self.c1, k * self.ch2_x2)

    __rmul__ = __mul__

    def coords(self) -> tuple[int, int, int, int]:
        """Coordinates ``(rank, x, y, ch2_x2)`` in the lattice Z^4."""
        return (self.rank, self.c1.x, self.c1.y, self.ch2_x2)

    @classmethod
    def from_coords(cls, coords) -> K0Class:
        r, x, y, s2 = coords
        return cls(r, DivisorClass(x, y), s2)

    def to_json(self) -> dict:
        return {"rank": self.rank, "c1": self.c1.to_json(), "ch2_x2": self.ch2_x2}

    @classmethod
    def from_json(cls, data: dict) -> K0Class:
        return cls(int(data["rank"]), DivisorClass.from_json(data["c1"]), int(data["ch2_x2"]))

    def __str__(self) -> str:
        return f"({self.rank}, {self.c1}, ch2_x2={self.ch2_x2})"


def check_parity(n, v: K0Class) -> None:
    """Raise :class:`ParityViolation` unless ``ch2_x2 = c1.c1 (mod 2)``."""
    if (v.ch2_x2 - intersect(n, v.c1, v.c1)) % 2:
        raise ParityViolation(f"{v} has ch2_x2 of the wrong parity on F_{_as_params(n).n}")


def line_bundle_class(n, D: DivisorClass) -> K0Class:
    return K0Class(1, D, intersect(n, D, D))


def structure_sheaf() -> K0Class:
    return K0Class(1, ZERO, 0)


def euler_form(n, v: K0Class, w: K0Class) -> int:
    check_parity(n, v)
    check_parity(n, w)
    K = canonical_class(n)
    twice = (
        2 * v.rank * w.rank
        + v.rank * w.ch2_x2
        + w.rank * v.ch2_x2
        - 2 * intersect(n, v.c1, w.c1)
        - intersect(n, K, v.rank * w.c1 - w.rank * v.c1)
    )
    if twice % 2:
        # unreachable when both inputs pass the parity check
        raise NonIntegral(f"Euler form of {v} and {w} is not an integer")
    return twice // 2


def tensor_line_bundle(v: K0Class, D: DivisorClass, n) -> K0Class:
    """``v (x) O(D)``: multiply Chern characters."""
    return K0Class(
        v.rank,
        v.c1 + v.rank * D,
        v.ch2_x2 + 2 * intersect(n, v.c1, D) + v.rank * intersect(n, D, D),
    )


def torsion_class_OC(a: int) -> K0Class:
    """Class of ``O_C(a)`` on F_2; ``ch = (0, C, a + 1)``."""
    return K0Class(0, C, 2 * (a + 1))


def serre_twist(v: K0Class, n) -> K0Class:
    return tensor_line_bundle(v, canonical_class(n), n)


def is_numerically_exceptional(n, v: K0Class) -> bool:
    return euler_form(n, v, v) == 1


def exceptional_class_from_slope(n, r: int, c1: DivisorClass) -> K0Class:
    """Solve ``chi(v, v) = 1`` for ``ch2``, given rank and first Chern class.

    On F_2 an exceptional bundle is determined by its slope, so this is the
    unique candidate class. Raises :class:`NonIntegral` when no integral class
    exists.
    """
    if r <= 0:
        raise ValueError(f"rank must be positive, got {r}")
    return _solve_ch2(n, r, c1)


def _solve_ch2(n, r: int, c1: DivisorClass) -> K0Class:
    # chi(v, v) = r^2 + r*ch2_x2 - c1^2
    c_sq = intersect(n, c1, c1)
    num = 1 + c_sq - r * r
    if num % r:
        raise NonIntegral(f"(1 + c1^2 - r^2)/r = {num}/{r} is not an integer")
    s2 = num // r
    if (s2 - c_sq) % 2:
        raise NonIntegral(f"solved ch2_x2 = {s2} breaks the parity condition")
    return K0Class(r, c1, s2)


def bundle_representative(n, v: K0Class) -> K0Class:
    """Normalize an exceptional class to the sign with positive rank."""
    if euler_form(n, v, v) != 1:
        raise NotExceptional(f"chi(v, v) = {euler_form(n, v, v)} for {v}")
    if v.rank == 0:
        raise ZeroRank(f"{v} has rank zero")
    return v if v.rank > 0 else -v


def iter_exceptional_classes(n, rank: tuple[int, int], x: tuple[int, int],
                             y: tuple[int, int]) -> Iterator[K0Class]:
    for r in range(rank[0], rank[1] + 1):
        for xi in range(x[0], x[1] + 1):
            for yi in range(y[0], y[1] + 1):
                c1 = DivisorClass(xi, yi)
                if r == 0:
                    if -intersect(n, c1, c1) == 1:
                        raise ValueError(
                            f"rank-0 class with c1 = {c1} is exceptional for every ch2; "
                            "the box does not bound it"
                        )
                    continue
                try:
                    yield _solve_ch2(n, r, c1)
                except NonIntegral:
                    continue


def enumerate_exceptional_classes(n=2, rank=(1, 1), x=(-1, 1), y=(-1, 1)) -> list[K0Class]:
    """All numerically exceptional classes with ``(rank, x, y)`` in the box.

    Bounds are inclusive ``(lo, hi)`` pairs. Negative ranks are allowed and
    produce the shifted classes. Output is sorted lexicographically.
    """
    return sorted(set(iter_exceptional_classes(n, rank, x, y)))
