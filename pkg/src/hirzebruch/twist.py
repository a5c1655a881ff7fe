"""Spherical twists along ``O_C(a)`` on F_2, seen on the Grothendieck lattice.

The triangle ``RHom(u, v) (x) u -> v -> T_u v`` gives ``[T_u v] = v - chi(u, v) u``
and the inverse twist gives ``v - chi(v, u) u``. Since ``K.C = 0`` on F_2 the two
agree on classes, but both are kept so exact sequences can be mirrored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .k0 import K0Class, check_parity, euler_form, tensor_line_bundle, torsion_class_OC
from .surface import C

N = 2


@dataclass(frozen=True)
class SphericalClass:
    """The line bundle ``O_C(a)`` on the (-2)-curve of F_2."""

    a: int

    @property
    def k0(self) -> K0Class:
        return torsion_class_OC(self.a)


def _spherical(a) -> SphericalClass:
    return a if isinstance(a, SphericalClass) else SphericalClass(int(a))


def twist_class(a, v: K0Class) -> K0Class:
    u = _spherical(a).k0
    check_parity(N, v)
    return v - euler_form(N, u, v) * u


def inverse_twist_class(a, v: K0Class) -> K0Class:
    u = _spherical(a).k0
    check_parity(N, v)
    return v - euler_form(N, v, u) * u


def compose_adjacent_twists(a, v: K0Class) -> K0Class:
    """``T_{O_C(a-1)} T_{O_C(a)} v``, which should equal ``v (x) O(C)``."""
    a = _spherical(a).a
    return twist_class(a - 1, twist_class(a, v))


def tensor_by_C(v: K0Class) -> K0Class:
    return tensor_line_bundle(v, C, N)
