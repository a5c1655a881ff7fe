"""The family E_i of exceptional objects on F_2 that share one K0 class.

Starting from an exceptional bundle ``E = E_{-1}`` whose restriction to the
(-2)-curve is ``O_C(b0-1)^(R-s) + O_C(b0)^s``, put

    F_0 = T'_{O_C(b0-1)} E,   F_i = F_0(-iC),   E_i = T_{O_C(b0+i)} F_{i+1}.

With ``r_i = (i+1) R - s`` the class of ``E_i`` splits as
``[F_i] + r_i [O_C(b0+i-1)]``. For ``i >= 0`` (and ``r_i > 0``) this is an
extension of ``F_i`` by torsion; for ``i <= -2`` the object is a two-term
complex with ``H^0 = F_{i+1}`` and ``H^1 = O_C(b0+i)^(-r_{i+1})``.

Everything here is numerical: the two-degree splitting of the restriction is
taken as given and applied to any numerically exceptional class of positive
rank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import Mismatch, NonpositiveRank, NotExceptional
from .k0 import K0Class, bundle_representative, euler_form, tensor_line_bundle, torsion_class_OC
from .surface import C, intersect

N = 2
DEFAULT_TOWER_MAX = 8


class Kind(str, enum.Enum):
    BUNDLE = "Bundle"
    SHEAF_WITH_TORSION = "SheafWithTorsion"
    COMPLEX = "Complex"


@dataclass(frozen=True)
class RestrictionProfile:
    b0: int
    s: int
    R: int

    @property
    def degree(self) -> int:
        """``c1.C`` of the bundle, recovered from the splitting type."""
        return (self.b0 - 1) * (self.R - self.s) + self.b0 * self.s

    def r(self, i: int) -> int:
        """Multiplicity ``r_i = (i+1) R - s``."""
        return (i + 1) * self.R - self.s

    def to_json(self) -> dict:
        return {"b0": self.b0, "s": self.s, "R": self.R}


@dataclass(frozen=True)
class TowerEntry:
    i: int
    kind: Kind
    torsion_degree: int
    torsion_mult: int
    free_part: K0Class
    total: K0Class

    @property
    def torsion_class(self) -> K0Class:
        return self.torsion_mult * torsion_class_OC(self.torsion_degree)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "kind": self.kind.value,
            "torsion_degree": self.torsion_degree,
            "torsion_mult": self.torsion_mult,
            "free_part": self.free_part.to_json(),
            "total": self.total.to_json(),
        }


def _require_bundle_class(v: K0Class) -> None:
    chi = euler_form(N, v, v)
    if chi != 1:
        raise NotExceptional(f"chi(v, v) = {chi} for {v}")
    if v.rank <= 0:
        raise NonpositiveRank(f"{v} has rank {v.rank}; normalize with bundle_representative first")


def profile_from_degree(R: int, d: int) -> RestrictionProfile:
    """Split degree ``d`` over rank ``R`` into two adjacent degrees ``b0 - 1, b0``."""
    if R <= 0:
        raise NonpositiveRank(f"rank {R}")
    b0 = -(-d // R)
    return RestrictionProfile(b0, d - R * (b0 - 1), R)


def restriction_profile(v: K0Class) -> RestrictionProfile:
    _require_bundle_class(v)
    return profile_from_degree(v.rank, intersect(N, v.c1, C))


def f0_class(v: K0Class) -> K0Class:
    p = restriction_profile(v)
    return v - (p.R - p.s) * torsion_class_OC(p.b0 - 1)


def f_i_class(v: K0Class, i: int) -> K0Class:
    return tensor_line_bundle(f0_class(v), -i * C, N)


def tower_entry(v: K0Class, i: int) -> TowerEntry:
    p = restriction_profile(v)
    if i == -1 or (i == 0 and p.s == p.R):
        return TowerEntry(i, Kind.BUNDLE, p.b0 + i - 1, 0, v, v)
    if i >= 0:
        free = f_i_class(v, i)
        r = p.r(i)
        total = free + r * torsion_class_OC(p.b0 + i - 1)
        return TowerEntry(i, Kind.SHEAF_WITH_TORSION, p.b0 + i - 1, r, free, total)
    h0 = f_i_class(v, i + 1)
    m = -p.r(i + 1)
    total = h0 - m * torsion_class_OC(p.b0 + i)
    return TowerEntry(i, Kind.COMPLEX, p.b0 + i, m, h0, total)


LABELS = ("T", "E", "F")


@dataclass(frozen=True)
class ExtTable:
    """Ext dimensions among torsion part T, sheaf E and free part F."""

    t: int
    f: int
    rows: dict = field(repr=False)

    def __getitem__(self, pair: tuple[str, str]) -> tuple[int, int, int]:
        return self.rows[pair]

    def chi(self, pair: tuple[str, str]) -> int:
        e0, e1, e2 = self.rows[pair]
        return e0 - e1 + e2

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "f": self.f,
            "rows": [{"pair": list(k), "ext": list(v)} for k, v in self.rows.items()],
        }


def ext_table(t: int, f: int) -> ExtTable:
    if t < 1 or f < 1:
        raise ValueError(f"ext_table needs t >= 1 and f >= 1, got t={t}, f={f}")
    rows = {
        ("T", "T"): (t, 0, t),
        ("T", "E"): (t, f - 1, 0),
        ("T", "F"): (0, f + t - 1, 0),
        ("E", "T"): (0, f - 1, t),
        ("E", "E"): (1, 0, 0),
        ("E", "F"): (f, t, 0),
        ("F", "T"): (0, f + t - 1, 0),
        ("F", "E"): (0, t - 1, f - 1),
        ("F", "F"): (f, 0, f - 1),
    }
    return ExtTable(t, f, rows)


def check_table_consistency(v: K0Class, i: int) -> bool:
    """Compare the Ext table (with ``t = r^2``, ``f = 1``) against the Euler form."""
    entry = tower_entry(v, i)
    if entry.kind is not Kind.SHEAF_WITH_TORSION:
        raise ValueError(f"E_{i} is {entry.kind.value}, not a sheaf with torsion")
    r = entry.torsion_mult
    table = ext_table(r * r, 1)
    classes = {"T": entry.torsion_class, "E": entry.total, "F": entry.free_part}
    for a in LABELS:
        for b in LABELS:
            expected = table.chi((a, b))
            got = euler_form(N, classes[a], classes[b])
            if expected != got:
                raise Mismatch(f"chi({a}, {b}): table gives {expected}, Euler form gives {got} (v={v}, i={i})")
    return True


@dataclass(frozen=True)
class ClassificationReport:
    root: K0Class
    profile: RestrictionProfile
    entries: tuple[TowerEntry, ...]
    e_minus1_iso_e0: bool
    semantics: str = "numerical"

    def to_json(self) -> dict:
        header = {"root": self.root.to_json(), **self.profile.to_json(),
                  "e_minus1_iso_e0": self.e_minus1_iso_e0, "semantics": self.semantics}
        return {"header": header, "entries": [e.to_json() for e in self.entries]}


def classify_sheaves_sharing_class(v: K0Class, tower_max: int = DEFAULT_TOWER_MAX) -> ClassificationReport:
    """Exceptional sheaves with class ``+-v``: the entries ``E_i`` for ``i >= -1``.

    The set is infinite, so only ``i = -1 .. tower_max`` is listed.
    """
    root = bundle_representative(N, v)
    p = restriction_profile(root)
    entries = tuple(tower_entry(root, i) for i in range(-1, tower_max + 1))
    return ClassificationReport(root, p, entries, p.s == p.R)
