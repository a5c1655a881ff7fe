"""Replayable desk checks, aggregated into one deterministic report."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import certify
from .collection import (
    LETTERS,
    GroupElement,
    apply_group_element,
    apply_word,
    cohomological_exceptional_check,
    gram,
    is_exceptional_collection,
    orbit_search,
    sigma23_square_check,
    standard_collection,
    standard_divisors,
)
from .k0 import (
    K0Class,
    bundle_representative,
    enumerate_exceptional_classes,
    euler_form,
    line_bundle_class,
    serre_twist,
    structure_sheaf,
    torsion_class_OC,
)
from .surface import C, F, DivisorClass, euler_char_line_bundle, intersect, line_bundle_cohomology
from .tower import Kind, check_table_consistency, tower_entry
from .twist import compose_adjacent_twists, tensor_by_C, twist_class

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "detail": self.detail, "seconds": round(self.seconds, 4)}


def random_class(rng: random.Random, n: int = 2, bound: int = 8) -> K0Class:
    """A random lattice point satisfying the parity condition on F_n."""
    r, x, y = (rng.randint(-bound, bound) for _ in range(3))
    c_sq = 2 * x * y - n * y * y
    s2 = 2 * rng.randint(-bound, bound) + (c_sq % 2)
    return K0Class(r, DivisorClass(x, y), s2)


def random_divisor(rng: random.Random, bound: int = 8) -> DivisorClass:
    return DivisorClass(rng.randint(-bound, bound), rng.randint(-bound, bound))


def default_corpus() -> list[K0Class]:
    """Line bundles with ``|x|, |y| <= 3`` and higher-rank exceptional classes on F_2."""
    lines = [line_bundle_class(2, DivisorClass(x, y)) for x in range(-3, 4) for y in range(-3, 4)]
    higher = enumerate_exceptional_classes(2, rank=(2, 5), x=(-6, 6), y=(-6, 6))
    return lines + higher


# -- individual checks; each returns (passed, detail) --------------------------


def check_euler_calibration(rng, n=2):
    O = structure_sheaf()
    if euler_form(2, O, O) != 1:
        return False, "chi(O, O) != 1"
    for a in range(-10, 11):
        u = torsion_class_OC(a)
        if euler_form(2, u, u) != 2:
            return False, f"chi(O_C({a}), O_C({a})) != 2"
    for _ in range(500):
        D1, D2 = random_divisor(rng), random_divisor(rng)
        chi = euler_form(n, line_bundle_class(n, D1), line_bundle_class(n, D2))
        h = line_bundle_cohomology(n, D2 - D1)
        if chi != h.euler_characteristic:
            return False, f"chi(O({D1}), O({D2})) = {chi} but cohomology gives {h}"
    return True, "spherical classes a in [-10, 10] and 500 line-bundle pairs"


def check_double_twist(rng, n=2):
    for _ in range(1000):
        a, v = rng.randint(-20, 20), random_class(rng)
        if twist_class(a, twist_class(a, v)) != v:
            return False, f"T^2 moved {v} for a={a}"
    return True, "1000 random (a, v)"


def check_twist_reflection(rng, n=2):
    for _ in range(1000):
        a, v = rng.randint(-20, 20), random_class(rng)
        u = torsion_class_OC(a)
        if euler_form(2, u, twist_class(a, v)) != -euler_form(2, u, v):
            return False, f"chi(u, T v) != -chi(u, v) for a={a}, v={v}"
    return True, "1000 random (a, v)"


def check_twist_fixed_point(rng, n=2):
    O = structure_sheaf()
    return twist_class(-1, O) == O, "T_{O_C(-1)} O = O"


def check_compose_adjacent(rng, n=2):
    basis = [K0Class(1), K0Class(0, F, 0), K0Class(0, C, 0), K0Class(0, DivisorClass(), 2)]
    samples = basis + [random_class(rng) for _ in range(1000)]
    for i, v in enumerate(samples):
        a = rng.randint(-20, 20)
        if compose_adjacent_twists(a, v) != tensor_by_C(v):
            return False, f"composition != (x) O(C) on {v}, a={a}"
    return True, "4 basis classes and 1000 random (a, v)"


def check_tower_invariance(rng, n=2):
    corpus = default_corpus()
    for v in corpus:
        for i in range(-6, 11):
            e = tower_entry(v, i)
            if e.total != v:
                return False, f"[E_{i}] = {e.total} != {v}"
    return True, f"{len(corpus)} classes, i in [-6, 10]"


def check_tower_twist_consistency(rng, n=2):
    from .tower import f_i_class, restriction_profile
    from .twist import inverse_twist_class

    for v in default_corpus():
        b0 = restriction_profile(v).b0
        for i in range(0, 8):
            Fi = f_i_class(v, i)
            a = b0 + i - 1
            if tower_entry(v, i).total != inverse_twist_class(a, Fi):
                return False, f"[E_{i}] != T'[F_{i}] for {v}"
            if tower_entry(v, i - 1).total != twist_class(a, Fi):
                return False, f"[E_{i-1}] != T[F_{i}] for {v}"
    return True, "corpus, i in [0, 7]"


def check_ext_tables(rng, n=2):
    count = 0
    for v in default_corpus():
        for i in range(0, 11):
            if tower_entry(v, i).kind is Kind.SHEAF_WITH_TORSION:
                check_table_consistency(v, i)
                count += 1
    return True, f"{count} torsion entries, 9 pairings each"


def check_standard_collection(rng, n=2):
    coh = cohomological_exceptional_check(n, standard_divisors(n))
    G = gram(n, standard_collection(n))
    if not coh["ok"]:
        return False, f"downward cohomology {coh['downward']}"
    lower_ok = all(G[j][i] == 0 for i in range(4) for j in range(i + 1, 4))
    diag_ok = all(G[i][i] == 1 for i in range(4))
    if not (lower_ok and diag_ok):
        return False, f"Gram {G}"
    if n == 2 and G[0] != (1, 2, 4, 6):
        return False, f"first Gram row {G[0]}"
    return True, f"Gram first row {G[0]}"


def _random_orbit_member(rng, n, length=8):
    word = [rng.choice(LETTERS) for _ in range(rng.randint(0, length))]
    return apply_word(standard_collection(n), word, n)


def check_mutation_algebra(rng, n=2):
    for _ in range(100):
        c = _random_orbit_member(rng, n)
        if not is_exceptional_collection(n, c):
            return False, "mutation broke exceptionality"
        for k in (1, 2, 3):
            if apply_word(c, [(k, 1), (k, -1)], n) != c or apply_word(c, [(k, -1), (k, 1)], n) != c:
                return False, f"round trip fails at k={k}"
        for k in (1, 2):
            lhs = apply_word(c, [(k, 1), (k + 1, 1), (k, 1)], n)
            rhs = apply_word(c, [(k + 1, 1), (k, 1), (k + 1, 1)], n)
            if lhs != rhs:
                return False, f"braid relation fails at k={k}"
    return True, "100 orbit members: round trips and braid relations"


def check_orbit_round_trip(rng, n=2):
    std = standard_collection(n)
    for _ in range(50):
        word = tuple(rng.choice(LETTERS) for _ in range(rng.randint(0, 5)))
        signs = tuple(rng.randint(0, 1) for _ in range(4))
        src = apply_group_element(std, GroupElement(signs, word), n)
        g = orbit_search(n, src, std, 5)
        if not certify.verify_certificate(n, src, std, g):
            return False, f"certificate {g} does not re-verify"
    return True, "50 random words of length <= 5 recovered and re-verified"


def check_rank_parity(rng, n=2):
    classes = enumerate_exceptional_classes(2, rank=(-10, 10), x=(-10, 10), y=(-10, 10))
    if any(v.rank == 0 for v in classes):
        return False, "rank-0 exceptional class found"
    for v in classes:
        b = bundle_representative(2, v)
        if b.rank <= 0 or euler_form(2, b, b) != 1:
            return False, f"bad representative for {v}"
    return True, f"{len(classes)} classes, none of rank 0"


def check_negative_degree_F3(rng, n=2):
    L = 2 * F + C
    h0 = line_bundle_cohomology(3, L).h0
    chi = euler_form(3, structure_sheaf(), line_bundle_class(3, L))
    deg = intersect(3, L, C)
    return (h0, chi, deg) == (3, 3, -1), f"h0={h0}, chi={chi}, L.C={deg} on F_3"


def check_sigma23(rng, n=2):
    rep = sigma23_square_check(0)
    return rep.passed, (f"chi both ways {rep.chi_forward}, {rep.chi_backward}; "
                        f"cohomology {rep.cohom_forward}, {rep.cohom_backward}; fixed={rep.fixed}")


def check_serre_duality(rng, n=2):
    for _ in range(1000):
        v, w = random_class(rng, n), random_class(rng, n)
        if euler_form(n, v, w) != euler_form(n, w, serre_twist(v, n)):
            return False, f"Serre duality fails for {v}, {w}"
    return True, "1000 random pairs"


def check_riemann_roch(rng, n=2):
    for x in range(-12, 13):
        for y in range(-12, 13):
            D = DivisorClass(x, y)
            if line_bundle_cohomology(n, D).euler_characteristic != euler_char_line_bundle(n, D):
                return False, f"RR fails for {D}"
    return True, "box |x|, |y| <= 12"


CHECKS: dict[str, Callable] = {
    "compose-adjacent-twists": check_compose_adjacent,
    "double-twist-trivial": check_double_twist,
    "euler-calibration": check_euler_calibration,
    "ext-table-consistency": check_ext_tables,
    "line-bundle-riemann-roch": check_riemann_roch,
    "mutation-algebra": check_mutation_algebra,
    "orbit-round-trip": check_orbit_round_trip,
    "rank-parity": check_rank_parity,
    "remark-Fn-negative-degree": check_negative_degree_F3,
    "serre-duality": check_serre_duality,
    "sigma23-square": check_sigma23,
    "standard-collection": check_standard_collection,
    "tower-class-invariance": check_tower_invariance,
    "tower-twist-consistency": check_tower_twist_consistency,
    "twist-fixed-point": check_twist_fixed_point,
    "twist-reflection": check_twist_reflection,
}


def verify_suite(n: int = 2, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every check in name order. Failures and exceptions become report entries."""
    results = []
    for name in sorted(CHECKS):
        # one generator per check keeps results independent of check order
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        try:
            ok, detail = CHECKS[name](rng, n)
        except Exception as exc:  # noqa: BLE001 - a crash is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
