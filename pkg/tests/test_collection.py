import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirzebruch import certify
from hirzebruch.collection import (
    LETTERS,
    Collection4,
    GroupElement,
    SearchStats,
    apply_group_element,
    apply_word,
    canonical_sign,
    cohomological_exceptional_check,
    gram,
    is_exceptional_collection,
    mutate,
    orbit_search,
    sigma23_square_check,
    standard_collection,
    standard_divisors,
)
from hirzebruch.errors import NotExceptionalCollection, NotFound
from hirzebruch.k0 import euler_form, line_bundle_class, structure_sheaf
from hirzebruch.surface import C, F, euler_char_line_bundle, line_bundle_cohomology

from conftest import classes

O = structure_sheaf()
STD = standard_collection(2)
words = st.lists(st.sampled_from(LETTERS), max_size=8)


def test_standard_collection_classes():
    assert STD.classes == tuple(line_bundle_class(2, D) for D in (0 * F, F, C + 2 * F, C + 3 * F))
    assert all(v.rank == 1 for v in STD)


def test_standard_gram():
    G = gram(2, STD)
    assert G[0] == (1, 2, 4, 6)
    # oracle: Riemann-Roch on the differences
    assert [euler_char_line_bundle(2, D) for D in standard_divisors(2)] == [1, 2, 4, 6]
    assert all(G[j][i] == 0 for i in range(4) for j in range(i + 1, 4))
    assert G == ((1, 2, 4, 6), (0, 1, 2, 4), (0, 0, 1, 2), (0, 0, 0, 1))


def test_standard_collection_cohomology():
    report = cohomological_exceptional_check(2, standard_divisors(2))
    assert report["ok"]
    assert len(report["downward"]) == 6
    assert all(h == (0, 0, 0) for h in report["downward"].values())
    # upward Exts are concentrated in degree 0
    assert all(h[1] == h[2] == 0 for h in report["upward"].values())


@pytest.mark.parametrize("n", range(0, 7))
def test_standard_collection_other_surfaces(n):
    assert is_exceptional_collection(n, standard_collection(n))


def test_gram_small_cases():
    same = Collection4((O, O, O, O))
    assert gram(2, same) == ((1,) * 4,) * 4
    assert not is_exceptional_collection(2, same)
    OF = line_bundle_class(2, F)
    assert euler_form(2, O, OF) == 2 and euler_form(2, OF, O) == 0


def test_reversed_standard_not_exceptional():
    assert not is_exceptional_collection(2, Collection4(STD.classes[::-1]))


def test_mutate_example():
    m = mutate(STD, 1, 1)
    OF = line_bundle_class(2, F)
    assert m.classes[:2] == (OF - 2 * O, O)
    assert m.classes[2:] == STD.classes[2:]


@pytest.mark.parametrize("k", (1, 2, 3))
def test_round_trip_each_position(k):
    assert mutate(mutate(STD, k, 1), k, -1) == STD
    assert mutate(mutate(STD, k, -1), k, 1) == STD


def test_mutate_requires_exceptional():
    with pytest.raises(NotExceptionalCollection):
        mutate(Collection4((O, O, O, O)), 1, 1)
    with pytest.raises(ValueError):
        mutate(STD, 4, 1)
    with pytest.raises(ValueError):
        mutate(STD, 1, 0)


@settings(max_examples=150)
@given(words)
def test_mutations_preserve_exceptionality(word):
    assert is_exceptional_collection(2, apply_word(STD, word))


@settings(max_examples=100)
@given(words, st.sampled_from((1, 2)))
def test_braid_relations(word, k):
    c = apply_word(STD, word)
    assert apply_word(c, [(k, 1), (k + 1, 1), (k, 1)]) == apply_word(c, [(k + 1, 1), (k, 1), (k + 1, 1)])
    assert apply_word(c, [(k, -1), (k + 1, -1), (k, -1)]) == apply_word(c, [(k + 1, -1), (k, -1), (k + 1, -1)])


@settings(max_examples=100)
@given(words)
def test_far_commutation(word):
    c = apply_word(STD, word)
    assert apply_word(c, [(1, 1), (3, 1)]) == apply_word(c, [(3, 1), (1, 1)])


def test_group_element_examples():
    assert apply_group_element(STD, GroupElement()) == STD
    flipped = apply_group_element(STD, GroupElement((1, 0, 0, 0)))
    assert flipped.classes == (-O,) + STD.classes[1:]
    assert apply_group_element(STD, GroupElement(word=((1, 1), (1, -1)))) == STD
    # even shifts are invisible
    assert GroupElement((2, 3, 0, 0)).shifts == (0, 1, 0, 0)


def test_group_element_json():
    g = GroupElement((1, 0, 1, 0), ((2, 1), (3, -1)))
    assert g.to_json() == {"signs": [1, 0, 1, 0], "word": [[2, 1], [3, -1]]}
    assert GroupElement.from_json(g.to_json()) == g


@given(classes())
def test_canonical_sign(v):
    c = canonical_sign(v)
    assert canonical_sign(c) == c
    assert canonical_sign(-v) == c
    assert c in (v, -v)


def test_orbit_search_identity():
    assert orbit_search(2, STD, STD, 3) == GroupElement()


def test_orbit_search_round_trips():
    rng = random.Random(7)
    for _ in range(30):
        word = tuple(rng.choice(LETTERS) for _ in range(rng.randint(1, 5)))
        signs = tuple(rng.randint(0, 1) for _ in range(4))
        src = apply_group_element(STD, GroupElement(signs, word))
        stats = SearchStats()
        g = orbit_search(2, src, STD, 5, stats)
        assert len(g.word) <= len(word)
        assert apply_group_element(src, g) == STD
        assert certify.verify_certificate(2, src, STD, g)
        assert stats.visited >= 1


def test_orbit_search_not_found_is_inconclusive():
    src = apply_word(STD, [(1, 1), (2, 1), (3, 1)])
    with pytest.raises(NotFound) as info:
        orbit_search(2, src, STD, 1)
    assert info.value.max_depth == 1
    assert "not a refutation" in str(info.value)
    # the same pair is solved with more depth
    assert certify.verify_certificate(2, src, STD, orbit_search(2, src, STD, 3))


def test_orbit_search_rejects_non_exceptional_source():
    swapped = Collection4((STD[1], STD[0], STD[2], STD[3]))
    with pytest.raises(NotExceptionalCollection):
        orbit_search(2, swapped, STD, 2)


@settings(max_examples=300)
@given(classes(), classes())
def test_certifier_matrix_matches_euler_form(v, w):
    M = certify.doubled_euler_matrix(2)
    assert certify._chi(M, v.coords(), w.coords()) == euler_form(2, v, w)


@given(classes(n=3), classes(n=3))
def test_certifier_matrix_matches_euler_form_F3(v, w):
    M = certify.doubled_euler_matrix(3)
    assert certify._chi(M, v.coords(), w.coords()) == euler_form(3, v, w)


@pytest.mark.parametrize("n", range(0, 5))
def test_certifier_matrix_other_surfaces(n):
    M = certify.doubled_euler_matrix(n)
    std = standard_collection(n)
    for v in std:
        for w in std:
            assert certify._chi(M, v.coords(), w.coords()) == euler_form(n, v, w)


def test_certifier_rejects_wrong_certificate():
    src = apply_word(STD, [(2, 1)])
    good = orbit_search(2, src, STD, 2)
    assert certify.verify_certificate(2, src, STD, good)
    bad = GroupElement(good.shifts, good.word + ((1, 1),))
    assert not certify.verify_certificate(2, src, STD, bad)


def test_sigma23_on_F0():
    rep = sigma23_square_check(0)
    assert rep.chi_forward == rep.chi_backward == 0
    for h in (rep.cohom_forward, rep.cohom_backward):
        assert h[0] == h[2] == 0
        assert h[0] - h[1] + h[2] == 0
    assert rep.fixed and rep.passed
    assert euler_char_line_bundle(0, F - C) == 0
    assert line_bundle_cohomology(0, F - C).as_tuple() == rep.cohom_forward
