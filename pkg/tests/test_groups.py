from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from cmstruct.core import StructureError, validate_structure
from cmstruct.corpus import random_word_metric, rng_from
from cmstruct.groups import (
    FiniteGroup,
    alexandrov_structure,
    cyclic,
    decide_translation_equiv,
    dihedral,
    direct_product,
    find_group_isomorphism,
    integer_ball,
    is_group_isomorphism,
    left_translate,
    mult_graph,
    quaternion,
    roelcke_metric,
    roelcke_structure,
    small_groups,
    symmetric,
    translation_structure,
    validate_group,
    weighted_word_metric,
)
from cmstruct.isometry import decide_isometric_iso

from conftest import structure
from oracles import brute_group_iso, brute_translations

F = Fraction
Z5 = cyclic(5)


def all_small_groups(limit=8):
    return [G for n in range(1, limit + 1) for G in small_groups(n)]


def test_validate_group_examples():
    assert validate_group([[0, 1], [1, 0]]).ok
    assert validate_group([[1, 0], [0, 1]]).ok  # identity is 1
    no_identity = [[1, 1], [1, 1]]
    assert any(name == "identity" for name, _ in validate_group(no_identity).violations)
    # x*y = (y - x) mod 3 has no associativity
    magma = [[(y - x) % 3 for y in range(3)] for x in range(3)]
    names = {name for name, _ in validate_group(magma).violations}
    assert "associativity" in names
    witnesses = [w for name, w in validate_group(magma).violations if name == "associativity"]
    for x, y, z in witnesses:
        assert magma[magma[x][y]][z] != magma[x][magma[y][z]]


def test_group_constructor_rejects_bad_tables():
    with pytest.raises(StructureError):
        FiniteGroup([[1, 1], [1, 1]])


def test_catalogue_sizes():
    counts = {n: len(small_groups(n)) for n in range(1, 9)}
    assert counts == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5}
    assert dihedral(4).order == 8 and symmetric(3).order == 6 and quaternion().order == 8
    assert direct_product(cyclic(2), cyclic(3)).order == 6


def test_catalogue_groups_pairwise_non_isomorphic():
    for n in range(1, 9):
        for G, H in combinations(small_groups(n), 2):
            assert find_group_isomorphism(G, H) is None


@pytest.mark.parametrize("G", all_small_groups(), ids=lambda G: f"order{G.order}")
def test_group_isomorphism_matches_oracle_on_relabellings(G):
    rng = rng_from(G.order)
    perm = tuple(int(x) for x in rng.permutation(G.order))
    H = G.relabel(perm)
    f = find_group_isomorphism(G, H)
    assert f is not None and is_group_isomorphism(G, H, f)
    assert brute_group_iso(G, H) is not None


def test_z2_cross_z2_is_not_z4():
    assert find_group_isomorphism(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None
    assert brute_group_iso(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None


def test_mult_graph_examples():
    assert mult_graph(cyclic(1)) == {(0, 0, 0)}
    g2 = mult_graph(cyclic(2))
    assert len(g2) == 4 and (1, 1, 0) in g2
    for G in all_small_groups():
        assert len(mult_graph(G)) == G.order ** 2


def test_roelcke_examples():
    Z2 = cyclic(2)
    assert roelcke_metric(Z2, weighted_word_metric(Z2, {1: 1})) == ((0, 1), (1, 0))
    Z3 = cyclic(3)
    M = roelcke_metric(Z3, weighted_word_metric(Z3, {1: 1, 2: 1}))
    assert all(M[i][j] == (0 if i == j else 1) for i in range(3) for j in range(3))
    assert roelcke_structure(cyclic(1), weighted_word_metric(cyclic(1), {})).n == 1


def test_word_metric_examples():
    one = weighted_word_metric(Z5, {1: 1, 4: 1})
    two = weighted_word_metric(Z5, {1: 2, 4: 2})
    assert one.length[0] == 0
    assert one.d(0, 2) == 2 and two.d(0, 2) == 4
    with pytest.raises(StructureError):
        weighted_word_metric(cyclic(4), {2: 1})
    with pytest.raises(StructureError):
        weighted_word_metric(Z5, {1: 1})


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), which=st.integers(0, 18))
def test_metric_properties(seed, which):
    groups = all_small_groups(8) + [dihedral(5), cyclic(12), direct_product(cyclic(2), symmetric(3))]
    G = groups[which % len(groups)]
    d = random_word_metric(seed, G)
    assert d.validate().ok
    for k, f, g in [(k, f, g) for k in range(G.order) for f in range(G.order) for g in range(G.order)][:500]:
        assert d.d(G.table[k][f], G.table[k][g]) == d.d(f, g)
    M = roelcke_metric(G, d)
    S = roelcke_structure(G, d)
    assert validate_structure(S).ok
    for g in range(G.order):
        for h in range(G.order):
            assert M[g][h] <= d.d(g, h)
            assert M[g][h] == M[h][g]


def test_roelcke_structure_iso_tracks_group_iso():
    order8 = small_groups(8)
    for G, H in combinations(order8, 2):
        SG = roelcke_structure(G, random_word_metric(1, G))
        SH = roelcke_structure(H, random_word_metric(2, H))
        assert decide_isometric_iso(SG, SH) is None
    G = small_groups(6)[1]
    perm = (3, 0, 5, 1, 2, 4)
    d = random_word_metric(7, G)
    H = G.relabel(perm)
    moved = [None] * G.order
    for g in range(G.order):
        moved[perm[g]] = d.length[g]
    dH = type(d)(H, tuple(moved))
    assert decide_isometric_iso(roelcke_structure(G, d), roelcke_structure(H, dH)) is not None


def test_alexandrov_examples():
    P, base, mult = integer_ball(3)
    S = alexandrov_structure(P, base, mult)
    lo, hi, star = 0, 6, 7
    assert S.metric[lo][hi] == F(1, 2)
    assert S.metric[star][base] == 1
    assert S.relations["Infinity"].tuples == {(star,)}
    for f in range(P.n):
        for g in range(P.n):
            assert S.metric[f][g] <= P.metric[f][g]
    assert validate_structure(S).ok


def test_alexandrov_bad_base():
    with pytest.raises(StructureError):
        alexandrov_structure(structure([[0]]), 3)


def test_translation_structure_examples():
    S = translation_structure(Z5, 1, 2, {0, 1})
    assert S.relations["Ra"].tuples == {(g, (g + 1) % 5) for g in range(5)}
    assert len(S.relations["Rb"].tuples) == 5
    assert translation_structure(Z5, 1, 2, set()).relations["A"].tuples == frozenset()
    with pytest.raises(StructureError):
        translation_structure(cyclic(4), 2, 2, {0})


def test_translation_equiv_examples():
    assert decide_translation_equiv(Z5, 1, 2, {0, 1}, {0, 1}) == 0
    assert decide_translation_equiv(Z5, 1, 2, {0, 1}, {2, 3}) == 2
    assert decide_translation_equiv(Z5, 1, 2, {0, 1}, {0, 2}) is None


@pytest.mark.parametrize("G", [cyclic(5), symmetric(3), dihedral(4)], ids=["Z5", "S3", "D4"])
def test_translation_equiv_against_brute_force(G):
    n = G.order
    a, b = next((a, b) for a in range(n) for b in range(n) if G.generated([a, b]) == set(range(n)))
    subsets = [frozenset(c) for k in range(3) for c in combinations(range(n), k)]
    for A in subsets:
        for B in subsets:
            got = decide_translation_equiv(G, a, b, A, B)
            want = brute_translations(G, A, B)
            assert got == (min(want) if want else None)
            if got is not None:
                assert left_translate(G, got, A) == B


def test_left_translation_is_structure_automorphism():
    G = symmetric(3)
    A = {1, 2}
    for g in range(G.order):
        S = translation_structure(G, 1, 3, A)
        T = translation_structure(G, 1, 3, left_translate(G, g, A))
        f = tuple(G.table[g][x] for x in range(G.order))
        assert all({tuple(f[i] for i in t) for t in rel.tuples} == T.relations[name].tuples
                   for name, rel in S.relations.items())


def test_relabel_roundtrip():
    G = quaternion()
    for perm in list(permutations(range(8)))[:50:7]:
        inv = [0] * 8
        for i, p in enumerate(perm):
            inv[p] = i
        assert G.relabel(perm).relabel(inv) == G
