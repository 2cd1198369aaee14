from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmstruct.core import Relation, StructureError
from cmstruct.corpus import random_structure
from cmstruct.embeddings import (
    CubePoint,
    EmbeddedStructure,
    cube_metric,
    embedded,
    iota,
    iota_structure,
    kuratowski_embed,
    sup_distance,
    unit_diameter,
)

from conftest import structure

F = Fraction
H = F(1, 2)


def test_kuratowski_examples():
    p, q = kuratowski_embed(structure([[0, 1], [1, 0]]), 2)
    assert p.coords == (0, 1) and q.coords == (1, 0)
    assert kuratowski_embed(structure([[0]]), 1)[0].coords == (0,)
    images = kuratowski_embed(structure([[0, H, H], [H, 0, H], [H, H, 0]]), 3)
    assert len({im.coords for im in images}) == 3


def test_kuratowski_padding_cycles():
    S = structure([[0, H], [H, 0]])
    assert [p.coords for p in kuratowski_embed(S, 5)] == [(0, H, 0, H, 0), (H, 0, H, 0, H)]


def test_kuratowski_errors():
    with pytest.raises(StructureError):
        kuratowski_embed(structure([[0, 2], [2, 0]]), 2)
    with pytest.raises(StructureError):
        kuratowski_embed(structure([[0, 1], [1, 0]]), 1)


def test_cube_metric_examples():
    a, b = CubePoint((0, 1)), CubePoint((1, 0))
    assert cube_metric(a, a) == 0
    assert cube_metric(a, b) == F(3, 4)
    assert cube_metric(CubePoint((0, 0, 0)), CubePoint((0, 0, 1))) == F(1, 8)
    with pytest.raises(StructureError):
        cube_metric(a, CubePoint((0,)))
    with pytest.raises(StructureError):
        CubePoint((F(3, 2),))


def test_iota_examples():
    assert iota(CubePoint((0, 1, H))).coords == (F(1, 4), F(3, 4), H)
    x = CubePoint((F(1, 3), F(5, 7)))
    assert iota(iota(x)).coords == tuple(c / 4 + F(3, 8) for c in x.coords)


def test_iota_structure_keeps_relations():
    E = EmbeddedStructure((CubePoint((0,)), CubePoint((1,))), {"R": Relation(1, frozenset({(0,)}))})
    I = iota_structure(E)
    assert I.relations == E.relations
    assert [p.coords for p in I.points] == [(F(1, 4),), (F(3, 4),)]
    assert iota_structure(EmbeddedStructure(())).points == ()


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 6), extra=st.integers(0, 4))
def test_embedding_identities(seed, n, extra):
    S = unit_diameter(random_structure(seed, n, {"R": 2}))
    E = embedded(S, n + extra)
    I = iota_structure(E)
    assert I.relations == S.relations
    for i in range(n):
        assert all(F(1, 4) <= c <= F(3, 4) for c in I.points[i].coords)
        for j in range(n):
            a, b = E.points[i], E.points[j]
            assert sup_distance(a, b, n) == S.metric[i][j]
            assert cube_metric(iota(a), iota(b)) == cube_metric(a, b) / 2
            if i != j:
                assert I.points[i] != I.points[j]


def test_unit_diameter():
    S = structure([[0, 4], [4, 0]])
    assert unit_diameter(S).metric[0][1] == 1
    T = structure([[0, H], [H, 0]])
    assert unit_diameter(T) is T
