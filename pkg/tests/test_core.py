from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from cmstruct.core import (
    INFINITY,
    MetricStructure,
    Relation,
    StructureError,
    covering_radius,
    product_metric,
    relation_covering_radius,
    scale_metric,
    validate_structure,
)
from cmstruct.corpus import random_structure

from conftest import structure


def test_smallest_valid_structure(two_point):
    assert validate_structure(two_point).ok


def test_zero_distance_is_a_positivity_violation():
    report = validate_structure(structure([[0, 0], [0, 0]]))
    assert not report.ok
    assert ("positivity", (0, 1)) in report.violations


def test_triangle_violation_witness():
    report = validate_structure(structure([[0, 1, 3], [1, 0, 1], [3, 1, 0]]))
    assert report.violations == (("triangle", (0, 1, 2)),)


def test_malformed_relation_tuples_reported():
    S = structure([[0, 1], [1, 0]], {"R": Relation(2, frozenset({(0, 5), (1,)}))})
    names = {name for name, _ in validate_structure(S).violations}
    assert names == {"tuple index R", "tuple length R"}


def test_asymmetric_and_nonzero_diagonal():
    report = validate_structure(structure([[1, 2], [3, 0]]))
    names = {name for name, _ in report.violations}
    assert {"zero diagonal", "symmetry"} <= names


def test_rationals_parse_from_strings():
    S = structure([["0", "1/2"], ["2/4", "0"]])
    assert S.metric[0][1] == Fraction(1, 2)
    with pytest.raises(TypeError):
        structure([[0, 0.5], [0.5, 0]])


def test_product_metric_examples(two_point, three_point):
    assert product_metric(two_point, (0, 0), (0, 1)) == 1
    assert product_metric(two_point, (0, 1), (0, 1)) == 0
    assert product_metric(three_point, (0, 1), (2, 2)) == 3
    with pytest.raises(StructureError):
        product_metric(two_point, (0,), (0, 1))


def test_covering_radius_examples(two_point):
    assert covering_radius(two_point, [0, 1]) == 0
    assert covering_radius(two_point, [0]) == 1
    S = structure([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert covering_radius(S, [0]) == 2
    with pytest.raises(StructureError):
        covering_radius(S, [])


def test_relation_covering_radius_examples():
    S = structure([[0, 1], [1, 0]], {"R": Relation(2, frozenset({(0, 1), (1, 0)})),
                                     "E": Relation(2, frozenset())})
    assert relation_covering_radius(S, "R", {(0, 1), (1, 0)}) == 0
    assert relation_covering_radius(S, "R", {(0, 1)}) == 1
    assert relation_covering_radius(S, "E", set()) == 0
    assert relation_covering_radius(S, "R", set()) == INFINITY
    with pytest.raises(StructureError):
        relation_covering_radius(S, "missing", set())


def test_scale_metric_examples(two_point):
    assert scale_metric(two_point, 1) == two_point
    assert scale_metric(two_point, 2).metric[0][1] == 2
    assert scale_metric(structure([[0, 3], [3, 0]]), Fraction(1, 3)).metric[0][1] == 1
    for bad in (0, -1):
        with pytest.raises(StructureError):
            scale_metric(two_point, bad)


def test_relabel_moves_points_and_relations(two_point):
    T = two_point.relabel((1, 0))
    assert T.points == ("p1", "p0")
    assert T.relations["R"].tuples == frozenset({(1,)})


def test_product_metric_is_a_metric_on_tuples():
    # exhaustive on tuples of length <= 3 over small random structures
    for seed in range(6):
        S = random_structure(seed, 2 + seed % 3)
        for k in (1, 2, 3):
            tuples = list(product(range(S.n), repeat=k))
            for a, b in product(tuples, repeat=2):
                dab = product_metric(S, a, b)
                assert dab == product_metric(S, b, a)
                assert (dab == 0) == (a == b)
            for a, b, c in product(tuples[:10], tuples[:10], tuples):
                assert product_metric(S, a, c) <= product_metric(S, a, b) + product_metric(S, b, c)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 6))
def test_covering_radius_is_antitone(seed, n):
    S = random_structure(seed, n)
    subsets = [set(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    for A in subsets[:12]:
        for B in subsets:
            if A <= B:
                assert covering_radius(S, B) <= covering_radius(S, A)
    assert covering_radius(S, range(n)) == 0


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 5),
       num=st.integers(1, 9), den=st.integers(1, 9))
def test_scaling_roundtrip_and_validity(seed, n, num, den):
    S = random_structure(seed, n, {"R": 2, "U": 1})
    lam = Fraction(num, den)
    assert validate_structure(S).ok
    assert scale_metric(scale_metric(S, lam), 1 / lam) == S
    assert validate_structure(scale_metric(S, lam)).ok


def test_structure_equality_ignores_relation_insertion_order():
    a = MetricStructure(["x"], [[0]], {"A": (1, [(0,)]), "B": (1, [])})
    b = MetricStructure(["x"], [[0]], {"B": (1, []), "A": (1, [(0,)])})
    assert a == b
