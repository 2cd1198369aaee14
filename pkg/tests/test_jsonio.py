import json
from fractions import Fraction

from cmstruct.bilipschitz import LipZetaPattern, canonical_pattern
from cmstruct.core import Relation, discrete_structure
from cmstruct.corpus import random_structure
from cmstruct.embeddings import CubePoint
from cmstruct.groups import quaternion
from cmstruct.heaps import heap_from_group
from cmstruct.jsonio import (
    boolean_from_json,
    boolean_to_json,
    cube_points_to_json,
    dumps,
    fmt,
    group_from_json,
    group_to_json,
    heap_from_json,
    heap_to_json,
    pattern_from_json,
    pattern_to_json,
    structure_from_json,
    structure_to_json,
)
from cmstruct.stone import clopen_algebra


def through_text(obj):
    return json.loads(dumps(obj))


def test_fmt():
    assert fmt(Fraction(3)) == "3"
    assert fmt(Fraction(-2, 6)) == "-1/3"


def test_structure_roundtrip():
    for seed in range(10):
        S = random_structure(seed, 1 + seed % 5, {"R": 2, "U": 1}, denominator=3)
        assert structure_from_json(through_text(structure_to_json(S))) == S


def test_group_and_heap_roundtrip():
    G = quaternion()
    assert group_from_json(through_text(group_to_json(G))) == G
    H = heap_from_group(G)
    assert heap_from_json(through_text(heap_to_json(H))) == H


def test_boolean_roundtrip():
    M = discrete_structure(3, {"R": Relation(2, frozenset({(0, 1), (2, 2)}))})
    A = clopen_algebra(M)
    assert boolean_from_json(through_text(boolean_to_json(A))) == A


def test_pattern_roundtrip():
    S = random_structure(4, 4, {"R": 2})
    z = canonical_pattern(S)
    assert pattern_from_json(through_text(pattern_to_json(z))) == z
    loose = LipZetaPattern(2, {"R": {(0, 1)}}, (None, Fraction(1, 2)))
    assert pattern_from_json(through_text(pattern_to_json(loose))) == loose


def test_cube_points_are_strings():
    assert cube_points_to_json([CubePoint((0, Fraction(1, 4)))]) == [["0", "1/4"]]


def test_dumps_is_deterministic():
    S = random_structure(1, 3, {"R": 2})
    assert dumps(structure_to_json(S)) == dumps(structure_to_json(S))
