"""Truncated Hilbert-cube coordinates for finite metric structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .core import MetricStructure, Relation, StructureError, as_fraction, scale_metric

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class CubePoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(as_fraction(x) for x in self.coords)
        if any(not 0 <= x <= 1 for x in coords):
            raise StructureError(f"cube coordinates must lie in [0, 1]: {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class EmbeddedStructure:
    """Points given by cube coordinates; relation tuples index into ``points``."""

    points: tuple[CubePoint, ...]
    relations: Mapping[str, Relation] = field(default_factory=dict)

    __hash__ = None


def kuratowski_embed(S: MetricStructure, k: int) -> list[CubePoint]:
    """Point i goes to (d(x_i, x_1), ..., d(x_i, x_k)), cycling through the points past n."""
    if S.diameter() > 1:
        raise StructureError(f"diameter {S.diameter()} exceeds 1; rescale with scale_metric first")
    if k < S.n:
        raise StructureError(f"truncation {k} is shorter than the {S.n} points")
    return [CubePoint(tuple(S.metric[i][m % S.n] for m in range(k))) for i in range(S.n)]


def cube_metric(a: CubePoint, b: CubePoint) -> Fraction:
    """sum over n >= 1 of |a_n - b_n| / 2^n, on the truncation."""
    if a.dim != b.dim:
        raise StructureError(f"dimensions differ: {a.dim} != {b.dim}")
    return sum((abs(x - y) / 2 ** n for n, (x, y) in enumerate(zip(a.coords, b.coords), start=1)),
               Fraction(0))


def iota(a: CubePoint) -> CubePoint:
    """Coordinatewise x -> x/2 + 1/4, squeezing the cube into [1/4, 3/4]."""
    return CubePoint(tuple(x / 2 + QUARTER for x in a.coords))


def iota_structure(E: EmbeddedStructure) -> EmbeddedStructure:
    # tuples refer to points by position, so they carry over unchanged
    return EmbeddedStructure(tuple(iota(p) for p in E.points), dict(E.relations))


def embedded(S: MetricStructure, k: int) -> EmbeddedStructure:
    return EmbeddedStructure(tuple(kuratowski_embed(S, k)), dict(S.relations))


def sup_distance(a: CubePoint, b: CubePoint, first: int | None = None) -> Fraction:
    coords = list(zip(a.coords, b.coords))[:first]
    return max((abs(x - y) for x, y in coords), default=Fraction(0))


def unit_diameter(S: MetricStructure) -> MetricStructure:
    """S rescaled so its diameter is at most 1 (unchanged if already so)."""
    diam = S.diameter()
    return S if diam <= 1 else scale_metric(S, 1 / diam)

