"""Degree arithmetic for the two gradings used throughout this package.

Topological objects are graded by virtual C2-representations ``a + p*sigma``
(``sigma`` the sign representation); we store these as integer pairs
``(a, p)``.  Motivic objects carry a second such pair, the weight
``b + q*sigma``, giving a grading by four integers ``(a, p, b, q)``.

The weight plane ``(b, q)`` decomposes into four regions.  Writing ``H`` for
the full motivic ring of the complex point:

* ``b >= 0`` and ``b + q >= 0``: ``H`` in this weight is a copy of the
  point ring, detected by topological realization ("point cone").
* ``b >= 1`` and ``b + q < 0``: ``H`` is the truncated block ``B_b`` placed
  there by the torsion summand ("tilde block").
* ``b < 0`` and ``b + q >= 0``: ``H`` agrees with the cohomology of the
  free locus, again a shifted copy of the point ring ("EC2 cone").
* otherwise ``H`` vanishes.

:func:`classify_weight` implements exactly this partition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "RO2Degree",
    "MotDegree",
    "RegionKind",
    "WeightRegion",
    "degree_add",
    "generator_degree",
    "classify_weight",
    "GENERATORS",
]


@dataclass(frozen=True, slots=True)
class RO2Degree:
    """A virtual representation ``a + p*sigma``."""

    a: int
    p: int

    def __add__(self, other: "RO2Degree") -> "RO2Degree":
        return RO2Degree(self.a + other.a, self.p + other.p)

    def __sub__(self, other: "RO2Degree") -> "RO2Degree":
        return RO2Degree(self.a - other.a, self.p - other.p)

    def __neg__(self) -> "RO2Degree":
        return RO2Degree(-self.a, -self.p)

    def scaled(self, k: int) -> "RO2Degree":
        return RO2Degree(k * self.a, k * self.p)

    def __str__(self) -> str:
        return f"({self.a},{self.p})"


ZERO2 = RO2Degree(0, 0)


@dataclass(frozen=True, slots=True)
class MotDegree:
    """A cohomological degree together with a weight."""

    deg: RO2Degree
    wt: RO2Degree

    @classmethod
    def of(cls, a: int, p: int, b: int, q: int) -> "MotDegree":
        return cls(RO2Degree(a, p), RO2Degree(b, q))

    def __add__(self, other: "MotDegree") -> "MotDegree":
        return MotDegree(self.deg + other.deg, self.wt + other.wt)

    def __neg__(self) -> "MotDegree":
        return MotDegree(-self.deg, -self.wt)

    def scaled(self, k: int) -> "MotDegree":
        return MotDegree(self.deg.scaled(k), self.wt.scaled(k))

    def __str__(self) -> str:
        return f"{self.deg}{self.wt}"


def degree_add(x: MotDegree, y: MotDegree) -> MotDegree:
    """Componentwise sum of two motivic degrees."""
    return x + y


#: Degrees of the named multiplicative generators, keyed by their ASCII names.
#: ``a``, ``u``, ``theta`` generate the point ring (weight zero); ``xi``,
#: ``tau_s``, ``mu`` are the motivic generators; ``tau``, ``e1``, ``e2``
#: generate the motivic cohomology of the classifying space BC2, graded by
#: integer bidegrees embedded as ``(a + 0*sigma, b + 0*sigma)``.
GENERATORS: dict[str, MotDegree] = {
    "a": MotDegree.of(0, 1, 0, 0),
    "u": MotDegree.of(-1, 1, 0, 0),
    "theta": MotDegree.of(2, -2, 0, 0),
    "xi": MotDegree.of(-2, 2, -1, 1),
    "tau_s": MotDegree.of(0, 0, 0, 1),
    "mu": MotDegree.of(0, 0, 1, -1),
    "tau": MotDegree.of(0, 0, 1, 0),
    "e1": MotDegree.of(1, 0, 1, 0),
    "e2": MotDegree.of(2, 0, 1, 0),
}


def generator_degree(symbol: str) -> MotDegree:
    """Degree and weight of a named generator.

    Raises ``ValueError`` for unknown symbols.
    """
    try:
        return GENERATORS[symbol]
    except KeyError:
        raise ValueError(f"unknown generator {symbol!r}") from None


class RegionKind(enum.Enum):
    POINT_CONE = "point-cone"
    TILDE_BLOCK = "tilde-block"
    EC2_CONE = "ec2-cone"
    ZERO = "zero"


@dataclass(frozen=True, slots=True)
class WeightRegion:
    """One cell of the weight-plane partition.

    ``index`` is set only for tilde blocks, where it equals the trivial part
    ``b`` of the weight (always >= 1).
    """

    kind: RegionKind
    index: int | None = None

    def letter(self) -> str:
        """Single-character label used by weight-plane charts."""
        if self.kind is RegionKind.POINT_CONE:
            return "M"
        if self.kind is RegionKind.EC2_CONE:
            return "E"
        if self.kind is RegionKind.TILDE_BLOCK:
            return str(self.index) if self.index is not None and self.index < 10 else "B"
        return "."


POINT_CONE = WeightRegion(RegionKind.POINT_CONE)
EC2_CONE = WeightRegion(RegionKind.EC2_CONE)
ZERO_REGION = WeightRegion(RegionKind.ZERO)


def tilde_block(index: int) -> WeightRegion:
    if index < 1:
        raise ValueError("tilde block index must be >= 1")
    return WeightRegion(RegionKind.TILDE_BLOCK, index)


def classify_weight(b: int, q: int) -> WeightRegion:
    """Partition of the weight plane.

    Every pair ``(b, q)`` lands in exactly one region; the ``b = 0``,
    ``q < 0`` column is zero because the block ``B_0`` vanishes.
    """
    if b >= 0 and b + q >= 0:
        return POINT_CONE
    if b >= 1 and b + q < 0:
        return tilde_block(b)
    if b < 0 and b + q >= 0:
        return EC2_CONE
    return ZERO_REGION
