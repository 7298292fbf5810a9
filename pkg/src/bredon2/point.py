"""The RO(C2)-graded topological rings and the maps between them.

Everything here is an algebra or module over GF(2), so an element is just a
finite set of basis monomials and addition is symmetric difference.  The
objects are:

* the point ring ``M``: a polynomial cone ``Z/2[a, u]`` with ``|a| = sigma``
  and ``|u| = -1 + sigma``, plus a "negative cone" spanned by the monomials
  ``theta/(a^m u^n)``.  Products of two negative-cone elements vanish, and
  the polynomial cone acts on the negative cone by shifting exponents down,
  killing anything that would leave the cone.
* the free-locus ring ``Z/2[a, u^{+-1}]``; the point ring maps to it by
  inverting ``u`` (the negative cone dies).
* the tilde module: the shift by ``2 - 2*sigma`` of ``Z/2[a^{+-1}, u^{-1}]``,
  an ``M``-module written in the monomials ``theta * a^m * u^{-n}``.  It
  maps onto the negative cone by ``theta a^m u^{-n} -> theta/(a^{-m} u^n)``
  for ``m <= 0`` and by zero otherwise.
* the truncated blocks ``B_i``: the quotient of the tilde module by
  ``u^{-2i}``, so exactly the monomials with ``n <= 2i - 1``.  ``B_0 = 0``.
* the singular cohomology ``Z/2[x]`` of the classifying space, used as the
  realization target for integral bidegrees.

In every fixed degree each of these objects has dimension at most one, which
keeps basis enumeration and exactness bookkeeping entirely combinatorial.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TypeVar

from . import mutations
from .grading import RO2Degree

__all__ = [
    "PtMono",
    "PtElem",
    "EC2TopMono",
    "EC2TopElem",
    "TildeTopMono",
    "TildeTopElem",
    "BElem",
    "TopBC2Mono",
    "TopBC2Elem",
    "InhomogeneousError",
    "parity",
    "pt_mul",
    "pt_basis",
    "ec2top_mul",
    "ec2top_basis",
    "localize",
    "tilde_to_pt",
    "pt_act_tilde",
    "tildetop_basis",
    "b_incl",
    "b_mul_u2",
    "b_quot",
    "b_to_pt",
    "b_basis",
    "topbc2_mul",
    "topbc2_basis",
    "basis_at",
    "neg_image",
    "u2_step",
]

M = TypeVar("M")


class InhomogeneousError(ValueError):
    """Raised when a degree is requested for an inhomogeneous element."""


def parity(monos: Iterable[Optional[M]]) -> frozenset[M]:
    """GF(2) sum: keep the monomials occurring an odd number of times."""
    counts: Counter[M] = Counter(m for m in monos if m is not None)
    return frozenset(m for m, c in counts.items() if c % 2 == 1)


def _common_degree(monos: Iterable[M]) -> RO2Degree:
    degs = {m.degree() for m in monos}  # type: ignore[attr-defined]
    if len(degs) != 1:
        raise InhomogeneousError("element is not homogeneous")
    return degs.pop()


# ---------------------------------------------------------------------------
# The point ring M
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PtMono:
    """``a^m u^n`` when ``neg`` is false, ``theta/(a^m u^n)`` when true."""

    neg: bool
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("point monomial exponents must be >= 0")

    @classmethod
    def positive(cls, m: int, n: int) -> "PtMono":
        return cls(False, m, n)

    @classmethod
    def negative(cls, m: int, n: int) -> "PtMono":
        return cls(True, m, n)

    def degree(self) -> RO2Degree:
        if self.neg:
            return RO2Degree(2 + self.n, -2 - self.m - self.n)
        return RO2Degree(-self.n, self.m + self.n)


PT_ONE = PtMono.positive(0, 0)
PT_THETA = PtMono.negative(0, 0)


@dataclass(frozen=True, slots=True)
class PtElem:
    monos: frozenset[PtMono]

    @classmethod
    def zero(cls) -> "PtElem":
        return cls(frozenset())

    @classmethod
    def one(cls) -> "PtElem":
        return cls(frozenset({PT_ONE}))

    @classmethod
    def of(cls, *monos: PtMono) -> "PtElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> RO2Degree:
        return _common_degree(self.monos)

    def __add__(self, other: "PtElem") -> "PtElem":
        return PtElem(self.monos ^ other.monos)

    def __mul__(self, other: "PtElem") -> "PtElem":
        return pt_mul(self, other)


def _pt_mono_mul(x: PtMono, y: PtMono) -> Optional[PtMono]:
    if x.neg and y.neg:
        return None
    if not x.neg and not y.neg:
        return PtMono.positive(x.m + y.m, x.n + y.n)
    pos, neg = (x, y) if y.neg else (y, x)
    if neg.m >= pos.m and neg.n >= pos.n:
        return PtMono.negative(neg.m - pos.m, neg.n - pos.n)
    return None


def pt_mul(x: PtElem, y: PtElem) -> PtElem:
    """Product in the point ring, bilinear over GF(2)."""
    return PtElem(parity(_pt_mono_mul(a, b) for a in x.monos for b in y.monos))


def pt_basis(d: RO2Degree) -> list[PtMono]:
    """The zero- or one-element monomial basis of ``M`` in degree ``d``."""
    out = []
    if d.a <= 0 and d.p >= -d.a:
        out.append(PtMono.positive(d.p + d.a, -d.a))
    if d.a >= 2 and d.p <= -d.a:
        out.append(PtMono.negative(-d.p - d.a, d.a - 2))
    return out


# ---------------------------------------------------------------------------
# The free-locus ring Z/2[a, u^{+-1}]
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class EC2TopMono:
    """``a^m u^n`` with ``u`` invertible."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("a-exponent must be >= 0")

    def degree(self) -> RO2Degree:
        return RO2Degree(-self.n, self.m + self.n)


@dataclass(frozen=True, slots=True)
class EC2TopElem:
    monos: frozenset[EC2TopMono]

    @classmethod
    def zero(cls) -> "EC2TopElem":
        return cls(frozenset())

    @classmethod
    def of(cls, *monos: EC2TopMono) -> "EC2TopElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> RO2Degree:
        return _common_degree(self.monos)

    def __add__(self, other: "EC2TopElem") -> "EC2TopElem":
        return EC2TopElem(self.monos ^ other.monos)

    def __mul__(self, other: "EC2TopElem") -> "EC2TopElem":
        return ec2top_mul(self, other)


def ec2top_mul(x: EC2TopElem, y: EC2TopElem) -> EC2TopElem:
    return EC2TopElem(
        parity(
            EC2TopMono(a.m + b.m, a.n + b.n) for a in x.monos for b in y.monos
        )
    )


def ec2top_basis(d: RO2Degree) -> list[EC2TopMono]:
    if d.p >= -d.a:
        return [EC2TopMono(d.p + d.a, -d.a)]
    return []


def localize(x: PtElem) -> EC2TopElem:
    """Invert ``u``: the polynomial cone maps across, the negative cone dies."""
    return EC2TopElem(
        parity(
            EC2TopMono(mono.m, mono.n) if not mono.neg else None
            for mono in x.monos
        )
    )


# ---------------------------------------------------------------------------
# The tilde module and its truncated blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TildeTopMono:
    """``theta * a^m * u^{-n}``; ``m`` is any integer, ``n >= 0``."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("inverse u-exponent must be >= 0")

    def degree(self) -> RO2Degree:
        return RO2Degree(2 + self.n, self.m - self.n - 2)


@dataclass(frozen=True, slots=True)
class TildeTopElem:
    monos: frozenset[TildeTopMono]

    @classmethod
    def zero(cls) -> "TildeTopElem":
        return cls(frozenset())

    @classmethod
    def of(cls, *monos: TildeTopMono) -> "TildeTopElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> RO2Degree:
        return _common_degree(self.monos)

    def __add__(self, other: "TildeTopElem") -> "TildeTopElem":
        return TildeTopElem(self.monos ^ other.monos)


def tildetop_basis(d: RO2Degree) -> list[TildeTopMono]:
    if d.a >= 2:
        return [TildeTopMono(d.p + d.a, d.a - 2)]
    return []


def neg_image(m: int, n: int) -> Optional[PtMono]:
    """``theta a^m u^{-n} -> theta/(a^{-m} u^n)``, zero for ``m > 0``.

    This single rule underlies every map landing in the negative cone.
    """
    if m <= 0:
        return PtMono.negative(-m, n)
    if mutations.active(mutations.CROSS_KEEP_POSITIVE):
        return PtMono.negative(0, n)
    return None


def tilde_to_pt(x: TildeTopElem) -> PtElem:
    return PtElem(parity(neg_image(mono.m, mono.n) for mono in x.monos))


def _act_mono(r: PtMono, t: TildeTopMono) -> Optional[TildeTopMono]:
    if r.neg:
        return None
    if t.n - r.n < 0:
        return None
    return TildeTopMono(t.m + r.m, t.n - r.n)


def pt_act_tilde(r: PtElem, t: TildeTopElem) -> TildeTopElem:
    """Module action of the point ring: ``a`` raises ``m``, ``u`` lowers ``n``."""
    return TildeTopElem(
        parity(_act_mono(a, b) for a in r.monos for b in t.monos)
    )


@dataclass(frozen=True, slots=True)
class BElem:
    """Element of the block ``B_index``; ``B_0`` (and below) is zero.

    The index is carried on the element so the maps between neighbouring
    blocks can check and update it.
    """

    index: int
    monos: frozenset[TildeTopMono]

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("block index must be >= 0")
        for mono in self.monos:
            if mono.n > 2 * self.index - 1:
                raise ValueError(f"n > 2i-1 in B_i (n={mono.n}, i={self.index})")

    @classmethod
    def zero(cls, index: int) -> "BElem":
        return cls(index, frozenset())

    @classmethod
    def of(cls, index: int, *monos: TildeTopMono) -> "BElem":
        return cls(index, parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> RO2Degree:
        return _common_degree(self.monos)

    def __add__(self, other: "BElem") -> "BElem":
        if self.index != other.index:
            raise ValueError("cannot add elements of different blocks")
        return BElem(self.index, self.monos ^ other.monos)


def b_basis(index: int, d: RO2Degree) -> list[TildeTopMono]:
    if index >= 1 and 2 <= d.a <= 2 * index + 1:
        return [TildeTopMono(d.p + d.a, d.a - 2)]
    return []


def b_incl(x: BElem) -> BElem:
    """The inclusion ``B_i -> B_{i+1}``; monomials are unchanged."""
    return BElem(x.index + 1, x.monos)


def u2_step(i: int, n: int) -> Optional[tuple[int, int]]:
    """One application of the ``u^2``-map on block coordinates ``(i, n)``.

    Drops to the block below, killing monomials with ``n < 2``; the target
    ``B_0`` is zero.
    """
    if i - 1 < 1:
        return None
    if n >= 2:
        return (i - 1, n - 2)
    if mutations.active(mutations.U2_KEEP_LOW):
        return (i - 1, n)
    return None


def b_mul_u2(x: BElem) -> BElem:
    """Multiplication by ``u^2`` composed with the quotient, ``B_{i+1} -> B_i``."""
    if x.index == 0:
        return BElem.zero(0)
    out = []
    for mono in x.monos:
        step = u2_step(x.index, mono.n)
        if step is not None:
            out.append(TildeTopMono(mono.m, step[1]))
    return BElem(x.index - 1, parity(out))


def b_quot(x: BElem) -> BElem:
    """The quotient ``B_{i+1} -> B_i`` killing the deepest ``u``-powers."""
    if x.index == 0:
        return BElem.zero(0)
    keep = frozenset(m for m in x.monos if m.n <= 2 * (x.index - 1) - 1)
    return BElem(x.index - 1, keep)


def b_to_pt(x: BElem) -> PtElem:
    return PtElem(parity(neg_image(mono.m, mono.n) for mono in x.monos))


# ---------------------------------------------------------------------------
# Singular cohomology of the classifying space, Z/2[x]
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TopBC2Mono:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("exponent must be >= 0")

    def degree(self) -> int:
        return self.k


@dataclass(frozen=True, slots=True)
class TopBC2Elem:
    monos: frozenset[TopBC2Mono]

    @classmethod
    def zero(cls) -> "TopBC2Elem":
        return cls(frozenset())

    @classmethod
    def of(cls, *monos: TopBC2Mono) -> "TopBC2Elem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def __add__(self, other: "TopBC2Elem") -> "TopBC2Elem":
        return TopBC2Elem(self.monos ^ other.monos)

    def __mul__(self, other: "TopBC2Elem") -> "TopBC2Elem":
        return topbc2_mul(self, other)


def topbc2_mul(x: TopBC2Elem, y: TopBC2Elem) -> TopBC2Elem:
    return TopBC2Elem(
        parity(TopBC2Mono(a.k + b.k) for a in x.monos for b in y.monos)
    )


def topbc2_basis(k: int) -> list[TopBC2Mono]:
    return [TopBC2Mono(k)] if k >= 0 else []


# ---------------------------------------------------------------------------
# Uniform basis lookup
# ---------------------------------------------------------------------------


def basis_at(ring: str, d, index: int | None = None) -> list:
    """Enumerate the monomial basis of a topological object in one degree.

    ``ring`` is one of ``pt``, ``ec2top``, ``tildetop``, ``b`` (with
    ``index``) or ``topbc2``; ``d`` is an :class:`RO2Degree` except for
    ``topbc2``, which is graded by a single integer.
    """
    if ring == "pt":
        return pt_basis(d)
    if ring == "ec2top":
        return ec2top_basis(d)
    if ring == "tildetop":
        return tildetop_basis(d)
    if ring == "b":
        if index is None:
            raise ValueError("block basis needs an index")
        return b_basis(index, d)
    if ring == "topbc2":
        return topbc2_basis(d)
    raise ValueError(f"unknown ring {ring!r}")


def degree_iter(a_min: int, a_max: int, p_min: int, p_max: int) -> Iterator[RO2Degree]:
    for a in range(a_min, a_max + 1):
        for p in range(p_min, p_max + 1):
            yield RO2Degree(a, p)
