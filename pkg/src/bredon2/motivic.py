"""The quadruply-graded motivic rings over the complex point.

The full ring splits into a free summand and a torsion summand:

* free monomials ``x * xi^e * tau_s^f * mu^g`` with ``x`` a point-ring
  monomial and ``min(e, g) = 0``; the relation ``xi * mu = u^2`` is kept
  fully reduced, so each (degree, weight) holds at most one monomial.
* torsion monomials ``(theta a^m u^{-n}) * mu^i / tau_s^j`` with
  ``i, j >= 1`` and ``n <= 2i - 1``; the block coordinate lives in ``B_i``
  and the pair ``(i, j)`` records the weight ``i - (i + j) * sigma``.

Products between the summands act on block coordinates: ``mu`` includes
``B_i`` into ``B_{i+1}``, ``xi`` is the ``u^2``-map down to ``B_{i-1}``,
``a`` and ``u`` act as in the tilde module, and ``tau_s`` lowers the inverse
exponent ``j``.  When ``j`` reaches zero the class crosses into the free
summand through the block-to-point map (positive ``a``-exponents die).
Products of two torsion monomials vanish.

The same block coordinates, with an unconstrained ``tau_s`` exponent, make
up the motivic cohomology of the tilde space; and the free-locus ring is
``M[xi^{+-1}, tau_s]``.  Finally the motivic cohomology of the classifying
space is ``Z/2[tau][e1, e2]`` modulo ``e1^2 = e2 * tau``, graded by integer
bidegrees, with distinguished embedding into the free-locus ring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import mutations
from .grading import MotDegree, RO2Degree
from .point import (
    PT_ONE,
    InhomogeneousError,
    PtElem,
    PtMono,
    _pt_mono_mul,
    neg_image,
    parity,
    pt_basis,
    u2_step,
)

__all__ = [
    "FreeMono",
    "TorMono",
    "MotElem",
    "EC2MotMono",
    "EC2MotElem",
    "TildeMotMono",
    "TildeMotElem",
    "BC2Mono",
    "BC2Elem",
    "CFieldMono",
    "CFieldElem",
    "free_mono",
    "mot_mul",
    "mot_basis",
    "mot_gen",
    "mot_from_pt",
    "ec2mot_mul",
    "ec2mot_basis",
    "restrict_to_ec2",
    "tildemot_act",
    "tildemot_basis",
    "tilde_to_mot",
    "bc2_mul",
    "bc2_dim",
    "bc2_basis",
    "bc2_to_ec2mot",
    "cfield_mul",
    "cfield_basis",
]


# ---------------------------------------------------------------------------
# Monomials of the full ring
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FreeMono:
    """``x * xi^e * tau_s^f * mu^g`` in reduced form (``min(e, g) = 0``)."""

    x: PtMono
    e: int
    f: int
    g: int

    def __post_init__(self) -> None:
        if self.e < 0 or self.f < 0 or self.g < 0:
            raise ValueError("free monomial exponents must be >= 0")
        if min(self.e, self.g) != 0:
            raise ValueError("free monomial not reduced: min(e, g) != 0")

    def degree(self) -> MotDegree:
        d = self.x.degree()
        return MotDegree(
            RO2Degree(d.a - 2 * self.e, d.p + 2 * self.e),
            RO2Degree(self.g - self.e, self.e + self.f - self.g),
        )


@dataclass(frozen=True, slots=True)
class TorMono:
    """``(theta a^m u^{-n}) * mu^i / tau_s^j`` with ``i, j >= 1``."""

    i: int
    j: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError("torsion monomial needs i >= 1 and j >= 1")
        if not 0 <= self.n <= 2 * self.i - 1:
            raise ValueError(f"n > 2i-1 in B_i (n={self.n}, i={self.i})")

    def degree(self) -> MotDegree:
        return MotDegree(
            RO2Degree(2 + self.n, self.m - self.n - 2),
            RO2Degree(self.i, -(self.i + self.j)),
        )


Mono = Union[FreeMono, TorMono]

MOT_ONE = FreeMono(PT_ONE, 0, 0, 0)


def free_mono(x: Optional[PtMono], e: int, f: int, g: int) -> Optional[FreeMono]:
    """Build a free monomial, reducing ``xi*mu -> u^2``; None if it dies."""
    if x is None:
        return None
    k = min(e, g)
    if k:
        x = _pt_mono_mul(x, PtMono.positive(0, 2 * k))
        if x is None:
            return None
        e -= k
        g -= k
    return FreeMono(x, e, f, g)


@dataclass(frozen=True, slots=True)
class MotElem:
    free: frozenset[FreeMono]
    tor: frozenset[TorMono]

    @classmethod
    def zero(cls) -> "MotElem":
        return cls(frozenset(), frozenset())

    @classmethod
    def one(cls) -> "MotElem":
        return cls(frozenset({MOT_ONE}), frozenset())

    @classmethod
    def of(cls, *monos: Mono) -> "MotElem":
        terms = parity(monos)
        return cls(
            frozenset(m for m in terms if isinstance(m, FreeMono)),
            frozenset(m for m in terms if isinstance(m, TorMono)),
        )

    def monomials(self) -> frozenset[Mono]:
        return self.free | self.tor

    def is_zero(self) -> bool:
        return not self.free and not self.tor

    def degree(self) -> MotDegree:
        degs = {m.degree() for m in self.monomials()}
        if len(degs) != 1:
            raise InhomogeneousError("element is not homogeneous")
        return degs.pop()

    def __add__(self, other: "MotElem") -> "MotElem":
        return MotElem(self.free ^ other.free, self.tor ^ other.tor)

    def __mul__(self, other: "MotElem") -> "MotElem":
        return mot_mul(self, other)


def mot_from_pt(x: PtElem) -> MotElem:
    return MotElem.of(*(FreeMono(m, 0, 0, 0) for m in x.monos))


_GEN_EXPONENTS = {"xi": (1, 0, 0), "tau_s": (0, 1, 0), "mu": (0, 0, 1)}


def mot_gen(name: str) -> MotElem:
    """The generators ``xi``, ``tau_s``, ``mu``, ``a``, ``u``, ``theta``."""
    if name in _GEN_EXPONENTS:
        e, f, g = _GEN_EXPONENTS[name]
        return MotElem.of(FreeMono(PT_ONE, e, f, g))
    if name == "a":
        return MotElem.of(FreeMono(PtMono.positive(1, 0), 0, 0, 0))
    if name == "u":
        return MotElem.of(FreeMono(PtMono.positive(0, 1), 0, 0, 0))
    if name == "theta":
        return MotElem.of(FreeMono(PtMono.negative(0, 0), 0, 0, 0))
    raise ValueError(f"unknown generator {name!r}")


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------


def _mul_free_free(x: FreeMono, y: FreeMono) -> Optional[FreeMono]:
    return free_mono(
        _pt_mono_mul(x.x, y.x), x.e + y.e, x.f + y.f, x.g + y.g
    )


def _block_coords(
    x: FreeMono, i: int, m: int, n: int
) -> Optional[tuple[int, int, int]]:
    """Act by the point/xi/mu part of ``x`` on block coordinates.

    Applies, in order: the inclusion for each power of ``mu``, the
    ``u^2``-map for each power of ``xi``, then the ``a`` and ``u`` actions.
    For the true rules the order does not matter.
    """
    if x.x.neg:
        return None
    i += x.g
    for _ in range(x.e):
        step = u2_step(i, n)
        if step is None:
            return None
        i, n = step
    n -= x.x.n
    if n < 0:
        return None
    m += x.x.m
    return i, m, n


def _mul_free_tor(x: FreeMono, t: TorMono) -> Optional[Mono]:
    coords = _block_coords(x, t.i, t.m, t.n)
    if coords is None:
        return None
    i, m, n = coords
    j = t.j - x.f
    if j >= 1:
        return TorMono(i, j, m, n)
    pm = neg_image(m, n)
    return free_mono(pm, 0, -j, i)


def _mul_tor_tor(s: TorMono, t: TorMono) -> Optional[TorMono]:
    if mutations.active(mutations.TORSION_PRODUCT):
        return TorMono(s.i + t.i, s.j + t.j, s.m + t.m, s.n + t.n)
    return None


def mot_mul(x: MotElem, y: MotElem) -> MotElem:
    """Product in the full motivic ring."""
    terms: Counter[Mono] = Counter()

    def put(mono: Optional[Mono]) -> None:
        if mono is not None:
            terms[mono] += 1

    for xf in x.free:
        for yf in y.free:
            put(_mul_free_free(xf, yf))
        for yt in y.tor:
            put(_mul_free_tor(xf, yt))
    for xt in x.tor:
        for yf in y.free:
            put(_mul_free_tor(yf, xt))
        for yt in y.tor:
            put(_mul_tor_tor(xt, yt))
    return MotElem.of(*(m for m, c in terms.items() for _ in range(c % 2)))


def mot_basis(d: MotDegree) -> list[Mono]:
    """Normal-form monomials in one (degree, weight); at most one exists."""
    a, p = d.deg.a, d.deg.p
    b, q = d.wt.a, d.wt.p
    out: list[Mono] = []
    if b + q >= 0:
        e, g = max(-b, 0), max(b, 0)
        for x in pt_basis(RO2Degree(a + 2 * e, p - 2 * e)):
            out.append(FreeMono(x, e, b + q, g))
    elif b >= 1:
        n = a - 2
        if 0 <= n <= 2 * b - 1:
            out.append(TorMono(b, -(b + q), p + a, n))
    return out


# ---------------------------------------------------------------------------
# The free locus: M[xi^{+-1}, tau_s]
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class EC2MotMono:
    """``x * xi^e * tau_s^f`` with ``xi`` invertible."""

    x: PtMono
    e: int
    f: int

    def __post_init__(self) -> None:
        if self.f < 0:
            raise ValueError("tau_s exponent must be >= 0")

    def degree(self) -> MotDegree:
        d = self.x.degree()
        return MotDegree(
            RO2Degree(d.a - 2 * self.e, d.p + 2 * self.e),
            RO2Degree(-self.e, self.e + self.f),
        )


@dataclass(frozen=True, slots=True)
class EC2MotElem:
    monos: frozenset[EC2MotMono]

    @classmethod
    def zero(cls) -> "EC2MotElem":
        return cls(frozenset())

    @classmethod
    def one(cls) -> "EC2MotElem":
        return cls(frozenset({EC2MotMono(PT_ONE, 0, 0)}))

    @classmethod
    def of(cls, *monos: EC2MotMono) -> "EC2MotElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> MotDegree:
        degs = {m.degree() for m in self.monos}
        if len(degs) != 1:
            raise InhomogeneousError("element is not homogeneous")
        return degs.pop()

    def __add__(self, other: "EC2MotElem") -> "EC2MotElem":
        return EC2MotElem(self.monos ^ other.monos)

    def __mul__(self, other: "EC2MotElem") -> "EC2MotElem":
        return ec2mot_mul(self, other)


def ec2mot_mul(x: EC2MotElem, y: EC2MotElem) -> EC2MotElem:
    out = []
    for s in x.monos:
        for t in y.monos:
            pm = _pt_mono_mul(s.x, t.x)
            if pm is not None:
                out.append(EC2MotMono(pm, s.e + t.e, s.f + t.f))
    return EC2MotElem(parity(out))


def ec2mot_basis(d: MotDegree) -> list[EC2MotMono]:
    b, q = d.wt.a, d.wt.p
    if b + q < 0:
        return []
    e = -b
    shifted = RO2Degree(d.deg.a + 2 * e, d.deg.p - 2 * e)
    return [EC2MotMono(x, e, b + q) for x in pt_basis(shifted)]


def restrict_to_ec2(x: MotElem) -> EC2MotElem:
    """Restriction to the free locus; ``mu`` becomes ``u^2 / xi``."""
    out = []
    for mono in x.free:
        pm = _pt_mono_mul(mono.x, PtMono.positive(0, 2 * mono.g))
        if pm is not None:
            out.append(EC2MotMono(pm, mono.e - mono.g, mono.f))
    return EC2MotElem(parity(out))


# ---------------------------------------------------------------------------
# The tilde space: blocks with free tau_s exponent
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TildeMotMono:
    """``(theta a^m u^{-n}) * mu^i * tau_s^j`` with ``i >= 1``, any ``j``."""

    i: int
    j: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError("block index i must be >= 1")
        if not 0 <= self.n <= 2 * self.i - 1:
            raise ValueError(f"n > 2i-1 in B_i (n={self.n}, i={self.i})")

    def degree(self) -> MotDegree:
        return MotDegree(
            RO2Degree(2 + self.n, self.m - self.n - 2),
            RO2Degree(self.i, self.j - self.i),
        )


@dataclass(frozen=True, slots=True)
class TildeMotElem:
    monos: frozenset[TildeMotMono]

    @classmethod
    def zero(cls) -> "TildeMotElem":
        return cls(frozenset())

    @classmethod
    def of(cls, *monos: TildeMotMono) -> "TildeMotElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def degree(self) -> MotDegree:
        degs = {m.degree() for m in self.monos}
        if len(degs) != 1:
            raise InhomogeneousError("element is not homogeneous")
        return degs.pop()

    def __add__(self, other: "TildeMotElem") -> "TildeMotElem":
        return TildeMotElem(self.monos ^ other.monos)


def tildemot_basis(d: MotDegree) -> list[TildeMotMono]:
    b, q = d.wt.a, d.wt.p
    if b < 1:
        return []
    n = d.deg.a - 2
    if not 0 <= n <= 2 * b - 1:
        return []
    return [TildeMotMono(b, q + b, d.deg.p + d.deg.a, n)]


def _act_tilde_mono(x: FreeMono, t: TildeMotMono) -> Optional[TildeMotMono]:
    coords = _block_coords(x, t.i, t.m, t.n)
    if coords is None:
        return None
    i, m, n = coords
    return TildeMotMono(i, t.j + x.f, m, n)


def tildemot_act(x: MotElem, t: TildeMotElem) -> TildeMotElem:
    """Module action of the full ring; torsion classes act by zero."""
    return TildeMotElem(
        parity(
            _act_tilde_mono(xm, tm) for xm in x.free for tm in t.monos
        )
    )


def tilde_to_mot(t: TildeMotElem) -> MotElem:
    """The map induced by collapsing the free locus.

    Negative ``tau_s`` exponents land in the torsion summand unchanged;
    nonnegative ones cross into the free summand through the block-to-point
    map.
    """
    out: list[Optional[Mono]] = []
    for mono in t.monos:
        if mono.j <= -1:
            out.append(TorMono(mono.i, -mono.j, mono.m, mono.n))
        else:
            out.append(free_mono(neg_image(mono.m, mono.n), 0, mono.j, mono.i))
    return MotElem.of(*(m for m in parity(out)))


# ---------------------------------------------------------------------------
# The classifying space: Z/2[tau][e1, e2] / (e1^2 = e2 tau)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class BC2Mono:
    """``tau^k * e1^eps * e2^m2`` in normal form (``eps`` is 0 or 1)."""

    k: int
    eps: int
    m2: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.m2 < 0:
            raise ValueError("exponents must be >= 0")
        if self.eps not in (0, 1):
            raise ValueError("e1 exponent must be 0 or 1 in normal form")

    def bidegree(self) -> tuple[int, int]:
        return (self.eps + 2 * self.m2, self.eps + self.m2 + self.k)


@dataclass(frozen=True, slots=True)
class BC2Elem:
    monos: frozenset[BC2Mono]

    @classmethod
    def zero(cls) -> "BC2Elem":
        return cls(frozenset())

    @classmethod
    def one(cls) -> "BC2Elem":
        return cls(frozenset({BC2Mono(0, 0, 0)}))

    @classmethod
    def of(cls, *monos: BC2Mono) -> "BC2Elem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def __add__(self, other: "BC2Elem") -> "BC2Elem":
        return BC2Elem(self.monos ^ other.monos)

    def __mul__(self, other: "BC2Elem") -> "BC2Elem":
        return bc2_mul(self, other)


def bc2_normalize(k: int, e1: int, m2: int) -> BC2Mono:
    """Rewrite ``e1^2 -> tau * e2`` until the ``e1`` exponent is 0 or 1."""
    pairs, eps = divmod(e1, 2)
    return BC2Mono(k + pairs, eps, m2 + pairs)


def bc2_mul(x: BC2Elem, y: BC2Elem) -> BC2Elem:
    return BC2Elem(
        parity(
            bc2_normalize(s.k + t.k, s.eps + t.eps, s.m2 + t.m2)
            for s in x.monos
            for t in y.monos
        )
    )


def bc2_basis(a: int, b: int) -> list[BC2Mono]:
    if a < 0:
        return []
    eps = a % 2
    m2 = (a - eps) // 2
    k = b - eps - m2
    if k < 0:
        return []
    return [BC2Mono(k, eps, m2)]


def bc2_dim(a: int, b: int) -> int:
    """Dimension in bidegree ``(a, b)``: one iff ``0 <= a <= 2b``."""
    return len(bc2_basis(a, b))


def bc2_to_ec2mot(x: BC2Elem) -> EC2MotElem:
    """The embedding ``e1 -> a u tau_s / xi``, ``e2 -> a^2 tau_s / xi``,
    ``tau -> u^2 tau_s / xi``."""
    out = []
    for mono in x.monos:
        w = mono.k + mono.eps + mono.m2
        out.append(
            EC2MotMono(
                PtMono.positive(mono.eps + 2 * mono.m2, mono.eps + 2 * mono.k),
                -w,
                w,
            )
        )
    return EC2MotElem(parity(out))


# ---------------------------------------------------------------------------
# Motivic cohomology of the complex point: Z/2[tau]
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CFieldMono:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("tau exponent must be >= 0")

    def bidegree(self) -> tuple[int, int]:
        return (0, self.k)


@dataclass(frozen=True, slots=True)
class CFieldElem:
    monos: frozenset[CFieldMono]

    @classmethod
    def zero(cls) -> "CFieldElem":
        return cls(frozenset())

    @classmethod
    def of(cls, *monos: CFieldMono) -> "CFieldElem":
        return cls(parity(monos))

    def is_zero(self) -> bool:
        return not self.monos

    def __add__(self, other: "CFieldElem") -> "CFieldElem":
        return CFieldElem(self.monos ^ other.monos)

    def __mul__(self, other: "CFieldElem") -> "CFieldElem":
        return cfield_mul(self, other)


def cfield_mul(x: CFieldElem, y: CFieldElem) -> CFieldElem:
    return CFieldElem(
        parity(CFieldMono(s.k + t.k) for s in x.monos for t in y.monos)
    )


def cfield_basis(a: int, b: int) -> list[CFieldMono]:
    return [CFieldMono(b)] if a == 0 and b >= 0 else []
