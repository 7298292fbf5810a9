"""Topological realization of the motivic objects.

On generators: ``tau_s`` and ``mu`` realize to ``1``, ``xi`` to ``u^2``,
``e1`` to the polynomial generator ``x`` (hence ``e2`` to ``x^2`` and
``tau`` to ``1``).  Torsion classes realize through the block-to-point map.
Each map below is total and monomial-wise; where it is an isomorphism or
zero is a statement about degrees, checked by the verification suites.
"""

from __future__ import annotations

from typing import Optional

from .motivic import BC2Elem, EC2MotElem, MotElem, TildeMotElem
from .point import (
    EC2TopElem,
    EC2TopMono,
    PtElem,
    PtMono,
    TildeTopElem,
    TildeTopMono,
    TopBC2Elem,
    TopBC2Mono,
    _pt_mono_mul,
    neg_image,
    parity,
)

__all__ = ["re_point", "re_ec2", "re_tilde", "re_bc2"]


def re_point(x: MotElem) -> PtElem:
    """Realization of the full ring onto the point ring."""
    out: list[Optional[PtMono]] = []
    for mono in x.free:
        out.append(_pt_mono_mul(mono.x, PtMono.positive(0, 2 * mono.e)))
    for mono in x.tor:
        out.append(neg_image(mono.m, mono.n))
    return PtElem(parity(out))


def re_ec2(x: EC2MotElem) -> EC2TopElem:
    """Realization of the free locus; the negative cone dies with ``u``
    inverted."""
    out = []
    for mono in x.monos:
        if not mono.x.neg:
            out.append(EC2TopMono(mono.x.m, mono.x.n + 2 * mono.e))
    return EC2TopElem(parity(out))


def re_tilde(x: TildeMotElem) -> TildeTopElem:
    """Realization of the tilde space: forget the weight coordinates."""
    return TildeTopElem(
        parity(TildeTopMono(mono.m, mono.n) for mono in x.monos)
    )


def re_bc2(x: BC2Elem) -> TopBC2Elem:
    """Realization of the classifying space onto ``Z/2[x]``."""
    return TopBC2Elem(
        parity(TopBC2Mono(mono.eps + 2 * mono.m2) for mono in x.monos)
    )
