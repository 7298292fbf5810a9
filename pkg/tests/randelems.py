"""Seeded random element generators for every ring, shared across tests."""

from __future__ import annotations

import random

from bredon2.expr import RingId, ring_spec
from bredon2.motivic import (
    BC2Mono,
    CFieldMono,
    EC2MotMono,
    FreeMono,
    TildeMotMono,
    TorMono,
)
from bredon2.point import EC2TopMono, PtMono, TildeTopMono, TopBC2Mono


def random_pt_mono(rng: random.Random) -> PtMono:
    return PtMono(rng.random() < 0.5, rng.randrange(7), rng.randrange(7))


def random_mono(ring: RingId, rng: random.Random):
    kind = ring.kind
    if kind == "pt":
        return random_pt_mono(rng)
    if kind == "ec2top":
        return EC2TopMono(rng.randrange(7), rng.randrange(-6, 7))
    if kind == "tildetop":
        return TildeTopMono(rng.randrange(-6, 7), rng.randrange(7))
    if kind == "b":
        return TildeTopMono(rng.randrange(-6, 7), rng.randrange(2 * ring.index))
    if kind == "motivic":
        if rng.random() < 0.5:
            e = rng.randrange(4)
            g = 0 if e else rng.randrange(4)
            return FreeMono(random_pt_mono(rng), e, rng.randrange(4), g)
        i = rng.randrange(1, 5)
        return TorMono(
            i, rng.randrange(1, 5), rng.randrange(-4, 5), rng.randrange(2 * i)
        )
    if kind == "ec2mot":
        return EC2MotMono(
            random_pt_mono(rng), rng.randrange(-4, 5), rng.randrange(4)
        )
    if kind == "tildemot":
        i = rng.randrange(1, 5)
        return TildeMotMono(
            i, rng.randrange(-4, 5), rng.randrange(-4, 5), rng.randrange(2 * i)
        )
    if kind == "bc2":
        return BC2Mono(rng.randrange(6), rng.randrange(2), rng.randrange(6))
    if kind == "cfield":
        return CFieldMono(rng.randrange(9))
    if kind == "topbc2":
        return TopBC2Mono(rng.randrange(9))
    raise ValueError(kind)


def random_element(ring: RingId, rng: random.Random, max_terms: int = 3):
    spec = ring_spec(ring)
    monos = [random_mono(ring, rng) for _ in range(rng.randrange(max_terms + 1))]
    return spec.element_of(monos)
