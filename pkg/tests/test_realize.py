import itertools

from bredon2.grading import MotDegree, RO2Degree
from bredon2.motivic import (
    BC2Elem,
    BC2Mono,
    EC2MotElem,
    EC2MotMono,
    FreeMono,
    MotElem,
    TildeMotElem,
    TildeMotMono,
    TorMono,
    bc2_basis,
    bc2_mul,
    ec2mot_basis,
    ec2mot_mul,
    mot_basis,
    mot_gen,
    mot_mul,
    tildemot_basis,
)
from bredon2.point import (
    EC2TopElem,
    EC2TopMono,
    PtElem,
    PtMono,
    TildeTopElem,
    TildeTopMono,
    TopBC2Elem,
    TopBC2Mono,
    ec2top_basis,
    ec2top_mul,
    pt_basis,
    pt_mul,
    topbc2_mul,
)
from bredon2.realize import re_bc2, re_ec2, re_point, re_tilde

P = PtMono.positive
N = PtMono.negative


class TestValues:
    def test_point_generators(self):
        assert re_point(mot_gen("tau_s")) == PtElem.one()
        assert re_point(mot_gen("mu")) == PtElem.one()
        assert re_point(mot_gen("xi")) == PtElem.of(P(0, 2))

    def test_point_torsion(self):
        assert re_point(MotElem.of(TorMono(1, 1, 0, 1))) == PtElem.of(N(0, 1))
        assert re_point(MotElem.of(TorMono(1, 1, 2, 1))).is_zero()

    def test_free_locus(self):
        assert re_ec2(EC2MotElem.of(EC2MotMono(P(0, 0), -1, 0))) == EC2TopElem.of(
            EC2TopMono(0, -2)
        )
        assert re_ec2(EC2MotElem.of(EC2MotMono(N(0, 0), 1, 1))).is_zero()
        assert re_ec2(EC2MotElem.of(EC2MotMono(P(1, 0), 0, 0))) == EC2TopElem.of(
            EC2TopMono(1, 0)
        )

    def test_tilde(self):
        assert re_tilde(TildeMotElem.of(TildeMotMono(1, 0, 2, 0))) == TildeTopElem.of(
            TildeTopMono(2, 0)
        )
        assert re_tilde(TildeMotElem.of(TildeMotMono(3, 5, -1, 4))) == TildeTopElem.of(
            TildeTopMono(-1, 4)
        )
        assert re_tilde(TildeMotElem.zero()).is_zero()

    def test_classifying_space(self):
        assert re_bc2(BC2Elem.of(BC2Mono(0, 1, 0))) == TopBC2Elem.of(TopBC2Mono(1))
        assert re_bc2(BC2Elem.of(BC2Mono(3, 0, 0))) == TopBC2Elem.of(TopBC2Mono(0))
        assert re_bc2(BC2Elem.of(BC2Mono(0, 0, 1))) == TopBC2Elem.of(TopBC2Mono(2))


def small_mot_monomials():
    out = []
    for neg in (False, True):
        for m in (0, 1):
            for n in (0, 1):
                for e in (0, 1, 2):
                    for g in (0, 1, 2):
                        if min(e, g) != 0:
                            continue
                        for f in (0, 1):
                            out.append(MotElem.of(FreeMono(PtMono(neg, m, n), e, f, g)))
    for i in (1, 2):
        for j in (1, 2):
            for m in (-1, 0, 1):
                for n in range(min(2 * i, 3)):
                    out.append(MotElem.of(TorMono(i, j, m, n)))
    return out


class TestHomomorphism:
    def test_point_realization_multiplicative(self):
        monos = small_mot_monomials()
        for x in monos:
            for y in monos:
                assert re_point(mot_mul(x, y)) == pt_mul(re_point(x), re_point(y))

    def test_free_locus_realization_multiplicative(self):
        monos = [
            EC2MotElem.of(EC2MotMono(PtMono(neg, m, n), e, f))
            for neg in (False, True)
            for m in (0, 1)
            for n in (0, 2)
            for e in (-1, 0, 1)
            for f in (0, 1)
        ]
        for x in monos:
            for y in monos:
                assert re_ec2(ec2mot_mul(x, y)) == ec2top_mul(re_ec2(x), re_ec2(y))

    def test_bc2_realization_multiplicative(self):
        monos = [
            BC2Elem.of(BC2Mono(k, e, m)) for k in range(3) for e in (0, 1)
            for m in range(3)
        ]
        for x in monos:
            for y in monos:
                assert re_bc2(bc2_mul(x, y)) == topbc2_mul(re_bc2(x), re_bc2(y))


class TestRegionBehaviour:
    def test_weight_zero_bijection(self):
        for a in range(-8, 9):
            for p in range(-8, 9):
                src = mot_basis(MotDegree.of(a, p, 0, 0))
                dst = pt_basis(RO2Degree(a, p))
                image = [re_point(MotElem.of(m)) for m in src]
                assert len(src) == len(dst)
                assert sorted(str(e.monos) for e in image) == sorted(
                    str(frozenset({m})) for m in dst
                )

    def test_point_cone_bijection(self):
        for b, q in [(0, 0), (1, 0), (2, -1), (0, 3), (3, 2)]:
            for a in range(-6, 7):
                for p in range(-6, 7):
                    src = mot_basis(MotDegree.of(a, p, b, q))
                    dst = pt_basis(RO2Degree(a, p))
                    assert len(src) == len(dst)
                    for mono in src:
                        img = re_point(MotElem.of(mono))
                        assert img.monos == frozenset(dst)

    def test_tilde_block_image(self):
        for b, q in [(1, -2), (2, -3), (3, -4)]:
            for a in range(-6, 7):
                for p in range(-6, 7):
                    src = mot_basis(MotDegree.of(a, p, b, q))
                    image = set()
                    for mono in src:
                        image |= re_point(MotElem.of(mono)).monos
                    want = {
                        m
                        for m in pt_basis(RO2Degree(a, p))
                        if m.neg and m.n <= 2 * b - 1
                    }
                    assert image == want, (a, p, b, q)

    def test_free_locus_iso_and_zero_ranges(self):
        for b in range(-4, 5):
            for q in range(-4, 5):
                if b + q < 0:
                    continue
                for a in range(-6, 7):
                    for p in range(-6, 7):
                        src = ec2mot_basis(MotDegree.of(a, p, b, q))
                        dst = ec2top_basis(RO2Degree(a, p))
                        images = [re_ec2(EC2MotElem.of(m)) for m in src]
                        if a <= 2 * b:
                            assert len(src) == len(dst)
                            for img in images:
                                assert img.monos == frozenset(dst)
                        elif a >= 2 * b + 2:
                            for img in images:
                                assert img.is_zero()

    def test_bc2_bijection_range(self):
        for a in range(-4, 10):
            for b in range(-4, 10):
                src = bc2_basis(a, b)
                if a <= 2 * b:
                    got = [re_bc2(BC2Elem.of(m)) for m in src]
                    assert len(src) == (1 if 0 <= a else 0)
                    for img in got:
                        assert img == TopBC2Elem.of(TopBC2Mono(a))

    def test_tilde_realization_is_weightwise_bijection(self):
        for b in range(1, 5):
            for q in range(-3, 4):
                for a in range(-2, 9):
                    for p in range(-6, 7):
                        src = tildemot_basis(MotDegree.of(a, p, b, q))
                        image = {
                            mo
                            for m in src
                            for mo in re_tilde(TildeMotElem.of(m)).monos
                        }
                        want = {
                            TildeTopMono(p + a, a - 2)
                        } if 2 <= a <= 2 * b + 1 else set()
                        assert image == want
