import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bredon2.grading import RO2Degree
from bredon2.point import (
    BElem,
    EC2TopElem,
    EC2TopMono,
    InhomogeneousError,
    PtElem,
    PtMono,
    TildeTopElem,
    TildeTopMono,
    b_basis,
    b_incl,
    b_mul_u2,
    b_quot,
    b_to_pt,
    basis_at,
    ec2top_basis,
    ec2top_mul,
    localize,
    pt_act_tilde,
    pt_basis,
    pt_mul,
    tilde_to_pt,
    tildetop_basis,
)

from oracles import block_u2, pt_mul_oracle, tilde_act

P = PtMono.positive
N = PtMono.negative


def as_tagged(elem: PtElem):
    return {("N" if m.neg else "P", m.m, m.n) for m in elem.monos}


pt_monos = st.builds(
    lambda neg, m, n: PtMono(neg, m, n),
    st.booleans(),
    st.integers(0, 8),
    st.integers(0, 8),
)


class TestPointRing:
    def test_polynomial_part(self):
        assert pt_mul(PtElem.of(P(2, 0)), PtElem.of(P(0, 1))) == PtElem.of(P(2, 1))

    def test_action_on_negative_cone(self):
        # a * theta/(a u^2) = theta/u^2
        assert pt_mul(PtElem.of(P(1, 0)), PtElem.of(N(1, 2))) == PtElem.of(N(0, 2))

    def test_action_killing(self):
        # u * theta = 0: the target degree lies outside both cones
        assert pt_mul(PtElem.of(P(0, 1)), PtElem.of(N(0, 0))).is_zero()

    def test_negative_cone_squares_to_zero(self):
        assert pt_mul(PtElem.of(N(0, 0)), PtElem.of(N(0, 0))).is_zero()

    def test_matches_oracle_exhaustively(self):
        monos = [P(m, n) for m in range(4) for n in range(4)]
        monos += [N(m, n) for m in range(4) for n in range(4)]
        for x in monos:
            for y in monos:
                got = pt_mul(PtElem.of(x), PtElem.of(y))
                want = pt_mul_oracle(as_tagged(PtElem.of(x)), as_tagged(PtElem.of(y)))
                assert as_tagged(got) == want, (x, y)

    @settings(max_examples=200)
    @given(pt_monos, pt_monos, pt_monos)
    def test_commutative_associative(self, a, b, c):
        x, y, z = PtElem.of(a), PtElem.of(b), PtElem.of(c)
        assert pt_mul(x, y) == pt_mul(y, x)
        assert pt_mul(pt_mul(x, y), z) == pt_mul(x, pt_mul(y, z))

    @settings(max_examples=100)
    @given(pt_monos, pt_monos, pt_monos)
    def test_distributive(self, a, b, c):
        x, y, z = PtElem.of(a), PtElem.of(b), PtElem.of(c)
        assert pt_mul(x, y + z) == pt_mul(x, y) + pt_mul(x, z)

    def test_unit(self):
        for m in [P(3, 2), N(1, 1)]:
            assert pt_mul(PtElem.one(), PtElem.of(m)) == PtElem.of(m)


class TestPointBasis:
    @pytest.mark.parametrize(
        "deg, expected",
        [
            ((2, -3), [N(1, 0)]),   # theta/a
            ((-1, 1), [P(0, 1)]),   # u
            ((1, 0), []),
            ((0, 0), [P(0, 0)]),
            ((2, -2), [N(0, 0)]),   # theta
            ((5, -5), [N(0, 3)]),   # theta/u^3
            ((-3, 5), [P(2, 3)]),   # a^2 u^3
        ],
    )
    def test_examples(self, deg, expected):
        assert pt_basis(RO2Degree(*deg)) == expected

    def test_two_cone_pattern(self):
        for a in range(-8, 9):
            for p in range(-8, 9):
                dim = len(pt_basis(RO2Degree(a, p)))
                want = 1 if (a <= 0 and p >= -a) or (a >= 2 and p <= -a) else 0
                assert dim == want, (a, p)

    def test_basis_monomials_have_right_degree(self):
        for a in range(-6, 7):
            for p in range(-6, 7):
                for mono in pt_basis(RO2Degree(a, p)):
                    assert mono.degree() == RO2Degree(a, p)


class TestLocalization:
    def test_values(self):
        assert localize(PtElem.of(P(2, 1))) == EC2TopElem.of(EC2TopMono(2, 1))
        assert localize(PtElem.of(N(0, 1))).is_zero()
        assert localize(PtElem.zero()).is_zero()

    def test_ring_homomorphism(self):
        monos = [P(m, n) for m in range(3) for n in range(3)]
        monos += [N(m, n) for m in range(3) for n in range(3)]
        for x in monos:
            for y in monos:
                ex, ey = PtElem.of(x), PtElem.of(y)
                assert localize(pt_mul(ex, ey)) == ec2top_mul(
                    localize(ex), localize(ey)
                )

    def test_ec2top_mul(self):
        u = EC2TopElem.of(EC2TopMono(0, 1))
        uinv = EC2TopElem.of(EC2TopMono(0, -1))
        assert ec2top_mul(u, uinv) == EC2TopElem.of(EC2TopMono(0, 0))
        a = EC2TopElem.of(EC2TopMono(1, 0))
        assert ec2top_mul(a, EC2TopElem.of(EC2TopMono(0, -2))) == EC2TopElem.of(
            EC2TopMono(1, -2)
        )


class TestTildeModule:
    def test_quotient_map_values(self):
        assert tilde_to_pt(TildeTopElem.of(TildeTopMono(-2, 1))) == PtElem.of(N(2, 1))
        assert tilde_to_pt(TildeTopElem.of(TildeTopMono(1, 1))).is_zero()
        assert tilde_to_pt(TildeTopElem.of(TildeTopMono(0, 0))) == PtElem.of(N(0, 0))

    def test_action_values(self):
        # oracle: Laurent multiplication then projection away from positive
        # u-powers
        u = PtElem.of(P(0, 1))
        t = TildeTopElem.of(TildeTopMono(1, 3))
        want = tilde_act({(0, 1)}, {(1, -3)})
        assert want == {(1, -2)}  # frozen: u * theta a u^-3 = theta a u^-2
        assert pt_act_tilde(u, t) == TildeTopElem.of(TildeTopMono(1, 2))

        assert pt_act_tilde(u, TildeTopElem.of(TildeTopMono(0, 0))).is_zero()
        theta = PtElem.of(N(0, 0))
        assert pt_act_tilde(theta, TildeTopElem.of(TildeTopMono(0, 1))).is_zero()

    def test_action_matches_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            r = P(rng.randrange(4), rng.randrange(4))
            t = TildeTopMono(rng.randrange(-4, 5), rng.randrange(6))
            got = pt_act_tilde(PtElem.of(r), TildeTopElem.of(t))
            want = tilde_act({(r.m, r.n)}, {(t.m, -t.n)})
            assert {(m.m, -m.n) for m in got.monos} == want

    def test_module_linearity_over_quotient(self):
        # tilde_to_pt(r . t) = r * tilde_to_pt(t)
        monos = [P(m, n) for m in range(3) for n in range(3)]
        monos += [N(m, n) for m in range(2) for n in range(2)]
        tildes = [TildeTopMono(m, n) for m in range(-3, 4) for n in range(4)]
        for r in monos:
            rel = PtElem.of(r)
            if r.neg:
                # negative-cone elements act by zero on the tilde module
                for t in tildes:
                    assert pt_act_tilde(rel, TildeTopElem.of(t)).is_zero()
                continue
            for t in tildes:
                tel = TildeTopElem.of(t)
                assert tilde_to_pt(pt_act_tilde(rel, tel)) == pt_mul(
                    rel, tilde_to_pt(tel)
                )


class TestBlocks:
    def test_inclusion(self):
        x = BElem.of(1, TildeTopMono(0, 1))
        assert b_incl(x) == BElem.of(2, TildeTopMono(0, 1))
        assert b_incl(BElem.of(1, TildeTopMono(3, 0))) == BElem.of(
            2, TildeTopMono(3, 0)
        )
        assert b_incl(BElem.zero(1)).is_zero()

    def test_u2_map(self):
        assert b_mul_u2(BElem.of(2, TildeTopMono(0, 3))) == BElem.of(
            1, TildeTopMono(0, 1)
        )
        assert b_mul_u2(BElem.of(2, TildeTopMono(0, 1))).is_zero()
        # target B_0 is zero
        assert b_mul_u2(BElem.of(1, TildeTopMono(0, 1))).is_zero()

    def test_u2_matches_oracle(self):
        for i in range(1, 5):
            for m in range(-3, 4):
                for n in range(2 * i):
                    got = b_mul_u2(BElem.of(i, TildeTopMono(m, n)))
                    want = block_u2({(m, -n)}, i) if i >= 2 else set()
                    assert {(mo.m, -mo.n) for mo in got.monos} == want

    def test_quotient(self):
        assert b_quot(BElem.of(2, TildeTopMono(0, 3))).is_zero()
        assert b_quot(BElem.of(2, TildeTopMono(0, 1))) == BElem.of(
            1, TildeTopMono(0, 1)
        )
        assert b_quot(BElem.of(2, TildeTopMono(5, 0))) == BElem.of(
            1, TildeTopMono(5, 0)
        )

    def test_block_to_point(self):
        assert b_to_pt(BElem.of(1, TildeTopMono(0, 1))) == PtElem.of(N(0, 1))
        assert b_to_pt(BElem.of(1, TildeTopMono(2, 1))).is_zero()
        assert b_to_pt(BElem.of(3, TildeTopMono(-1, 4))) == PtElem.of(N(1, 4))

    def test_u2_commutes_with_inclusion(self):
        for i in range(1, 4):
            for n in range(2 * i):
                for m in (-2, 0, 1):
                    x = BElem.of(i, TildeTopMono(m, n))
                    assert b_mul_u2(b_incl(x)) == b_incl(b_mul_u2(x))

    def test_quot_incl_is_identity(self):
        for i in range(1, 4):
            for n in range(2 * i):
                x = BElem.of(i, TildeTopMono(1, n))
                assert b_quot(b_incl(x)) == x

    def test_invariant_enforced(self):
        with pytest.raises(ValueError, match="n > 2i-1"):
            BElem.of(1, TildeTopMono(0, 2))


class TestBases:
    def test_tilde_basis(self):
        assert tildetop_basis(RO2Degree(2, 4)) == [TildeTopMono(6, 0)]
        assert tildetop_basis(RO2Degree(1, 5)) == []
        assert ec2top_basis(RO2Degree(1, -1)) == [EC2TopMono(0, -1)]
        assert ec2top_basis(RO2Degree(1, -2)) == []

    def test_block_basis_columns(self):
        for p in range(-6, 7):
            assert b_basis(1, RO2Degree(4, p)) == []
            assert len(b_basis(1, RO2Degree(2, p))) == 1
            assert len(b_basis(1, RO2Degree(3, p))) == 1

    def test_basis_at_dispatch(self):
        assert basis_at("pt", RO2Degree(2, -3)) == [N(1, 0)]
        assert basis_at("b", RO2Degree(2, 0), index=1) == [TildeTopMono(2, 0)]
        assert basis_at("topbc2", 3) == [__import__("bredon2.point", fromlist=["TopBC2Mono"]).TopBC2Mono(3)]
        with pytest.raises(ValueError):
            basis_at("nope", RO2Degree(0, 0))


class TestExactnessHandChecks:
    def test_kernel_of_localization_is_negative_cone(self):
        # degree 2 - 3 sigma: both sides are {theta/a}
        d = RO2Degree(2, -3)
        basis = pt_basis(d)
        killed = [m for m in basis if localize(PtElem.of(m)).is_zero()]
        image = [
            tilde_to_pt(TildeTopElem.of(t)) for t in tildetop_basis(d)
        ]
        image_monos = {m for e in image for m in e.monos}
        assert killed == [N(1, 0)]
        assert image_monos == {N(1, 0)}

    def test_inhomogeneous_degree_query(self):
        elem = PtElem.of(P(0, 0), P(1, 0))
        with pytest.raises(InhomogeneousError):
            elem.degree()
