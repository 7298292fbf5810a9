import random

import pytest

from bredon2.expr import (
    ParseError,
    RingConstraintError,
    parse,
    parse_ring_id,
    print_canonical,
    ring_spec,
)
from bredon2.motivic import FreeMono, MotElem, TorMono
from bredon2.point import BElem, PtElem, PtMono, TildeTopMono

from randelems import random_element

P = PtMono.positive
N = PtMono.negative

ALL_RINGS = ["pt", "ec2top", "tildetop", "b(1)", "b(3)", "motivic", "ec2mot",
             "tildemot", "bc2", "cfield", "topbc2"]


class TestRingIds:
    def test_block_spellings(self):
        assert parse_ring_id("b(2)") == parse_ring_id("b2")
        assert parse_ring_id("b(2)").index == 2

    def test_unknown(self):
        with pytest.raises(ValueError):
            parse_ring_id("spectra")
        with pytest.raises(ValueError):
            parse_ring_id("b0")


class TestParsing:
    def test_division_sugar(self):
        assert parse("pt", "theta/(a^2*u)") == PtElem.of(N(2, 1))
        assert parse("pt", "theta/u") == PtElem.of(N(0, 1))
        assert parse("pt", "theta/a^3") == PtElem.of(N(3, 0))

    def test_normalization(self):
        assert parse("motivic", "xi*mu") == MotElem.of(FreeMono(P(0, 2), 0, 0, 0))
        assert parse("motivic", "u^2") == parse("motivic", "xi*mu")

    def test_torsion_literal(self):
        assert parse("motivic", "theta*u^-1*mu^1/tau_s^1") == MotElem.of(
            TorMono(1, 1, 0, 1)
        )
        assert parse("motivic", "theta*mu/tau_s") == MotElem.of(TorMono(1, 1, 0, 0))

    def test_sum_and_cancellation(self):
        assert parse("pt", "a + a").is_zero()
        assert parse("motivic", "u^2 + xi*mu").is_zero()
        two = parse("pt", "a + u")
        assert len(two.monos) == 2

    def test_literals(self):
        assert parse("pt", "0").is_zero()
        assert parse("pt", "1") == PtElem.one()
        assert parse("bc2", "1 + 0") is not None

    def test_unicode_aliases(self):
        assert parse("pt", "θ/u") == parse("pt", "theta/u")
        assert parse("motivic", "ξ*μ") == parse("motivic", "xi*mu")
        assert parse("motivic", "τ_σ") == parse("motivic", "tau_s")
        assert parse("bc2", "e₁*e₁") == parse("bc2", "tau*e2")

    def test_parenthesized_sums(self):
        got = parse("pt", "(a + u)*u")
        assert got == parse("pt", "a*u + u^2")

    def test_block_parse(self):
        assert parse("b(2)", "theta*u^-3") == BElem.of(2, TildeTopMono(0, 3))


class TestDocumentedRejections:
    def test_theta_exponent(self):
        with pytest.raises(RingConstraintError, match="theta exponent must be 0 or 1"):
            parse("pt", "theta^2")

    def test_negative_exponent_requires_theta(self):
        with pytest.raises(
            RingConstraintError, match="negative a/u exponents require theta"
        ):
            parse("pt", "u^-1")

    def test_torsion_needs_mu(self):
        with pytest.raises(
            RingConstraintError, match=r"torsion monomials need mu\^i with i >= 1"
        ):
            parse("motivic", "theta/tau_s")

    def test_block_truncation(self):
        with pytest.raises(RingConstraintError, match="n > 2i-1 in B_i"):
            parse("b(1)", "theta*u^-3")
        with pytest.raises(RingConstraintError, match="n > 2i-1 in B_i"):
            parse("motivic", "theta*u^-3*mu/tau_s")


class TestOtherRejections:
    def test_unknown_atom_for_ring(self):
        with pytest.raises(RingConstraintError, match="not available in ring"):
            parse("pt", "xi")
        with pytest.raises(RingConstraintError, match="not available in ring"):
            parse("bc2", "a")

    def test_syntax_errors_carry_position(self):
        with pytest.raises(ParseError) as err:
            parse("pt", "a + + u")
        assert err.value.pos == 5
        with pytest.raises(ParseError, match="position"):
            parse("pt", "a^x")
        with pytest.raises(ParseError):
            parse("pt", "(a + u")
        with pytest.raises(ParseError):
            parse("pt", "")

    def test_divide_by_sum(self):
        with pytest.raises(ParseError, match="cannot divide by a sum"):
            parse("pt", "theta/(a + u)")

    def test_tilde_requires_theta(self):
        with pytest.raises(RingConstraintError, match="require theta"):
            parse("tildetop", "a^2")

    def test_xi_rejected_in_torsion(self):
        with pytest.raises(RingConstraintError, match="xi is not allowed"):
            parse("motivic", "xi*theta*mu^2/tau_s")


class TestPrinting:
    def test_examples(self):
        assert print_canonical("pt", PtElem.of(N(0, 1))) == "theta/u"
        assert print_canonical("motivic", MotElem.of(FreeMono(P(0, 0), 0, 1, 0))) == "tau_s"
        assert print_canonical("pt", PtElem.zero()) == "0"
        assert print_canonical("pt", PtElem.one()) == "1"
        assert (
            print_canonical("motivic", MotElem.of(TorMono(1, 1, 0, 1)))
            == "theta*u^-1*mu/tau_s"
        )

    def test_term_order_is_by_degree(self):
        elem = parse("pt", "u^2 + a + u")
        # degrees: u^2 at (-2,2), u at (-1,1), a at (0,1)
        assert print_canonical("pt", elem) == "u^2 + u + a"

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_round_trip_random(self, ring):
        rid = parse_ring_id(ring)
        rng = random.Random(hash(ring) & 0xFFFF)
        for _ in range(200):
            elem = random_element(rid, rng)
            text = print_canonical(rid, elem)
            assert parse(rid, text) == elem, (ring, text)

    @pytest.mark.parametrize("ring", ALL_RINGS)
    def test_basis_strings_round_trip(self, ring):
        rid = parse_ring_id(ring)
        spec = ring_spec(rid)
        rng = random.Random(99)
        for _ in range(100):
            mono = random_element(rid, rng, max_terms=1)
            text = print_canonical(rid, mono)
            assert parse(rid, text) == mono
