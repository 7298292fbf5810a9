"""Parser and canonical printer for ring-element expressions.

Grammar::

    expr   := term ('+' term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' int)? | '(' expr ')' | '0' | '1'

``/`` multiplies by the inverse of the following factor, i.e. negates all of
its exponents; a parenthesized factor after ``/`` must be a product, not a
sum.  ``0`` is the zero element and ``1`` the unit monomial.  Atoms are the
ASCII generator names ``a u theta xi tau_s mu tau e1 e2 x``; the Unicode
spellings (``θ``, ``ξ``, ``τ_σ``, ``μ``, ``τ``, ``e₁``, ``e₂``) are accepted
as aliases.

Negative exponents are the internal representation; ``theta/(a^2*u)`` and
``mu/tau_s`` are surface sugar for ``theta*a^-2*u^-1`` and ``mu*tau_s^-1``.

Each ring validates the exponents of every parsed term and reports the
violated constraint by name.  The documented rejections are:

* ``theta^2`` in any ring carrying ``theta``:
  "theta exponent must be 0 or 1";
* a negative ``a`` or ``u`` exponent without ``theta`` (e.g. ``u^-1`` in
  ``pt``): "negative a/u exponents require theta";
* a torsion monomial without its ``mu``-power (e.g. ``theta/tau_s`` in
  ``motivic``): "torsion monomials need mu^i with i >= 1";
* too many inverse ``u``-powers for a block (e.g. ``theta*u^-3`` in
  ``b(1)``): "n > 2i-1 in B_i".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from .grading import MotDegree, RO2Degree
from .motivic import (
    BC2Elem,
    BC2Mono,
    CFieldElem,
    CFieldMono,
    EC2MotElem,
    EC2MotMono,
    FreeMono,
    MotElem,
    TildeMotElem,
    TildeMotMono,
    TorMono,
    bc2_basis,
    bc2_normalize,
    cfield_basis,
    ec2mot_basis,
    free_mono,
    mot_basis,
    tildemot_basis,
)
from .point import (
    BElem,
    EC2TopElem,
    EC2TopMono,
    PtElem,
    PtMono,
    TildeTopElem,
    TildeTopMono,
    TopBC2Elem,
    TopBC2Mono,
    b_basis,
    ec2top_basis,
    parity,
    pt_basis,
    tildetop_basis,
    topbc2_basis,
)

__all__ = [
    "RingId",
    "ParseError",
    "RingConstraintError",
    "parse_ring_id",
    "parse",
    "print_canonical",
    "ring_spec",
    "RING_NAMES",
]


class ParseError(ValueError):
    """Syntax error; ``pos`` is the 1-based offset into the source."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at position {pos}: {message}")
        self.pos = pos


class RingConstraintError(ValueError):
    """A parsed term violates an invariant of the target ring."""


@dataclass(frozen=True, slots=True)
class RingId:
    kind: str
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "b":
            return f"b({self.index})"
        return self.kind


RING_NAMES = (
    "pt",
    "ec2top",
    "tildetop",
    "b(i)",
    "motivic",
    "ec2mot",
    "tildemot",
    "bc2",
    "cfield",
    "topbc2",
)

_BLOCK_RE = re.compile(r"^b\(?(\d+)\)?$")


def parse_ring_id(name: str) -> RingId:
    name = name.strip().lower()
    m = _BLOCK_RE.match(name)
    if m:
        index = int(m.group(1))
        if index < 1:
            raise ValueError("block index must be >= 1")
        return RingId("b", index)
    if name in {"pt", "ec2top", "tildetop", "motivic", "ec2mot", "tildemot",
                "bc2", "cfield", "topbc2"}:
        return RingId(name)
    raise ValueError(f"unknown ring {name!r}")


# ---------------------------------------------------------------------------
# Tokenizer and recursive-descent parser
# ---------------------------------------------------------------------------

_ALIASES = {
    "τ_σ": "tau_s",
    "τσ": "tau_s",
    "θ": "theta",
    "ξ": "xi",
    "μ": "mu",
    "τ": "tau",
    "e₁": "e1",
    "e₂": "e2",
}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-zθξμτ][A-Za-z0-9_₁₂σ]*)"
    r"|(?P<int>-?\d+)"
    r"|(?P<op>[*/+^()]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            if src[pos:].strip() == "":
                break
            bad = src[pos:].lstrip()
            at = len(src) - len(bad) + 1
            raise ParseError(f"unexpected character {bad[0]!r}", at)
        if m.lastgroup == "name":
            text = _ALIASES.get(m.group("name"), m.group("name"))
        else:
            text = m.group(m.lastgroup)
        tokens.append((m.lastgroup, text, m.start(m.lastgroup) + 1))
        pos = m.end()
    return tokens


#: a term is a bag of exponent vectors (atom name -> integer), each standing
#: for one not-yet-validated monomial; GF(2) cancellation happens after the
#: ring converts vectors to monomials.
ExpVec = dict


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.at = 0

    def peek(self):
        return self.tokens[self.at] if self.at < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.src) + 1)
        self.at += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])

    def parse(self) -> list[ExpVec]:
        vecs = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return vecs

    def expr(self) -> list[ExpVec]:
        vecs = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok[1] != "+":
                return vecs
            self.next()
            vecs = vecs + self.term()

    def term(self) -> list[ExpVec]:
        vecs = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "*/":
                return vecs
            op = self.next()
            rhs = self.factor()
            if op[1] == "/":
                if len(rhs) != 1:
                    raise ParseError("cannot divide by a sum", op[2])
                rhs = [{k: -v for k, v in rhs[0].items()}]
            vecs = [_vec_mul(x, y) for x in vecs for y in rhs]

    def factor(self) -> list[ExpVec]:
        tok = self.next()
        if tok[0] == "op" and tok[1] == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok[0] == "int":
            if tok[1] == "0":
                return []
            if tok[1] == "1":
                return [{}]
            raise ParseError("only the literals 0 and 1 are allowed", tok[2])
        if tok[0] != "name":
            raise ParseError(f"expected atom, got {tok[1]!r}", tok[2])
        exp = 1
        nxt = self.peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
            self.next()
            t = self.next()
            if t[0] != "int":
                raise ParseError("expected integer exponent", t[2])
            exp = int(t[1])
        return [{tok[1]: exp} if exp else {}]


def _vec_mul(x: ExpVec, y: ExpVec) -> ExpVec:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


# ---------------------------------------------------------------------------
# Ring adapters
# ---------------------------------------------------------------------------


def _pow(atom: str, k: int) -> str:
    return atom if k == 1 else f"{atom}^{k}"


def _take(vec: ExpVec, ring: str, allowed: tuple[str, ...]) -> dict[str, int]:
    for atom in vec:
        if atom not in allowed:
            raise RingConstraintError(
                f"atom {atom!r} not available in ring {ring}"
            )
    return {atom: vec.get(atom, 0) for atom in allowed}


def _point_part(e: dict[str, int], ring: str) -> PtMono:
    th, ea, eu = e["theta"], e["a"], e["u"]
    if th not in (0, 1):
        raise RingConstraintError("theta exponent must be 0 or 1")
    if th == 0:
        if ea < 0 or eu < 0:
            raise RingConstraintError("negative a/u exponents require theta")
        return PtMono.positive(ea, eu)
    if ea > 0 or eu > 0:
        raise RingConstraintError(
            f"positive a/u exponents not allowed with theta in {ring}"
        )
    return PtMono.negative(-ea, -eu)


def _tilde_coords(e: dict[str, int], ring: str) -> tuple[int, int]:
    if e["theta"] == 0:
        raise RingConstraintError(f"{ring} monomials require theta")
    if e["theta"] != 1:
        raise RingConstraintError("theta exponent must be 0 or 1")
    if e["u"] > 0:
        raise RingConstraintError(
            f"positive u exponents not allowed with theta in {ring}"
        )
    return e["a"], -e["u"]


def _check_block(n: int, i: int) -> None:
    if n > 2 * i - 1:
        raise RingConstraintError(f"n > 2i-1 in B_i (n={n}, i={i})")


def _pt_mono_str(m: PtMono) -> str:
    if not m.neg:
        parts = [_pow("a", m.m)] if m.m else []
        if m.n:
            parts.append(_pow("u", m.n))
        return "*".join(parts) if parts else "1"
    parts = [_pow("a", m.m)] if m.m else []
    if m.n:
        parts.append(_pow("u", m.n))
    if not parts:
        return "theta"
    if len(parts) == 1:
        return f"theta/{parts[0]}"
    return f"theta/({'*'.join(parts)})"


def _tilde_mono_str(m: TildeTopMono) -> str:
    parts = ["theta"]
    if m.m:
        parts.append(_pow("a", m.m))
    if m.n:
        parts.append(_pow("u", -m.n))
    return "*".join(parts)


def _free_mono_str(m: FreeMono) -> str:
    parts = []
    head = _pt_mono_str(m.x)
    if head != "1":
        parts.append(head)
    if m.e:
        parts.append(_pow("xi", m.e))
    if m.f:
        parts.append(_pow("tau_s", m.f))
    if m.g:
        parts.append(_pow("mu", m.g))
    return "*".join(parts) if parts else "1"


def _tor_mono_str(m: TorMono) -> str:
    parts = ["theta"]
    if m.m:
        parts.append(_pow("a", m.m))
    if m.n:
        parts.append(_pow("u", -m.n))
    parts.append(_pow("mu", m.i))
    return "*".join(parts) + "/" + _pow("tau_s", m.j)


def _ec2mot_mono_str(m: EC2MotMono) -> str:
    parts = []
    head = _pt_mono_str(m.x)
    if head != "1":
        parts.append(head)
    if m.e:
        parts.append(_pow("xi", m.e))
    if m.f:
        parts.append(_pow("tau_s", m.f))
    return "*".join(parts) if parts else "1"


def _tildemot_mono_str(m: TildeMotMono) -> str:
    parts = ["theta"]
    if m.m:
        parts.append(_pow("a", m.m))
    if m.n:
        parts.append(_pow("u", -m.n))
    parts.append(_pow("mu", m.i))
    if m.j > 0:
        parts.append(_pow("tau_s", m.j))
        return "*".join(parts)
    if m.j < 0:
        return "*".join(parts) + "/" + _pow("tau_s", -m.j)
    return "*".join(parts)


def _bc2_mono_str(m: BC2Mono) -> str:
    parts = []
    if m.k:
        parts.append(_pow("tau", m.k))
    if m.eps:
        parts.append("e1")
    if m.m2:
        parts.append(_pow("e2", m.m2))
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class RingSpec:
    """Everything the parser, printer and chart builder need per ring."""

    ring: RingId
    atoms: tuple[str, ...]
    to_mono: Callable  # ExpVec -> monomial | None
    element_of: Callable  # iterable of monomials -> element
    monomials: Callable  # element -> iterable of monomials
    mono_str: Callable  # monomial -> canonical text
    sort_key: Callable  # monomial -> ordering key
    basis: Callable  # degree arguments -> list of monomials
    graded_by: str  # "ro2" | "mot" | "bideg" | "int"


def _spec_pt(ring: RingId) -> RingSpec:
    def to_mono(vec):
        return _point_part(_take(vec, "pt", ("a", "u", "theta")), "pt")

    return RingSpec(
        ring,
        ("a", "u", "theta"),
        to_mono,
        lambda monos: PtElem(parity(monos)),
        lambda e: e.monos,
        _pt_mono_str,
        lambda m: (m.degree().a, m.degree().p, _pt_mono_str(m)),
        pt_basis,
        "ro2",
    )


def _spec_ec2top(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "ec2top", ("a", "u"))
        if e["a"] < 0:
            raise RingConstraintError("a exponent must be >= 0 in ec2top")
        return EC2TopMono(e["a"], e["u"])

    def mono_str(m):
        parts = [_pow("a", m.m)] if m.m else []
        if m.n:
            parts.append(_pow("u", m.n))
        return "*".join(parts) if parts else "1"

    return RingSpec(
        ring,
        ("a", "u"),
        to_mono,
        lambda monos: EC2TopElem(parity(monos)),
        lambda e: e.monos,
        mono_str,
        lambda m: (m.degree().a, m.degree().p, mono_str(m)),
        ec2top_basis,
        "ro2",
    )


def _spec_tildetop(ring: RingId) -> RingSpec:
    def to_mono(vec):
        m, n = _tilde_coords(
            _take(vec, "tildetop", ("a", "u", "theta")), "tildetop"
        )
        return TildeTopMono(m, n)

    return RingSpec(
        ring,
        ("a", "u", "theta"),
        to_mono,
        lambda monos: TildeTopElem(parity(monos)),
        lambda e: e.monos,
        _tilde_mono_str,
        lambda m: (m.degree().a, m.degree().p, _tilde_mono_str(m)),
        tildetop_basis,
        "ro2",
    )


def _spec_block(ring: RingId) -> RingSpec:
    index = ring.index
    assert index is not None

    def to_mono(vec):
        m, n = _tilde_coords(
            _take(vec, str(ring), ("a", "u", "theta")), str(ring)
        )
        _check_block(n, index)
        return TildeTopMono(m, n)

    return RingSpec(
        ring,
        ("a", "u", "theta"),
        to_mono,
        lambda monos: BElem(index, parity(monos)),
        lambda e: e.monos,
        _tilde_mono_str,
        lambda m: (m.degree().a, m.degree().p, _tilde_mono_str(m)),
        lambda d: b_basis(index, d),
        "ro2",
    )


def _spec_motivic(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "motivic", ("a", "u", "theta", "xi", "tau_s", "mu"))
        if e["tau_s"] < 0:
            if e["xi"]:
                raise RingConstraintError(
                    "xi is not allowed in torsion monomials"
                )
            if e["mu"] < 1:
                raise RingConstraintError(
                    "torsion monomials need mu^i with i >= 1"
                )
            m, n = _tilde_coords(
                {"theta": e["theta"], "a": e["a"], "u": e["u"]}, "torsion"
            )
            _check_block(n, e["mu"])
            return TorMono(e["mu"], -e["tau_s"], m, n)
        if e["xi"] < 0 or e["mu"] < 0:
            raise RingConstraintError(
                "negative xi/mu exponents not allowed in motivic"
            )
        x = _point_part(
            {"theta": e["theta"], "a": e["a"], "u": e["u"]}, "motivic"
        )
        return free_mono(x, e["xi"], e["tau_s"], e["mu"])

    def mono_str(m):
        return _free_mono_str(m) if isinstance(m, FreeMono) else _tor_mono_str(m)

    def sort_key(m):
        d = m.degree()
        return (d.deg.a, d.deg.p, d.wt.a, d.wt.p, mono_str(m))

    return RingSpec(
        ring,
        ("a", "u", "theta", "xi", "tau_s", "mu"),
        to_mono,
        lambda monos: MotElem.of(*monos),
        lambda e: e.monomials(),
        mono_str,
        sort_key,
        mot_basis,
        "mot",
    )


def _spec_ec2mot(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "ec2mot", ("a", "u", "theta", "xi", "tau_s"))
        if e["tau_s"] < 0:
            raise RingConstraintError(
                "negative tau_s exponents not allowed in ec2mot"
            )
        x = _point_part(
            {"theta": e["theta"], "a": e["a"], "u": e["u"]}, "ec2mot"
        )
        return EC2MotMono(x, e["xi"], e["tau_s"])

    def sort_key(m):
        d = m.degree()
        return (d.deg.a, d.deg.p, d.wt.a, d.wt.p, _ec2mot_mono_str(m))

    return RingSpec(
        ring,
        ("a", "u", "theta", "xi", "tau_s"),
        to_mono,
        lambda monos: EC2MotElem(parity(monos)),
        lambda e: e.monos,
        _ec2mot_mono_str,
        sort_key,
        ec2mot_basis,
        "mot",
    )


def _spec_tildemot(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "tildemot", ("a", "u", "theta", "mu", "tau_s"))
        if e["mu"] < 1:
            raise RingConstraintError(
                "tildemot monomials need mu^i with i >= 1"
            )
        m, n = _tilde_coords(
            {"theta": e["theta"], "a": e["a"], "u": e["u"]}, "tildemot"
        )
        _check_block(n, e["mu"])
        return TildeMotMono(e["mu"], e["tau_s"], m, n)

    def sort_key(m):
        d = m.degree()
        return (d.deg.a, d.deg.p, d.wt.a, d.wt.p, _tildemot_mono_str(m))

    return RingSpec(
        ring,
        ("a", "u", "theta", "mu", "tau_s"),
        to_mono,
        lambda monos: TildeMotElem(parity(monos)),
        lambda e: e.monos,
        _tildemot_mono_str,
        sort_key,
        tildemot_basis,
        "mot",
    )


def _spec_bc2(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "bc2", ("tau", "e1", "e2"))
        if min(e.values()) < 0:
            raise RingConstraintError("negative exponents not allowed in bc2")
        return bc2_normalize(e["tau"], e["e1"], e["e2"])

    return RingSpec(
        ring,
        ("tau", "e1", "e2"),
        to_mono,
        lambda monos: BC2Elem(parity(monos)),
        lambda e: e.monos,
        _bc2_mono_str,
        lambda m: (*m.bidegree(), _bc2_mono_str(m)),
        lambda ab: bc2_basis(*ab),
        "bideg",
    )


def _spec_cfield(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "cfield", ("tau",))
        if e["tau"] < 0:
            raise RingConstraintError("negative exponents not allowed in cfield")
        return CFieldMono(e["tau"])

    return RingSpec(
        ring,
        ("tau",),
        to_mono,
        lambda monos: CFieldElem(parity(monos)),
        lambda e: e.monos,
        lambda m: _pow("tau", m.k) if m.k else "1",
        lambda m: (m.k,),
        lambda ab: cfield_basis(*ab),
        "bideg",
    )


def _spec_topbc2(ring: RingId) -> RingSpec:
    def to_mono(vec):
        e = _take(vec, "topbc2", ("x",))
        if e["x"] < 0:
            raise RingConstraintError("negative exponents not allowed in topbc2")
        return TopBC2Mono(e["x"])

    return RingSpec(
        ring,
        ("x",),
        to_mono,
        lambda monos: TopBC2Elem(parity(monos)),
        lambda e: e.monos,
        lambda m: _pow("x", m.k) if m.k else "1",
        lambda m: (m.k,),
        topbc2_basis,
        "int",
    )


_SPECS = {
    "pt": _spec_pt,
    "ec2top": _spec_ec2top,
    "tildetop": _spec_tildetop,
    "b": _spec_block,
    "motivic": _spec_motivic,
    "ec2mot": _spec_ec2mot,
    "tildemot": _spec_tildemot,
    "bc2": _spec_bc2,
    "cfield": _spec_cfield,
    "topbc2": _spec_topbc2,
}


def ring_spec(ring: RingId | str) -> RingSpec:
    if isinstance(ring, str):
        ring = parse_ring_id(ring)
    return _SPECS[ring.kind](ring)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def parse(ring: RingId | str, src: str):
    """Parse ``src`` as an element of ``ring``.

    Raises :class:`ParseError` on malformed syntax and
    :class:`RingConstraintError` when a term violates a ring invariant.
    """
    spec = ring_spec(ring)
    vecs = _Parser(src).parse()
    return spec.element_of([spec.to_mono(v) for v in vecs])


def print_canonical(ring: RingId | str, element) -> str:
    """Deterministic text form; ``parse`` of the output returns ``element``.

    Terms are ordered by degree, then lexicographically.
    """
    spec = ring_spec(ring)
    monos = sorted(spec.monomials(element), key=spec.sort_key)
    if not monos:
        return "0"
    return " + ".join(spec.mono_str(m) for m in monos)
