"""Switchable single-rule mutations used by the mutation-sensitivity tests.

Each name below disables one multiplication rule, replacing it with the
nearest representable wrong answer.  They exist so the verification suites
can demonstrate that every rule is load-bearing; production code never
enables them.

``U2_KEEP_LOW``
    The ``u^2``-map between blocks no longer kills monomials with fewer than
    two inverse powers of ``u``; they pass through unchanged (index still
    lowered).

``CROSS_KEEP_POSITIVE``
    The map from the tilde module to the point ring no longer kills
    monomials with a positive ``a``-exponent; the exponent is clamped to
    zero instead.

``TORSION_PRODUCT``
    Products of two torsion monomials are no longer zero; exponents are
    added componentwise.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

U2_KEEP_LOW = "u2-keep-low"
CROSS_KEEP_POSITIVE = "cross-keep-positive"
TORSION_PRODUCT = "torsion-product"

ALL = frozenset({U2_KEEP_LOW, CROSS_KEEP_POSITIVE, TORSION_PRODUCT})

_active: set[str] = set()


def active(name: str) -> bool:
    return name in _active


@contextmanager
def enabled(name: str) -> Iterator[None]:
    """Enable a single mutation for the duration of a with-block."""
    if name not in ALL:
        raise ValueError(f"unknown mutation {name!r}")
    _active.add(name)
    try:
        yield
    finally:
        _active.discard(name)
