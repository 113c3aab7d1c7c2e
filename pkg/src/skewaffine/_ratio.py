"""Arbitrary-precision rational numbers.

gmpy2.mpq is used when available (considerably faster for the matrix-heavy
paths); fractions.Fraction is a drop-in fallback. Both types hash and compare
identically for equal values, print as "p/q" (or "p" when the denominator is
1), and accept that same string back in their constructor.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)


def rat(value, den=None):
    """Coerce ints, "p/q" strings or existing rationals to Rat."""
    if den is not None:
        return Rat(value, den)
    if isinstance(value, str):
        return Rat(value.strip())
    return Rat(value)


def rat_str(value) -> str:
    return str(value)
