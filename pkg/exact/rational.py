"""
Exact rationals.

Python's Fraction already keeps numerator/denominator reduced with a positive
denominator; this module adds parsing, printing and coercion from the ground
domain of the polynomial ring.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse `p` or `p/q` (no decimals, no exponents)."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"malformed rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"zero denominator in rational: {text!r}")
    return Fraction(numerator, denominator)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, strings and ground-domain elements."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    return Fraction(int(numerator), int(denominator))


def format_rational(value) -> str:
    """Canonical text form: `p` or `p/q`."""
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
