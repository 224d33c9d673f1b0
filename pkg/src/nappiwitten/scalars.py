"""Exact rational scalars.

Everything numeric in the engine is a ``gmpy2.mpq``.  Plain ints mix freely
with it, so most internal code never converts explicitly.
"""
from fractions import Fraction

import gmpy2

Q = gmpy2.mpq
ZERO = Q(0)
ONE = Q(1)


def to_scalar(value):
    """Coerce an int, Fraction, mpq or "p/q" string to an exact rational."""
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Q(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; pass 'p/q'")
    if isinstance(value, bool):
        return Q(int(value))
    return Q(value)


def format_scalar(value) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    value = Q(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(value) -> bool:
    return Q(value).denominator == 1


def as_int(value) -> int:
    value = Q(value)
    if value.denominator != 1:
        raise ValueError(f"{format_scalar(value)} is not an integer")
    return int(value.numerator)


def rational_sqrt(value):
    """Return the positive rational square root, or None if there is none."""
    value = Q(value)
    if value < 0:
        return None
    p, q = int(value.numerator), int(value.denominator)
    if not (gmpy2.is_square(p) and gmpy2.is_square(q)):
        return None
    return Q(int(gmpy2.isqrt(p)), int(gmpy2.isqrt(q)))
