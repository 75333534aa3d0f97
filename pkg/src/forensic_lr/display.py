"""Rendering exact rationals for humans.

Exact values are never altered here; every function returns a string (or, for
:func:`round_significant`, a new rational) and leaves the input untouched.
"""

from __future__ import annotations

from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from numbers import Rational

_SUPERSCRIPTS = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


def _as_fraction(x) -> Fraction | None:
    """Return ``x`` as a Fraction, or None for infinite odds."""
    if isinstance(x, Rational):
        return Fraction(x)
    if getattr(x, "is_infinite", False):
        return None
    return x.to_fraction()


def _rounded_decimal(x: Fraction, sig: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = sig
        ctx.rounding = ROUND_HALF_EVEN
        return Decimal(x.numerator) / Decimal(x.denominator)


def format_int(n: int, grouped: bool = True) -> str:
    return f"{n:,}" if grouped else str(n)


def format_fraction(x, grouped: bool = True) -> str:
    """``1/505,000,000`` style; integers print without a denominator."""
    f = _as_fraction(x)
    if f is None:
        return "inf"
    if f.denominator == 1:
        return format_int(f.numerator, grouped)
    return f"{format_int(f.numerator, grouped)}/{format_int(f.denominator, grouped)}"


def format_sci(x, sig: int = 3, unicode: bool = False) -> str:
    """Scientific notation at ``sig`` significant figures, e.g. ``2.00e-7``.

    With ``unicode=True`` the exponent is typeset as ``2.00×10⁻⁷``.
    """
    f = _as_fraction(x)
    if f is None:
        return "∞" if unicode else "inf"
    if f == 0:
        return "0"
    text = format(_rounded_decimal(abs(f), sig), f".{sig - 1}e")
    if f < 0:
        text = "-" + text
    if unicode:
        mantissa, exponent = text.split("e")
        exponent = exponent.lstrip("+")
        return f"{mantissa}×10{exponent.translate(_SUPERSCRIPTS)}"
    return text.replace("e+", "e")


def format_fixed(x, places: int = 2, rounding: str = ROUND_DOWN) -> str:
    """Fixed-point display, truncating by default.

    Truncation keeps a probability just below one from printing as ``1.00``:
    5,000,000/5,000,001 shows as ``0.99``. Pass ``rounding=ROUND_HALF_EVEN``
    (or any :mod:`decimal` rounding constant) for round-to-nearest.
    """
    f = _as_fraction(x)
    if f is None:
        return "inf"
    q = Decimal(1).scaleb(-places)
    with localcontext() as ctx:
        ctx.prec = max(50, len(str(f.numerator)) + places + 5)
        value = Decimal(f.numerator) / Decimal(f.denominator)
        return str(value.quantize(q, rounding=rounding))


def format_value(x, sig: int = 3, grouped: bool = True) -> str:
    """Integers exactly; everything else in scientific notation.

    Used for likelihood ratios and odds, where an integral value such as
    200,001 must not be rounded to 200,000.
    """
    f = _as_fraction(x)
    if f is None:
        return "inf"
    if f.denominator == 1:
        return format_int(f.numerator, grouped)
    return format_sci(f, sig)


def format_probability(x, grouped: bool = True) -> str:
    """Exact fraction followed by an approximate decimal."""
    f = _as_fraction(x)
    approx = format_fixed(f, 2) if f >= Fraction(1, 100) else format_sci(f)
    return f"{format_fraction(f, grouped)} (~{approx})"


def round_significant(x, sig: int) -> Fraction:
    """Round a rational to ``sig`` significant figures, returning a rational.

    ``round_significant(Fraction(1, 505_000_000), 1) == Fraction(2, 10**9)``.
    """
    f = _as_fraction(x)
    if f is None:
        raise ValueError("cannot round infinite odds")
    if f == 0:
        return Fraction(0)
    return Fraction(_rounded_decimal(f, sig))
