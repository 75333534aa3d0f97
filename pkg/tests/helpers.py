"""Independent reference computations used as test oracles.

These work from raw counts with plain Fraction arithmetic and share no code
with the package.
"""

from fractions import Fraction

ZIPPER = (1, 5_000_000, 0, 500_000_000)


def ref_conditionals(a, b, c, d):
    """(P(E|Hp), P(E|Hd), P(Hp|E), P(Hd|E)) from cells a b / c d."""
    return (Fraction(a, a + c), Fraction(b, b + d), Fraction(a, a + b), Fraction(b, a + b))


def ref_lr(a, b, c, d):
    return Fraction(a, a + c) / Fraction(b, b + d)


def ref_prior(a, b, c, d):
    return Fraction(a + c, b + d)
