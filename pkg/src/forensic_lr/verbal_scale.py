"""Verbal strength-of-support statements for likelihood ratios.

The default scale uses decade bands. Only three points on it are fixed by the
source convention (LR 50 is "moderate", 500 "moderately strong", 5,000
"strong"); the bands below 10 and above 10,000 are an extrapolation and can be
replaced by passing a custom :class:`VerbalScale`.

Ratios below one are described through their reciprocal, with support directed
at the defence proposition instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnconfiguredScale
from .odds_core import ExactOdds


@dataclass(frozen=True)
class VerbalBand:
    """Half-open interval ``(lower, upper]``; ``upper=None`` means unbounded."""

    lower: Fraction
    upper: Fraction | None
    label: str

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        if self.upper is not None:
            object.__setattr__(self, "upper", Fraction(self.upper))
            if not self.lower < self.upper:
                raise ValueError(f"band {self.label!r}: lower must be below upper")
        if not self.label:
            raise ValueError("band label must be non-empty")

    def contains(self, lr: ExactOdds) -> bool:
        if lr.is_infinite:
            return self.upper is None
        value = lr.to_fraction()
        return self.lower < value and (self.upper is None or value <= self.upper)


@dataclass(frozen=True)
class VerbalScale:
    bands: tuple[VerbalBand, ...]
    support_hp: str = "common source"
    support_hd: str = "different source"

    def __post_init__(self):
        bands = tuple(self.bands)
        object.__setattr__(self, "bands", bands)
        if not bands:
            raise ValueError("a verbal scale needs at least one band")
        labels = [b.label for b in bands]
        if len(set(labels)) != len(labels):
            raise ValueError("band labels must be unique")
        for lo, hi in zip(bands, bands[1:]):
            if lo.upper is None or lo.upper != hi.lower:
                raise ValueError(
                    f"bands {lo.label!r} and {hi.label!r} are not contiguous and ascending"
                )

    def band_index(self, lr: ExactOdds) -> int:
        """Index of the band holding ``lr`` (which must exceed one)."""
        for i, band in enumerate(self.bands):
            if band.contains(lr):
                return i
        raise UnconfiguredScale(f"no verbal band covers LR = {lr}")


DEFAULT_SCALE = VerbalScale(
    bands=(
        VerbalBand(1, 10, "weak"),
        VerbalBand(10, 100, "moderate"),
        VerbalBand(100, 1000, "moderately strong"),
        VerbalBand(1000, 10_000, "strong"),
        VerbalBand(10_000, 1_000_000, "very strong"),
        VerbalBand(1_000_000, None, "extremely strong"),
    )
)


@dataclass(frozen=True)
class VerbalStatement:
    lr: ExactOdds
    label: str | None
    supports: str | None  # "Hp", "Hd", or None when the LR is exactly one
    text: str

    @property
    def is_neutral(self) -> bool:
        return self.supports is None


def verbal_equivalent(lr, scale: VerbalScale = DEFAULT_SCALE) -> VerbalStatement:
    """Describe ``lr`` in words.

    >>> verbal_equivalent(5000).text
    'strong support for common source'
    >>> verbal_equivalent(ExactOdds(1, 500)).text
    'moderately strong support for different source'
    """
    lr = ExactOdds.parse(lr)
    if lr == 1:
        return VerbalStatement(
            lr, None, None, "no support for either proposition (the evidence does not discriminate)"
        )
    if lr > 1:
        supports, magnitude, target = "Hp", lr, scale.support_hp
    else:
        supports, magnitude, target = "Hd", lr.reciprocal(), scale.support_hd
    label = scale.bands[scale.band_index(magnitude)].label
    return VerbalStatement(lr, label, supports, f"{label} support for {target}")
