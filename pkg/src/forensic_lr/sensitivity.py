"""Guessing the unknown not-E / Hd count and sweeping over guesses.

For a table whose E row is fixed, the guess enters both the likelihood ratio
and the prior odds, and cancels in their product: the posterior odds equal
``count(E and Hp) / count(E and Hd)`` whatever the guess. :func:`sweep` shows
this row by row and :func:`invariance_check` confirms it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import WrongUnknownPattern
from .odds_core import EvidenceTable, ExactOdds, likelihood_ratio, posterior_odds, prior_odds

DEFAULT_GUESSES = (0, 10**7, 10**8, 5 * 10**8, 10**9, 10**12)


def complete_table(base: EvidenceTable, guess: int) -> EvidenceTable:
    """Fill the not-E / Hd cell of ``base`` with ``guess``."""
    if base.unknown_cells != ("count_note_hd",):
        unknown = ", ".join(base.unknown_cells) or "none"
        raise WrongUnknownPattern(
            f"exactly the count_note_hd cell must be unknown (unknown: {unknown})"
        )
    if isinstance(guess, bool) or not isinstance(guess, int) or guess < 0:
        raise ValueError(f"guess must be a nonnegative int, got {guess!r}")
    return replace(base, count_note_hd=guess)


@dataclass(frozen=True)
class SweepRow:
    guess: int
    likelihood_ratio: ExactOdds
    prior_odds: ExactOdds
    posterior_odds: ExactOdds


@dataclass(frozen=True)
class GuessSweep:
    base_table: EvidenceTable
    guesses: tuple[int, ...]
    rows: tuple[SweepRow, ...]

    def __post_init__(self):
        for row in self.rows:
            if row.likelihood_ratio * row.prior_odds != row.posterior_odds:
                raise ValueError(f"row for guess {row.guess}: posterior != LR x prior")


def sweep(base: EvidenceTable, guesses: Iterable[int] = DEFAULT_GUESSES) -> GuessSweep:
    guesses = tuple(guesses)
    if not guesses:
        raise ValueError("at least one guess is required")
    rows = []
    for g in guesses:
        table = complete_table(base, g)
        rows.append(SweepRow(g, likelihood_ratio(table), prior_odds(table), posterior_odds(table)))
    return GuessSweep(base, guesses, tuple(rows))


@dataclass(frozen=True)
class InvarianceResult:
    holds: bool
    witness: tuple[SweepRow, SweepRow] | None = None

    def __bool__(self):
        return self.holds


def invariance_check(result: GuessSweep | Sequence[SweepRow]) -> InvarianceResult:
    """True iff every row has exactly the same posterior odds.

    On failure the witness is the first row paired with the first row that
    disagrees with it.
    """
    rows = result.rows if isinstance(result, GuessSweep) else tuple(result)
    if len(rows) < 2:
        raise ValueError("invariance needs at least two rows to compare")
    first = rows[0]
    for row in rows[1:]:
        if row.posterior_odds != first.posterior_odds:
            return InvarianceResult(False, (first, row))
    return InvarianceResult(True)
