"""Exact probabilities, odds and the 2x2 evidence count table.

All quantities are derived from integer counts with :class:`fractions.Fraction`
arithmetic, so identities such as ``posterior = LR * prior`` hold with exact
equality rather than to a tolerance.

The table layout is::

              Hp        Hd
      E     e_hp      e_hd
     not E  note_hp   note_hd

Rows are the evidence events, columns the competing hypotheses.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Rational

from .errors import (
    AxisError,
    IncompleteTable,
    IndeterminateProduct,
    IndeterminateRatio,
    UndefinedConditional,
)

__all__ = [
    "Event",
    "ExactProbability",
    "ExactOdds",
    "TableLabels",
    "EvidenceTable",
    "AnalysisResult",
    "conditional_probability",
    "likelihood_ratio",
    "prior_odds",
    "posterior_odds",
    "bayes_update",
    "analyze",
]


class Event(str, enum.Enum):
    E = "E"
    NOT_E = "notE"
    HP = "Hp"
    HD = "Hd"

    @property
    def is_row(self) -> bool:
        return self in _ROW_EVENTS

    @classmethod
    def parse(cls, value) -> "Event":
        try:
            return _EVENT_NAMES[value]
        except (KeyError, TypeError):
            pass
        key = str(value).strip().lower()
        if key in _EVENT_NAMES:
            return _EVENT_NAMES[key]
        raise ValueError(f"unknown event {value!r}")


_ROW_EVENTS = frozenset((Event.E, Event.NOT_E))
_EVENT_NAMES = {m.value: m for m in Event}
_EVENT_NAMES.update({m.value.lower(): m for m in Event})
_EVENT_NAMES.update(dict.fromkeys(("¬E", "~E", "not E", "!E", "¬e", "~e", "not e", "!e"), Event.NOT_E))


class ExactProbability(Fraction):
    """A rational number in [0, 1].

    Behaves as a :class:`~fractions.Fraction` in every respect; arithmetic
    results are plain Fractions since a sum of probabilities need not be one.
    """

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if not 0 <= self.numerator <= self.denominator:
            raise ValueError(f"probability out of range [0, 1]: {Fraction(self)}")
        return self

    def __repr__(self):
        return f"ExactProbability({self.numerator}, {self.denominator})"


def _check_count(name, value, allow_none=False):
    if value is None and allow_none:
        return
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class ExactOdds:
    """Nonnegative odds ``numerator : denominator`` in lowest terms.

    A zero denominator is the (explicit, legal) infinite state; ``0/0`` cannot
    be constructed and raises :class:`IndeterminateRatio`.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        n, d = self.numerator, self.denominator
        _check_count("numerator", n)
        _check_count("denominator", d)
        if n == 0 and d == 0:
            raise IndeterminateRatio("odds 0/0 are indeterminate")
        if d == 0:
            n = 1
        elif n == 0:
            d = 1
        else:
            g = math.gcd(n, d)
            n, d = n // g, d // g
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    @classmethod
    def from_ratio(cls, a, b) -> "ExactOdds":
        """Odds ``a / b`` for nonnegative rationals ``a`` and ``b``."""
        a, b = Fraction(a), Fraction(b)
        if a < 0 or b < 0:
            raise ValueError("odds need nonnegative operands")
        if a == 0 and b == 0:
            raise IndeterminateRatio("ratio 0/0 is indeterminate")
        return cls(a.numerator * b.denominator, a.denominator * b.numerator)

    @classmethod
    def parse(cls, value) -> "ExactOdds":
        """Accept ExactOdds, ints, Fractions, or strings like ``"1/8500"``, ``"inf"``."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            text = value.strip().replace(",", "").replace("_", "")
            if text.lower() in ("inf", "infinity", "∞"):
                return cls.infinite()
            value = Fraction(text)
        if isinstance(value, bool):
            raise TypeError("bool is not an odds value")
        if isinstance(value, Rational):
            return cls.from_ratio(value, 1)
        raise TypeError(f"cannot interpret {value!r} as odds")

    @classmethod
    def infinite(cls) -> "ExactOdds":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise OverflowError("infinite odds have no finite value")
        return Fraction(self.numerator, self.denominator)

    def reciprocal(self) -> "ExactOdds":
        return ExactOdds(self.denominator, self.numerator)

    def __mul__(self, other):
        other = _coerce_odds(other)
        if other is NotImplemented:
            return other
        if (self.is_zero and other.is_infinite) or (self.is_infinite and other.is_zero):
            raise IndeterminateProduct("0 x infinity is indeterminate")
        return ExactOdds(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_odds(other)
        if other is NotImplemented:
            return other
        if (self.is_zero and other.is_zero) or (self.is_infinite and other.is_infinite):
            raise IndeterminateRatio(f"ratio {self}/{other} is indeterminate")
        return self * other.reciprocal()

    def __eq__(self, other):
        other = _coerce_odds(other)
        if other is NotImplemented:
            return other
        return (self.numerator, self.denominator) == (other.numerator, other.denominator)

    def __lt__(self, other):
        other = _coerce_odds(other)
        if other is NotImplemented:
            return other
        # a/b < c/d  <=>  a*d < c*b, valid with zero denominators too
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __hash__(self):
        if self.is_infinite:
            return hash(math.inf)
        return hash(Fraction(self.numerator, self.denominator))

    def __float__(self):
        if self.is_infinite:
            return math.inf
        return self.numerator / self.denominator

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"ExactOdds({self.numerator}, {self.denominator})"


def _coerce_odds(value):
    if isinstance(value, ExactOdds):
        return value
    if isinstance(value, Rational) and not isinstance(value, bool) and value >= 0:
        return ExactOdds.from_ratio(value, 1)
    return NotImplemented


@dataclass(frozen=True)
class TableLabels:
    """Human-readable names for the two rows and two columns."""

    e: str = "E"
    not_e: str = "¬E"
    hp: str = "Hp"
    hd: str = "Hd"

    def of(self, event: Event) -> str:
        return {Event.E: self.e, Event.NOT_E: self.not_e, Event.HP: self.hp, Event.HD: self.hd}[event]


_CELLS = {
    (Event.E, Event.HP): "count_e_hp",
    (Event.E, Event.HD): "count_e_hd",
    (Event.NOT_E, Event.HP): "count_note_hp",
    (Event.NOT_E, Event.HD): "count_note_hd",
}
# either orientation of a (row, column) pair
_CELL_LOOKUP = {**_CELLS, **{(col, row): name for (row, col), name in _CELLS.items()}}
_MARGIN_PARTS = {
    Event.E: ("count_e_hp", "count_e_hd"),
    Event.NOT_E: ("count_note_hp", "count_note_hd"),
    Event.HP: ("count_e_hp", "count_note_hp"),
    Event.HD: ("count_e_hd", "count_note_hd"),
}


@dataclass(frozen=True)
class EvidenceTable:
    """Counts over {E, not E} x {Hp, Hd}; any cell may be ``None`` (unknown).

    Totals are derived on demand. ``case_info`` is carried along for the
    record and never enters a computation.
    """

    count_e_hp: int | None
    count_e_hd: int | None
    count_note_hp: int | None
    count_note_hd: int | None
    labels: TableLabels = field(default_factory=TableLabels)
    case_info: str = ""

    def __post_init__(self):
        for name in _CELLS.values():
            _check_count(name, getattr(self, name), allow_none=True)

    @classmethod
    def from_rows(cls, e_row, note_row, **kwargs) -> "EvidenceTable":
        """``EvidenceTable.from_rows((1, 5_000_000), (0, None))``"""
        (a, b), (c, d) = e_row, note_row
        return cls(a, b, c, d, **kwargs)

    @property
    def cells(self) -> tuple:
        return (self.count_e_hp, self.count_e_hd, self.count_note_hp, self.count_note_hd)

    @property
    def is_complete(self) -> bool:
        return None not in self.cells

    @property
    def unknown_cells(self) -> tuple[str, ...]:
        return tuple(name for name in _CELLS.values() if getattr(self, name) is None)

    def cell(self, row, column) -> int | None:
        row, column = Event.parse(row), Event.parse(column)
        name = _CELL_LOOKUP.get((row, column))
        if name is None:
            raise AxisError(f"{row.value} and {column.value} are on the same axis")
        return getattr(self, name)

    def total(self, event) -> int | None:
        """Row total for E / not E, column total for Hp / Hd."""
        first, second = _MARGIN_PARTS[Event.parse(event)]
        x, y = getattr(self, first), getattr(self, second)
        return None if x is None or y is None else x + y

    @property
    def grand_total(self) -> int | None:
        return None if not self.is_complete else sum(self.cells)

    def require_complete(self) -> "EvidenceTable":
        if not self.is_complete:
            raise IncompleteTable(f"unknown cells: {', '.join(self.unknown_cells)}")
        return self

    def with_cell(self, row, column, value: int) -> "EvidenceTable":
        name = _CELL_LOOKUP.get((Event.parse(row), Event.parse(column)))
        if name is None:
            raise AxisError(f"{row} and {column} are on the same axis")
        return replace(self, **{name: value})

    def scaled(self, k: int) -> "EvidenceTable":
        self.require_complete()
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return replace(self, **{name: getattr(self, name) * k for name in _CELLS.values()})


def conditional_probability(table: EvidenceTable, event, given) -> ExactProbability:
    """P(event | given) = count(event and given) / count(given).

    >>> t = EvidenceTable.from_rows((1, 5_000_000), (0, 500_000_000))
    >>> conditional_probability(t, "Hd", "E")
    ExactProbability(5000000, 5000001)
    """
    event, given = Event.parse(event), Event.parse(given)
    name = _CELL_LOOKUP.get((event, given))
    if name is None:
        raise AxisError(f"{event.value} and {given.value} are on the same axis")
    table.require_complete()
    first, second = _MARGIN_PARTS[given]
    denominator = getattr(table, first) + getattr(table, second)
    if denominator == 0:
        raise UndefinedConditional(f"count({given.value}) is zero")
    return ExactProbability(getattr(table, name), denominator)


def likelihood_ratio(table: EvidenceTable) -> ExactOdds:
    """P(E|Hp) / P(E|Hd); infinite when only the denominator vanishes."""
    p_hp = conditional_probability(table, Event.E, Event.HP)
    p_hd = conditional_probability(table, Event.E, Event.HD)
    return ExactOdds.from_ratio(p_hp, p_hd)


def prior_odds(table: EvidenceTable) -> ExactOdds:
    """Ratio of the Hp and Hd column totals."""
    table.require_complete()
    return ExactOdds(table.total(Event.HP), table.total(Event.HD))


def posterior_odds(table: EvidenceTable) -> ExactOdds:
    """count(E and Hp) / count(E and Hd); depends on the E row only."""
    table.require_complete()
    if table.total(Event.E) == 0:
        raise UndefinedConditional("count(E) is zero")
    return ExactOdds(table.count_e_hp, table.count_e_hd)


def bayes_update(lr: ExactOdds, prior: ExactOdds) -> ExactOdds:
    """Posterior odds as the exact product LR x prior odds."""
    return ExactOdds.parse(lr) * ExactOdds.parse(prior)


@dataclass(frozen=True)
class AnalysisResult:
    p_e_given_hp: ExactProbability
    p_e_given_hd: ExactProbability
    p_hp_given_e: ExactProbability
    p_hd_given_e: ExactProbability
    likelihood_ratio: ExactOdds
    prior_odds: ExactOdds
    posterior_odds: ExactOdds
    table: EvidenceTable | None = None

    def __post_init__(self):
        if self.p_hp_given_e + self.p_hd_given_e != 1:
            raise ValueError("P(Hp|E) + P(Hd|E) must equal 1")
        if bayes_update(self.likelihood_ratio, self.prior_odds) != self.posterior_odds:
            raise ValueError("posterior odds must equal LR x prior odds")


def analyze(table: EvidenceTable) -> AnalysisResult:
    """Every conditional, the likelihood ratio, prior and posterior odds."""
    return AnalysisResult(
        p_e_given_hp=conditional_probability(table, Event.E, Event.HP),
        p_e_given_hd=conditional_probability(table, Event.E, Event.HD),
        p_hp_given_e=conditional_probability(table, Event.HP, Event.E),
        p_hd_given_e=conditional_probability(table, Event.HD, Event.E),
        likelihood_ratio=likelihood_ratio(table),
        prior_odds=prior_odds(table),
        posterior_odds=posterior_odds(table),
        table=table,
    )
