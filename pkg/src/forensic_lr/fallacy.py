"""Detecting the prosecutor's fallacy in structured claims.

Two forms are recognised:

* **transposed conditional** - a likelihood such as P(E|Hd) is put forward as
  the posterior P(Hd|E);
* **unit prior** - a likelihood ratio is put forward as the posterior odds,
  which silently assumes prior odds of exactly one.

Detection is structural. A claim that records what it was derived from is
judged on that record, so a transposition is flagged even when the two
conditionals happen to coincide numerically. Nothing here decides whether a
number is "small" or "large"; the optional materiality threshold only annotates
a finding.

A third helper, :func:`naive_independence_combination`, reproduces the
multiply-the-rare-events argument and attaches the warnings that have to
accompany its result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .display import format_fraction, format_probability, format_sci, format_value
from .errors import IndeterminateProduct, IndeterminateRatio, NoFallacy
from .odds_core import (
    Event,
    EvidenceTable,
    ExactOdds,
    ExactProbability,
    bayes_update,
    conditional_probability,
    likelihood_ratio,
    posterior_odds,
    prior_odds,
)

DEFAULT_MATERIALITY = Fraction(1, 20)


class Quantity(str, enum.Enum):
    P_E_GIVEN_HD = "P(E|Hd)"
    P_HD_GIVEN_E = "P(Hd|E)"
    P_E_GIVEN_HP = "P(E|Hp)"
    P_HP_GIVEN_E = "P(Hp|E)"
    LIKELIHOOD_RATIO = "LikelihoodRatio"
    PRIOR_ODDS = "PriorOdds"
    POSTERIOR_ODDS = "PosteriorOdds"

    @property
    def is_probability(self) -> bool:
        return self in _CONDITIONALS

    @property
    def transposed(self) -> "Quantity | None":
        return _TRANSPOSE.get(self)


# quantity -> (event, given)
_CONDITIONALS = {
    Quantity.P_E_GIVEN_HD: (Event.E, Event.HD),
    Quantity.P_HD_GIVEN_E: (Event.HD, Event.E),
    Quantity.P_E_GIVEN_HP: (Event.E, Event.HP),
    Quantity.P_HP_GIVEN_E: (Event.HP, Event.E),
}
_TRANSPOSE = {
    Quantity.P_E_GIVEN_HD: Quantity.P_HD_GIVEN_E,
    Quantity.P_HD_GIVEN_E: Quantity.P_E_GIVEN_HD,
    Quantity.P_E_GIVEN_HP: Quantity.P_HP_GIVEN_E,
    Quantity.P_HP_GIVEN_E: Quantity.P_E_GIVEN_HP,
}


def table_value(quantity: Quantity, table: EvidenceTable):
    """The true value of ``quantity`` on a complete table."""
    quantity = Quantity(quantity)
    if quantity.is_probability:
        return conditional_probability(table, *_CONDITIONALS[quantity])
    if quantity is Quantity.LIKELIHOOD_RATIO:
        return likelihood_ratio(table)
    if quantity is Quantity.PRIOR_ODDS:
        return prior_odds(table)
    return posterior_odds(table)


class Pattern(str, enum.Enum):
    TRANSPOSED_CONDITIONAL = "TransposedConditional"
    UNIT_PRIOR_ASSUMPTION = "UnitPriorAssumption"
    NAIVE_INDEPENDENCE = "NaiveIndependence"
    MISSTATED = "Misstated"
    NONE = "None"


@dataclass(frozen=True)
class Claim:
    """Something a party asserted about one quantity.

    ``derived_from`` records what the asserter actually computed, when known.
    ``reported_lr`` is the likelihood ratio the asserter was given; it is only
    meaningful for posterior-odds claims.
    """

    quantity: Quantity
    value: Fraction | ExactOdds
    derived_from: Quantity | None = None
    asserter: str = ""
    narrative: str = ""
    reported_lr: ExactOdds | None = None

    def __post_init__(self):
        quantity = Quantity(self.quantity)
        object.__setattr__(self, "quantity", quantity)
        if self.derived_from is not None:
            object.__setattr__(self, "derived_from", Quantity(self.derived_from))
        if quantity.is_probability:
            value = ExactOdds.parse(self.value) if isinstance(self.value, str) else self.value
            if isinstance(value, ExactOdds):
                value = value.to_fraction()
            object.__setattr__(self, "value", ExactProbability(value))
        else:
            object.__setattr__(self, "value", ExactOdds.parse(self.value))
        if self.reported_lr is not None:
            object.__setattr__(self, "reported_lr", ExactOdds.parse(self.reported_lr))


def _finite_positive(value) -> Fraction | None:
    if isinstance(value, ExactOdds):
        if value.is_infinite:
            return None
        value = value.to_fraction()
    return Fraction(value) if value > 0 else None


def _distortion(asserted, correct) -> Fraction | None:
    a, c = _finite_positive(asserted), _finite_positive(correct)
    if a is None or c is None:
        return None
    return a / c


@dataclass(frozen=True)
class FallacyFinding:
    pattern: Pattern
    offending_claim: Claim
    correct_quantity: Quantity
    correct_value: Fraction | ExactOdds | None
    explanation: str
    distortion: Fraction | None = None
    context: tuple = ()  # (name, value) pairs used by corrected_statement

    def __post_init__(self):
        if self.pattern is Pattern.NONE and self.correct_value != self.offending_claim.value:
            raise ValueError("a finding without a fallacy must confirm the asserted value")

    @property
    def is_fallacy(self) -> bool:
        return self.pattern is not Pattern.NONE

    def is_material(self, threshold: Fraction = DEFAULT_MATERIALITY) -> bool:
        """Distortion beyond ``1/threshold`` or under ``threshold``."""
        if self.distortion is None:
            return False
        return self.distortion > 1 / threshold or self.distortion < threshold


def _fmt(quantity: Quantity, value) -> str:
    if value is None:
        return "unknown"
    if quantity.is_probability:
        return format_probability(value)
    return format_value(value)


def detect_transposed_conditional(claim: Claim, table: EvidenceTable | None) -> FallacyFinding:
    """Check a conditional-probability claim for a flipped conditional.

    Flags the claim when it records being derived from the transposed
    conditional, or when its value equals the transposed conditional's value
    but not its own. With ``table=None`` only the structural test is possible
    and no corrected value is reported.
    """
    q = claim.quantity
    flipped = q.transposed
    if flipped is None:
        raise ValueError(f"{q.value} is not a conditional probability")
    structural = claim.derived_from is flipped

    if table is None:
        if structural:
            return FallacyFinding(
                Pattern.TRANSPOSED_CONDITIONAL, claim, q, None,
                f"{q.value} was obtained from {flipped.value}; the two are not "
                f"interchangeable and {q.value} cannot be recovered without the counts.",
            )
        return FallacyFinding(
            Pattern.NONE, claim, q, claim.value,
            f"no transposition recorded; {q.value} cannot be checked without the counts.",
        )

    true_value = table_value(q, table)
    flipped_value = table_value(flipped, table)
    numeric = claim.value == flipped_value and claim.value != true_value
    context = ((q.value, true_value), (flipped.value, flipped_value))
    if structural or numeric:
        why = "was derived from" if structural else "equals"
        return FallacyFinding(
            Pattern.TRANSPOSED_CONDITIONAL, claim, q, true_value,
            f"asserted {q.value} = {_fmt(q, claim.value)} {why} {flipped.value} = "
            f"{_fmt(flipped, flipped_value)}; the counts give {q.value} = {_fmt(q, true_value)}.",
            distortion=_distortion(claim.value, true_value),
            context=context,
        )
    if claim.value == true_value:
        return FallacyFinding(
            Pattern.NONE, claim, q, true_value,
            f"{q.value} = {_fmt(q, true_value)} agrees with the counts.",
            distortion=_distortion(claim.value, true_value), context=context,
        )
    return FallacyFinding(
        Pattern.MISSTATED, claim, q, true_value,
        f"asserted {q.value} = {_fmt(q, claim.value)} but the counts give "
        f"{_fmt(q, true_value)}; the error is not a transposition.",
        distortion=_distortion(claim.value, true_value), context=context,
    )


def detect_unit_prior(reported_lr, claim: Claim, table: EvidenceTable | None = None) -> FallacyFinding:
    """Check a posterior-odds claim for the LR-as-posterior error.

    The prior implied by the claim is ``asserted posterior / reported LR``.
    It is flagged when that prior is exactly one while the table's prior is
    not. Without a table, an implied unit prior is flagged conditionally and
    no corrected value is given.
    """
    if claim.quantity is not Quantity.POSTERIOR_ODDS:
        raise ValueError("unit-prior detection applies to posterior-odds claims only")
    lr = ExactOdds.parse(reported_lr)
    if lr.is_zero or lr.is_infinite:
        raise IndeterminateRatio(f"reported LR must be finite and positive, got {lr}")
    try:
        implied_prior = claim.value / lr
    except IndeterminateProduct as exc:
        raise IndeterminateRatio(str(exc)) from exc
    q = Quantity.POSTERIOR_ODDS

    if table is None:
        if implied_prior == 1:
            return FallacyFinding(
                Pattern.UNIT_PRIOR_ASSUMPTION, claim, q, None,
                f"asserted posterior odds {format_value(claim.value)} equal the reported LR; "
                "this presumes prior odds of 1, which has not been established.",
                context=(("LR", lr), ("implied prior", implied_prior)),
            )
        return FallacyFinding(
            Pattern.NONE, claim, q, claim.value,
            f"asserted posterior implies prior odds {format_fraction(implied_prior)}; "
            "cannot be checked without the counts.",
            context=(("LR", lr), ("implied prior", implied_prior)),
        )

    table_prior = prior_odds(table)
    correct = bayes_update(lr, table_prior)
    context = (("LR", lr), ("prior", table_prior), ("posterior", correct),
               ("implied prior", implied_prior))
    distortion = _distortion(claim.value, correct)
    if implied_prior == 1 and table_prior != 1:
        return FallacyFinding(
            Pattern.UNIT_PRIOR_ASSUMPTION, claim, q, correct,
            f"asserted posterior odds {format_value(claim.value)} equal the LR, i.e. prior odds "
            f"of 1 were assumed; the prior odds are {format_fraction(table_prior)}, so the "
            f"posterior odds are {format_fraction(correct)} ({format_sci(correct)}).",
            distortion=distortion, context=context,
        )
    if claim.value == correct:
        return FallacyFinding(
            Pattern.NONE, claim, q, correct,
            f"posterior odds {format_fraction(correct)} = LR x prior odds.",
            distortion=distortion, context=context,
        )
    return FallacyFinding(
        Pattern.MISSTATED, claim, q, correct,
        f"asserted posterior odds {format_fraction(claim.value)} differ from LR x prior odds "
        f"= {format_fraction(correct)}.",
        distortion=distortion, context=context,
    )


def check_value(claim: Claim, table: EvidenceTable) -> FallacyFinding:
    """Plain value check for claims that have no dedicated detector."""
    true_value = table_value(claim.quantity, table)
    q = claim.quantity
    if claim.value == true_value:
        return FallacyFinding(Pattern.NONE, claim, q, true_value,
                              f"{q.value} = {_fmt(q, true_value)} agrees with the counts.",
                              distortion=_distortion(claim.value, true_value))
    return FallacyFinding(Pattern.MISSTATED, claim, q, true_value,
                          f"asserted {q.value} = {_fmt(q, claim.value)} but the counts give "
                          f"{_fmt(q, true_value)}.",
                          distortion=_distortion(claim.value, true_value))


def check_claim(claim: Claim, table: EvidenceTable | None) -> FallacyFinding:
    """Route a claim to the detector that fits its quantity."""
    if claim.quantity.is_probability:
        return detect_transposed_conditional(claim, table)
    if claim.quantity is Quantity.POSTERIOR_ODDS:
        lr = claim.reported_lr
        if lr is None:
            if table is None:
                raise ValueError("a posterior-odds claim needs a reported LR or a table")
            lr = likelihood_ratio(table)
        return detect_unit_prior(lr, claim, table)
    if table is None:
        return FallacyFinding(Pattern.NONE, claim, claim.quantity, claim.value,
                              f"{claim.quantity.value} cannot be checked without the counts.")
    return check_value(claim, table)


INDEPENDENCE_WARNING = (
    "the combined figure assumes the events are independent; dependent events "
    "(shared genetic or environmental causes, for instance) can make it far too small"
)
TRANSPOSITION_WARNING = (
    "the combined figure is a probability of the evidence under the defence "
    "hypothesis, P(E|Hd); presenting it as the probability that the defence "
    "hypothesis is true, P(Hd|E), transposes the conditional"
)


@dataclass(frozen=True)
class IndependenceResult:
    per_event_probability: ExactProbability
    n_events: int
    value: ExactProbability
    warnings: tuple[str, ...] = (INDEPENDENCE_WARNING, TRANSPOSITION_WARNING)


def naive_independence_combination(per_event_probability, n_events: int) -> IndependenceResult:
    """``p ** n`` with the warnings that must travel with it.

    >>> naive_independence_combination(Fraction(1, 8500), 2).value
    ExactProbability(1, 72250000)
    """
    p = ExactProbability(per_event_probability)
    if p == 0:
        raise ValueError("per-event probability must be positive")
    if isinstance(n_events, bool) or not isinstance(n_events, int) or n_events < 1:
        raise ValueError("n_events must be a positive integer")
    return IndependenceResult(p, n_events, ExactProbability(p ** n_events))


def independence_finding(result: IndependenceResult, asserter: str = "") -> FallacyFinding:
    """Wrap a naive product as a finding so it can be reported with the others."""
    claim = Claim(
        Quantity.P_E_GIVEN_HD, result.value, asserter=asserter,
        narrative=f"({format_fraction(result.per_event_probability)})^{result.n_events}",
    )
    return FallacyFinding(
        Pattern.NAIVE_INDEPENDENCE, claim, Quantity.P_E_GIVEN_HD, None,
        "; ".join(result.warnings) + ".",
        context=(("per-event probability", result.per_event_probability),
                 ("events", result.n_events), ("product", result.value)),
    )


def corrected_statement(finding: FallacyFinding) -> str:
    """A correction phrased about the evidence, never about guilt or innocence."""
    if not finding.is_fallacy:
        raise NoFallacy("nothing to correct: the claim agrees with the counts")
    ctx = dict(finding.context)
    claim = finding.offending_claim

    if finding.pattern is Pattern.UNIT_PRIOR_ASSUMPTION:
        lr = format_value(ctx["LR"])
        if finding.correct_value is None:
            return (f"The likelihood ratio of {lr} is not the posterior odds. It must be "
                    "multiplied by the decision-maker's prior odds, which are not 1 in general.")
        return (f"The likelihood ratio of {lr} must be multiplied by the prior odds "
                f"{format_fraction(ctx['prior'])}, giving posterior odds "
                f"{format_fraction(ctx['posterior'])} ({format_sci(ctx['posterior'])}), "
                f"not {format_value(claim.value)}.")

    if finding.pattern is Pattern.TRANSPOSED_CONDITIONAL:
        q = finding.correct_quantity
        flipped = q.transposed
        if finding.correct_value is None:
            return (f"{claim.quantity.value} was reported using {flipped.value}. The probability "
                    "of the evidence under a hypothesis is not the probability of that "
                    "hypothesis given the evidence.")
        return (f"{q.value} is {format_probability(finding.correct_value)}, not "
                f"{format_probability(claim.value)}. The latter is {flipped.value} = "
                f"{format_probability(ctx[flipped.value])}, the probability of the evidence "
                "under a hypothesis, which is not the probability of that hypothesis given "
                "the evidence.")

    if finding.pattern is Pattern.NAIVE_INDEPENDENCE:
        return (f"{format_fraction(ctx['per-event probability'])} raised to the power "
                f"{ctx['events']} gives {format_fraction(ctx['product'])} only if the events are "
                f"independent. Warnings: {INDEPENDENCE_WARNING}; {TRANSPOSITION_WARNING}.")

    return (f"{finding.correct_quantity.value} is {_fmt(finding.correct_quantity, finding.correct_value)}, "
            f"not {_fmt(claim.quantity, claim.value)}.")
