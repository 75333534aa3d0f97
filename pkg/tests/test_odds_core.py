import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from forensic_lr import (
    AxisError,
    Event,
    EvidenceTable,
    ExactOdds,
    ExactProbability,
    IncompleteTable,
    IndeterminateProduct,
    IndeterminateRatio,
    UndefinedConditional,
    analyze,
    bayes_update,
    conditional_probability,
    likelihood_ratio,
    posterior_odds,
    prior_odds,
)
from helpers import ZIPPER, ref_conditionals, ref_lr, ref_prior

counts = st.integers(min_value=0, max_value=10**12)
positive = st.integers(min_value=1, max_value=10**12)


@pytest.fixture
def zipper():
    return EvidenceTable(*ZIPPER)


# ExactProbability


def test_probability_is_canonical_fraction():
    p = ExactProbability(5_000_000, 505_000_000)
    assert (p.numerator, p.denominator) == (1, 101)
    assert p == Fraction(1, 101)


@pytest.mark.parametrize("bad", [Fraction(-1, 2), Fraction(3, 2), 2])
def test_probability_range(bad):
    with pytest.raises(ValueError):
        ExactProbability(bad)


# ExactOdds


def test_odds_reduce_to_lowest_terms():
    assert ExactOdds(6, 4) == ExactOdds(3, 2)
    assert (ExactOdds(6, 4).numerator, ExactOdds(6, 4).denominator) == (3, 2)


def test_odds_zero_over_zero_is_rejected():
    with pytest.raises(IndeterminateRatio):
        ExactOdds(0, 0)


def test_infinite_odds_are_a_value():
    inf = ExactOdds(7, 0)
    assert inf.is_infinite
    assert inf == ExactOdds.infinite()
    assert inf > ExactOdds(10**30)
    assert float(inf) == math.inf
    assert str(inf) == "inf"
    assert inf.reciprocal() == 0


@pytest.mark.parametrize("bad", [(-1, 2), (1, -2), (1.5, 1), (True, 1)])
def test_odds_reject_bad_components(bad):
    with pytest.raises((TypeError, ValueError)):
        ExactOdds(*bad)


@pytest.mark.parametrize(
    "text, expected",
    [("101", ExactOdds(101)), ("1/8500", ExactOdds(1, 8500)), ("inf", ExactOdds(1, 0)),
     ("5,000", ExactOdds(5000)), ("0.25", ExactOdds(1, 4)), ("2e-7", ExactOdds(1, 5_000_000))],
)
def test_odds_parse(text, expected):
    assert ExactOdds.parse(text) == expected


def test_odds_compare_with_numbers():
    assert ExactOdds(101) == 101
    assert ExactOdds(1, 2) == Fraction(1, 2)
    assert ExactOdds(1, 3) < Fraction(1, 2)
    assert hash(ExactOdds(4, 2)) == hash(2)


@given(positive, positive, positive, positive)
def test_odds_multiplication_matches_fractions(a, b, c, d):
    assert (ExactOdds(a, b) * ExactOdds(c, d)).to_fraction() == Fraction(a, b) * Fraction(c, d)


def test_zero_times_infinity():
    with pytest.raises(IndeterminateProduct):
        ExactOdds(0) * ExactOdds.infinite()
    with pytest.raises(IndeterminateProduct):
        bayes_update(ExactOdds.infinite(), ExactOdds(0))


def test_infinity_times_positive_and_zero_times_finite():
    assert bayes_update(ExactOdds.infinite(), ExactOdds(1, 10)).is_infinite
    assert bayes_update(ExactOdds(0), ExactOdds(10**9)) == 0


# EvidenceTable


def test_unknown_cells_allowed_at_construction():
    t = EvidenceTable.from_rows((1, 5_000_000), (0, None))
    assert not t.is_complete
    assert t.unknown_cells == ("count_note_hd",)
    assert t.total(Event.E) == 5_000_001
    assert t.total(Event.HD) is None
    assert t.grand_total is None


def test_totals_are_derived(zipper):
    assert zipper.total("E") == 5_000_001
    assert zipper.total("notE") == 500_000_000
    assert zipper.total("Hp") == 1
    assert zipper.total("Hd") == 505_000_000
    assert zipper.grand_total == 505_000_001


@pytest.mark.parametrize("bad", [-3, 1.0, "5"])
def test_table_rejects_bad_cells(bad):
    with pytest.raises((TypeError, ValueError)):
        EvidenceTable(bad, 1, 1, 1)


def test_case_info_is_inert(zipper):
    from dataclasses import replace

    annotated = replace(zipper, case_info="suspect lives near the scene")
    assert analyze(annotated).posterior_odds == analyze(zipper).posterior_odds


# conditional_probability


def test_zipper_p_e_given_hd(zipper):
    assert conditional_probability(zipper, "E", "Hd") == Fraction(5_000_000, 505_000_000)


def test_zipper_p_hd_given_e(zipper):
    assert conditional_probability(zipper, "Hd", "E") == Fraction(5_000_000, 5_000_001)


def test_single_nonzero_cell_forces_one():
    assert conditional_probability(EvidenceTable(1, 0, 0, 0), "E", "Hp") == 1


def test_conditional_errors(zipper):
    with pytest.raises(IncompleteTable):
        conditional_probability(EvidenceTable(1, 2, 3, None), "E", "Hp")
    with pytest.raises(UndefinedConditional):
        conditional_probability(EvidenceTable(0, 1, 0, 1), "E", "Hp")
    with pytest.raises(AxisError):
        conditional_probability(zipper, "E", "notE")
    with pytest.raises(AxisError):
        conditional_probability(zipper, "Hp", "Hd")


def test_transposition_equality_iff_diagonal_match_exhaustive():
    # brute force over every table with cells in [0, 6]; the acceptance suite
    # repeats this over [0, 20]
    for a, b, c, d in itertools.product(range(7), repeat=4):
        if b == 0 or b + d == 0 or a + b == 0:
            continue
        t = EvidenceTable(a, b, c, d)
        same = conditional_probability(t, "E", "Hd") == conditional_probability(t, "Hd", "E")
        assert same == (a == d), (a, b, c, d)


@given(positive, counts, counts, counts)
def test_conditionals_match_reference(a, b, c, d):
    t = EvidenceTable(a, b, c, d)
    if b + d == 0:
        return
    got = (
        conditional_probability(t, "E", "Hp"),
        conditional_probability(t, "E", "Hd"),
        conditional_probability(t, "Hp", "E"),
        conditional_probability(t, "Hd", "E"),
    )
    assert got == ref_conditionals(a, b, c, d)


@given(counts, counts, counts, counts)
def test_complement(a, b, c, d):
    if a + b == 0:
        return
    t = EvidenceTable(a, b, c, d)
    assert conditional_probability(t, "Hp", "E") + conditional_probability(t, "Hd", "E") == 1


# likelihood_ratio / prior_odds / posterior_odds


def test_zipper_lr(zipper):
    assert likelihood_ratio(zipper) == 101


def test_lr_is_one_when_not_e_row_empty():
    assert likelihood_ratio(EvidenceTable(7, 3, 0, 0)) == 1


def test_lr_with_guess_one_billion():
    assert likelihood_ratio(EvidenceTable(1, 5_000_000, 0, 10**9)) == 201


def test_lr_infinite_when_evidence_impossible_under_hd():
    assert likelihood_ratio(EvidenceTable(1, 0, 0, 10)).is_infinite


def test_lr_zero_over_zero():
    with pytest.raises(IndeterminateRatio):
        likelihood_ratio(EvidenceTable(0, 0, 1, 1))


def test_lr_undefined_column():
    with pytest.raises(UndefinedConditional):
        likelihood_ratio(EvidenceTable(0, 1, 0, 1))


def test_zipper_prior(zipper):
    assert prior_odds(zipper) == ExactOdds(1, 505_000_000)


def test_prior_with_zero_guess():
    assert prior_odds(EvidenceTable(1, 5_000_000, 0, 0)) == ExactOdds(1, 5_000_000)


def test_prior_equal_columns():
    assert prior_odds(EvidenceTable(3, 3, 2, 2)) == 1


def test_prior_errors():
    with pytest.raises(IncompleteTable):
        prior_odds(EvidenceTable(1, 1, 1, None))
    with pytest.raises(IndeterminateRatio):
        prior_odds(EvidenceTable(0, 0, 0, 0))


def test_zipper_posterior(zipper):
    assert posterior_odds(zipper) == ExactOdds(1, 5_000_000)


def test_posterior_equals_lr_under_unit_prior():
    t = EvidenceTable(3, 1, 2, 4)
    assert prior_odds(t) == 1
    assert posterior_odds(t) == likelihood_ratio(t)


def test_posterior_errors():
    with pytest.raises(UndefinedConditional):
        posterior_odds(EvidenceTable(0, 0, 1, 1))


# bayes_update


def test_bayes_update_zipper():
    assert bayes_update(ExactOdds(101), ExactOdds(1, 505_000_000)) == ExactOdds(1, 5_000_000)


def test_bayes_update_identity():
    p = ExactOdds(17, 23)
    assert bayes_update(ExactOdds(1), p) == p


def test_bayes_update_last_sweep_row():
    # oracle: plain Fraction product
    expected = Fraction(200_001) * Fraction(1, 1_000_005_000_000)
    assert expected == Fraction(1, 5_000_000)
    assert bayes_update(ExactOdds(200_001), ExactOdds(1, 1_000_005_000_000)).to_fraction() == expected


# analyze and the identities


def test_analyze_zipper(zipper):
    r = analyze(zipper)
    assert r.p_e_given_hd == Fraction(1, 101)
    assert r.p_hd_given_e == Fraction(5_000_000, 5_000_001)
    assert r.likelihood_ratio == 101
    assert r.prior_odds == ExactOdds(1, 505_000_000)
    assert r.posterior_odds == ExactOdds(1, 5_000_000)


def test_analyze_symmetric_table():
    r = analyze(EvidenceTable(1, 1, 1, 1))
    assert r.p_e_given_hp == r.p_e_given_hd == r.p_hp_given_e == r.p_hd_given_e == Fraction(1, 2)
    assert r.likelihood_ratio == r.prior_odds == r.posterior_odds == 1


@given(*(st.integers(min_value=1, max_value=100) for _ in range(4)))
def test_chain_identity_small(a, b, c, d):
    t = EvidenceTable(a, b, c, d)
    assert posterior_odds(t) == bayes_update(likelihood_ratio(t), prior_odds(t))
    assert likelihood_ratio(t).to_fraction() == ref_lr(a, b, c, d)
    assert prior_odds(t).to_fraction() == ref_prior(a, b, c, d)


@given(positive, positive, counts, counts)
def test_posterior_depends_only_on_e_row(a, b, c, d):
    t = EvidenceTable(a, b, c, d)
    assert posterior_odds(t) == ExactOdds(a, b)
    assert posterior_odds(t) == bayes_update(likelihood_ratio(t), prior_odds(t))


@given(positive, positive, counts, counts, st.integers(min_value=1, max_value=10**6))
def test_scaling_invariance(a, b, c, d, k):
    t = EvidenceTable(a, b, c, d)
    before, after = analyze(t), analyze(t.scaled(k))
    for name in ("p_e_given_hp", "p_e_given_hd", "p_hp_given_e", "p_hd_given_e",
                 "likelihood_ratio", "prior_odds", "posterior_odds"):
        assert getattr(after, name) == getattr(before, name)
