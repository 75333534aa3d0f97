import csv
import io
import json
from fractions import Fraction

import pytest

from forensic_lr import (
    Claim,
    EvidenceTable,
    Quantity,
    analyze,
    check_claim,
    naive_independence_combination,
    render_report,
    sweep,
    verbal_equivalent,
)
from helpers import ZIPPER

TABLE = EvidenceTable(*ZIPPER)
BASE = EvidenceTable.from_rows((1, 5_000_000), (0, None))


def csv_rows(data: bytes):
    return list(csv.reader(io.StringIO(data.decode("utf-8"), newline="")))


def test_analysis_text_grid():
    text = render_report(analyze(TABLE), "text").decode()
    for needle in ("5,000,000", "500,000,000", "505,000,001", "1/505,000,000", "1.98e-9", "0.99", "9.90e-3"):
        assert needle in text


def test_analysis_exact_only():
    text = render_report(analyze(TABLE), "text", exact=True).decode()
    assert "1/5,000,000" in text
    assert "2.00e-7" not in text and "approx" not in text


def test_analysis_json():
    doc = json.loads(render_report(analyze(TABLE), "json", verbal=verbal_equivalent(101)))
    q = doc["quantities"]
    assert q["likelihood_ratio"]["exact"] == "101"
    assert q["posterior_odds"] == {"exact": "1/5000000", "numerator": "1", "denominator": "5000000",
                                   "sci": "2.00e-7"}
    assert doc["verbal"]["label"] == "moderately strong"
    assert doc["table"]["note_hd"] == "500000000"


def test_rounded_prior_annotation():
    doc = json.loads(render_report(analyze(TABLE), "json", rounded_prior_sig=1))
    assert doc["rounded_prior_product"]["posterior"]["exact"] == "101/500000000"
    assert "2.02e-7" in render_report(analyze(TABLE), "text", rounded_prior_sig=1).decode()


def test_sweep_csv():
    rows = csv_rows(render_report(sweep(BASE), "csv"))
    header, body = rows[0], rows[1:]
    assert len(body) == 6
    post = header.index("posterior_odds")
    assert {r[post] for r in body} == {"2.00e-7"}
    assert [r[header.index("likelihood_ratio")] for r in body] == ["1", "3", "21", "101", "201", "200001"]
    assert [r[header.index("prior_odds")] for r in body] == [
        "2.00e-7", "6.67e-8", "9.52e-9", "1.98e-9", "9.95e-10", "1.00e-12"]


def test_sweep_csv_uses_crlf():
    assert render_report(sweep(BASE), "csv").count(b"\r\n") == 7


def test_sweep_text_mentions_exact_lr_and_invariance():
    text = render_report(sweep(BASE), "text").decode()
    assert "200,001" in text and "200,000 " not in text
    assert "invariant across guesses: yes" in text


def test_sweep_json_single_row_has_no_invariance():
    doc = json.loads(render_report(sweep(BASE, [1]), "json"))
    assert "posterior_invariant" not in doc


def test_findings_formats():
    findings = [check_claim(Claim(Quantity.POSTERIOR_ODDS, 101), TABLE),
                check_claim(Claim(Quantity.LIKELIHOOD_RATIO, 101), TABLE)]
    doc = json.loads(render_report(findings, "json"))
    assert doc["fallacies"] == 1
    assert doc["findings"][0]["pattern"] == "UnitPriorAssumption"
    assert "corrected_statement" not in doc["findings"][1]
    rows = csv_rows(render_report(findings, "csv"))
    assert [r[3] for r in rows[1:]] == ["UnitPriorAssumption", "None"]
    assert "1 of 2 claim(s) flagged" in render_report(findings, "text").decode()


def test_independence_text_has_both_warnings():
    text = render_report(naive_independence_combination(Fraction(1, 8500), 2), "text").decode()
    assert "1/72,250,000" in text
    assert text.count("WARNING") == 2


def test_incomplete_table_renders_question_marks():
    assert "???" in render_report(BASE, "text").decode()
    assert "unknown" in render_report(BASE, "csv").decode()


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_deterministic(fmt):
    assert render_report(sweep(BASE), fmt) == render_report(sweep(BASE), fmt)


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report(analyze(TABLE), "xml")
