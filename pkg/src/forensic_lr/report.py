"""Text, CSV and JSON renderings of analysis results.

Every renderer is deterministic: identical inputs give byte-identical output.
Numbers appear both as exact fractions and at three significant figures,
unless ``exact=True`` asks for fractions alone.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from functools import singledispatch

from .display import format_fixed, format_fraction, format_int, format_sci, format_value, round_significant
from .fallacy import FallacyFinding, IndependenceResult, corrected_statement
from .odds_core import AnalysisResult, Event, EvidenceTable, ExactOdds
from .sensitivity import GuessSweep, invariance_check
from .verbal_scale import VerbalStatement

FORMATS = ("text", "csv", "json")


def _exact(x) -> str:
    return format_fraction(x, grouped=False)


def _number_json(x) -> dict:
    if isinstance(x, ExactOdds):
        num, den = x.numerator, x.denominator
    else:
        f = Fraction(x)
        num, den = f.numerator, f.denominator
    return {"exact": _exact(x), "numerator": str(num), "denominator": str(den), "sci": format_sci(x)}


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerows(rows)
    return buf.getvalue()


def _align(rows, right_from: int = 1) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [c.ljust(w) if i < right_from else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))]
        lines.append("  ".join(cells).rstrip())
    return lines


def _cell_text(v) -> str:
    return "???" if v is None else format_int(v)


def table_grid(table: EvidenceTable) -> list[str]:
    """The count table with totals; unknown cells and their totals print as ``???``."""
    lab = table.labels
    rows = [["", "Hp", "Hd", "Total"]]
    for ev, name in ((Event.E, "E"), (Event.NOT_E, "¬E")):
        rows.append([name, _cell_text(table.cell(ev, Event.HP)), _cell_text(table.cell(ev, Event.HD)),
                     _cell_text(table.total(ev))])
    rows.append(["Total", _cell_text(table.total(Event.HP)), _cell_text(table.total(Event.HD)),
                 _cell_text(table.grand_total)])
    lines = _align(rows)
    pairs = (("E ", "E", lab.e), ("¬E", "¬E", lab.not_e), ("Hp", "Hp", lab.hp), ("Hd", "Hd", lab.hd))
    # symbols that carry no description are left out of the legend
    return lines + [f"  {key} = {text}" for key, symbol, text in pairs if text != symbol]


def _table_json(table: EvidenceTable) -> dict:
    s = lambda v: None if v is None else str(v)  # noqa: E731
    return {
        "e_hp": s(table.count_e_hp), "e_hd": s(table.count_e_hd),
        "note_hp": s(table.count_note_hp), "note_hd": s(table.count_note_hd),
        "labels": {"E": table.labels.e, "notE": table.labels.not_e,
                   "Hp": table.labels.hp, "Hd": table.labels.hd},
    }


_ANALYSIS_FIELDS = (
    ("P(E|Hp)", "p_e_given_hp"),
    ("P(E|Hd)", "p_e_given_hd"),
    ("P(Hp|E)", "p_hp_given_e"),
    ("P(Hd|E)", "p_hd_given_e"),
    ("likelihood ratio", "likelihood_ratio"),
    ("prior odds", "prior_odds"),
    ("posterior odds", "posterior_odds"),
)


def _verbal_json(v: VerbalStatement) -> dict:
    return {"lr": _exact(v.lr), "label": v.label, "supports": v.supports, "text": v.text}


@singledispatch
def _render(obj, fmt: str, exact: bool, **opts) -> str:
    raise TypeError(f"cannot render {type(obj).__name__}")


@_render.register
def _(obj: AnalysisResult, fmt, exact, verbal=None, rounded_prior_sig=None, **opts):
    values = [(name, getattr(obj, attr)) for name, attr in _ANALYSIS_FIELDS]
    rounded = None
    if rounded_prior_sig is not None and not obj.prior_odds.is_infinite and not obj.likelihood_ratio.is_infinite:
        r_prior = round_significant(obj.prior_odds, rounded_prior_sig)
        rounded = (r_prior, obj.likelihood_ratio.to_fraction() * r_prior)

    if fmt == "json":
        doc = {"type": "analysis"}
        if obj.table is not None:
            doc["table"] = _table_json(obj.table)
        doc["quantities"] = {attr: _number_json(getattr(obj, attr)) for _, attr in _ANALYSIS_FIELDS}
        if verbal is not None:
            doc["verbal"] = _verbal_json(verbal)
        if rounded is not None:
            doc["rounded_prior_product"] = {"significant_figures": rounded_prior_sig,
                                            "prior": _number_json(rounded[0]),
                                            "posterior": _number_json(rounded[1])}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    if fmt == "csv":
        header = ["quantity", "exact"] if exact else ["quantity", "exact", "sci"]
        rows = [header]
        for name, v in values:
            rows.append([name, _exact(v)] if exact else [name, _exact(v), format_sci(v)])
        if verbal is not None:
            rows.append(["verbal", verbal.text] if exact else ["verbal", verbal.text, ""])
        return _csv(rows)

    lines = []
    if obj.table is not None:
        lines += ["Evidence table"] + table_grid(obj.table) + [""]
    grid = [["quantity", "exact"] if exact else ["quantity", "exact", "approx"]]
    for i, (name, v) in enumerate(values):
        # the first four are probabilities
        approx = format_fixed(v) if i < 4 and v >= Fraction(1, 100) else format_sci(v)
        grid.append([name, format_fraction(v)] if exact else [name, format_fraction(v), approx])
    lines += _align(grid)
    lines.append("")
    lines.append(f"posterior odds = likelihood ratio x prior odds = "
                 f"{format_value(obj.likelihood_ratio)} x {format_fraction(obj.prior_odds)}"
                 f" = {format_fraction(obj.posterior_odds)}")
    if rounded is not None:
        lines.append(f"with the prior rounded to {rounded_prior_sig} significant figure(s): "
                     f"{format_value(obj.likelihood_ratio)} x {format_sci(rounded[0], rounded_prior_sig)}"
                     f" = {format_sci(rounded[1])} (rounding artefact; the exact value is above)")
    if verbal is not None:
        lines.append(f"verbal equivalent: {verbal.text}")
    return "\n".join(lines) + "\n"


@_render.register
def _(obj: GuessSweep, fmt, exact, **opts):
    inv = invariance_check(obj) if len(obj.rows) >= 2 else None

    if fmt == "json":
        doc = {
            "type": "sweep",
            "base_table": _table_json(obj.base_table),
            "rows": [
                {"guess": str(r.guess), "likelihood_ratio": _number_json(r.likelihood_ratio),
                 "prior_odds": _number_json(r.prior_odds), "posterior_odds": _number_json(r.posterior_odds)}
                for r in obj.rows
            ],
        }
        if inv is not None:
            doc["posterior_invariant"] = inv.holds
            doc["witness"] = None if inv.holds else [str(w.guess) for w in inv.witness]
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    if fmt == "csv":
        if exact:
            rows = [["guess", "likelihood_ratio", "prior_odds", "posterior_odds"]]
            rows += [[str(r.guess), _exact(r.likelihood_ratio), _exact(r.prior_odds), _exact(r.posterior_odds)]
                     for r in obj.rows]
        else:
            rows = [["guess", "likelihood_ratio", "prior_odds", "posterior_odds",
                     "likelihood_ratio_exact", "prior_odds_exact", "posterior_odds_exact"]]
            rows += [[str(r.guess), format_value(r.likelihood_ratio, grouped=False), format_sci(r.prior_odds),
                      format_sci(r.posterior_odds), _exact(r.likelihood_ratio), _exact(r.prior_odds),
                      _exact(r.posterior_odds)] for r in obj.rows]
        return _csv(rows)

    lines = ["Evidence table (unknown cell to be guessed)"] + table_grid(obj.base_table) + [""]
    if exact:
        grid = [["guess", "LR", "prior odds", "posterior odds"]]
        grid += [[format_int(r.guess), format_fraction(r.likelihood_ratio), format_fraction(r.prior_odds),
                  format_fraction(r.posterior_odds)] for r in obj.rows]
    else:
        grid = [["guess", "LR", "prior odds", "posterior odds", "exact posterior"]]
        grid += [[format_int(r.guess), format_value(r.likelihood_ratio), format_sci(r.prior_odds),
                  format_sci(r.posterior_odds), format_fraction(r.posterior_odds)] for r in obj.rows]
    lines += _align(grid)
    lines.append("")
    lines.append("Likelihood ratios are exact; integral values are never rounded (200,001 stays 200,001).")
    if inv is not None:
        if inv.holds:
            lines.append(f"posterior odds invariant across guesses: yes "
                         f"({format_fraction(obj.rows[0].posterior_odds)})")
        else:
            a, b = inv.witness
            lines.append(f"posterior odds invariant across guesses: no (guess {format_int(a.guess)} gives "
                         f"{format_fraction(a.posterior_odds)}, guess {format_int(b.guess)} gives "
                         f"{format_fraction(b.posterior_odds)})")
    return "\n".join(lines) + "\n"


def _finding_json(f: FallacyFinding) -> dict:
    c = f.offending_claim
    doc = {
        "pattern": f.pattern.value,
        "claim": {"quantity": c.quantity.value, "value": _exact(c.value),
                  "derived_from": None if c.derived_from is None else c.derived_from.value,
                  "asserter": c.asserter},
        "correct_quantity": f.correct_quantity.value,
        "correct_value": None if f.correct_value is None else _number_json(f.correct_value),
        "distortion": None if f.distortion is None else _exact(f.distortion),
        "material": f.is_material(),
        "explanation": f.explanation,
    }
    if f.is_fallacy:
        doc["corrected_statement"] = corrected_statement(f)
    return doc


def _findings(obj, fmt, exact):
    findings = list(obj)
    if fmt == "json":
        doc = {"type": "findings", "fallacies": sum(f.is_fallacy for f in findings),
               "findings": [_finding_json(f) for f in findings]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        rows = [["asserter", "quantity", "asserted", "pattern", "correct_value", "distortion", "material"]]
        for f in findings:
            c = f.offending_claim
            rows.append([c.asserter, c.quantity.value, _exact(c.value), f.pattern.value,
                         "" if f.correct_value is None else _exact(f.correct_value),
                         "" if f.distortion is None else _exact(f.distortion),
                         "yes" if f.is_material() else "no"])
        return _csv(rows)
    lines = []
    for i, f in enumerate(findings, 1):
        c = f.offending_claim
        who = f" ({c.asserter})" if c.asserter else ""
        lines.append(f"[{i}] {c.quantity.value} = {format_fraction(c.value)}{who}: {f.pattern.value}")
        if c.narrative:
            lines.append(f"    claim: {c.narrative}")
        lines.append(f"    {f.explanation}")
        if f.distortion is not None and f.distortion != 1:
            material = ", numerically material" if f.is_material() else ""
            lines.append(f"    distortion (asserted / correct): {format_sci(f.distortion)}{material}")
        if f.is_fallacy:
            lines.append(f"    correction: {corrected_statement(f)}")
        lines.append("")
    n = sum(f.is_fallacy for f in findings)
    lines.append(f"{n} of {len(findings)} claim(s) flagged")
    return "\n".join(lines) + "\n"


@_render.register
def _(obj: FallacyFinding, fmt, exact, **opts):
    return _findings([obj], fmt, exact)


@_render.register(list)
@_render.register(tuple)
def _(obj, fmt, exact, **opts):
    return _findings(obj, fmt, exact)


@_render.register
def _(obj: VerbalStatement, fmt, exact, **opts):
    if fmt == "json":
        return json.dumps({"type": "verbal", **_verbal_json(obj)}, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv([["lr", "label", "supports", "text"],
                     [_exact(obj.lr), obj.label or "", obj.supports or "", obj.text]])
    return f"LR {format_value(obj.lr)}: {obj.text}\n"


@_render.register
def _(obj: IndependenceResult, fmt, exact, **opts):
    if fmt == "json":
        doc = {"type": "independence", "per_event_probability": _number_json(obj.per_event_probability),
               "n_events": obj.n_events, "value": _number_json(obj.value), "warnings": list(obj.warnings)}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        rows = [["per_event_probability", "n_events", "value", "value_sci"],
                [_exact(obj.per_event_probability), str(obj.n_events), _exact(obj.value), format_sci(obj.value)]]
        rows += [["warning", w, "", ""] for w in obj.warnings]
        return _csv(rows)
    lines = [f"({format_fraction(obj.per_event_probability)})^{obj.n_events} = "
             f"{format_fraction(obj.value)} ({format_sci(obj.value)})"]
    lines += [f"WARNING: {w}" for w in obj.warnings]
    return "\n".join(lines) + "\n"


@_render.register
def _(obj: EvidenceTable, fmt, exact, **opts):
    if fmt == "json":
        return json.dumps({"type": "table", **_table_json(obj)}, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv([["", "Hp", "Hd"],
                     ["E", *(str(v) if v is not None else "unknown" for v in obj.cells[:2])],
                     ["notE", *(str(v) if v is not None else "unknown" for v in obj.cells[2:])]])
    return "\n".join(table_grid(obj)) + "\n"


def render_report(result, fmt: str = "text", *, exact: bool = False, **opts) -> bytes:
    """Render ``result`` as UTF-8 bytes.

    ``result`` may be an :class:`AnalysisResult`, :class:`GuessSweep`,
    :class:`FallacyFinding` (or a list of them), :class:`VerbalStatement`,
    :class:`IndependenceResult` or :class:`EvidenceTable`. Analysis results
    accept ``verbal=`` (a statement to append) and ``rounded_prior_sig=``
    (also show the product with a rounded prior).
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return _render(result, fmt, exact, **opts).encode("utf-8")
