"""Reading and writing case files.

A case file is JSON (see ``case.schema.json`` next to this module). Counts are
decimal strings so that arbitrarily large integers survive any JSON parser,
and ``"unknown"`` marks a cell nobody can supply. Example::

    {
      "format": "forensic-lr-case/1",
      "metadata": {"title": "...", "parties": ["..."], "case_info": "..."},
      "table": {"e_hp": "1", "e_hd": "5000000", "note_hp": "0", "note_hd": "unknown"},
      "assumed_guess": "500000000",
      "claims": [{"quantity": "PosteriorOdds", "value": "101", "reported_lr": "101"}]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import ParseError, SchemaError
from .fallacy import Claim, Quantity
from .odds_core import EvidenceTable, ExactOdds, TableLabels
from .verbal_scale import VerbalBand, VerbalScale

FORMAT_TAG = "forensic-lr-case/1"
UNKNOWN = "unknown"
BUNDLED_CASES = ("zipper", "toy_city", "sally_clark")


@lru_cache(maxsize=1)
def case_schema() -> dict:
    text = resources.files(__package__).joinpath("case.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class IndependenceInput:
    per_event_probability: Fraction
    n_events: int
    asserter: str = ""


@dataclass(frozen=True)
class CaseFile:
    table: EvidenceTable
    title: str = ""
    parties: tuple[str, ...] = ()
    claims: tuple[Claim, ...] = ()
    scale: VerbalScale | None = None
    sweep_guesses: tuple[int, ...] | None = None
    assumed_guess: int | None = None
    independence: IndependenceInput | None = None

    @property
    def case_info(self) -> str:
        return self.table.case_info


def _cell(text: str) -> int | None:
    return None if text == UNKNOWN else int(text)


def _cell_text(value: int | None) -> str:
    return UNKNOWN if value is None else str(value)


def _build(doc: dict, path) -> CaseFile:
    violations = []

    meta = doc.get("metadata", {})
    t = doc["table"]
    lab = t.get("labels", {})
    labels = TableLabels(
        e=lab.get("E", "E"), not_e=lab.get("notE", "¬E"), hp=lab.get("Hp", "Hp"), hd=lab.get("Hd", "Hd")
    )
    table = EvidenceTable(
        _cell(t["e_hp"]), _cell(t["e_hd"]), _cell(t["note_hp"]), _cell(t["note_hd"]),
        labels=labels, case_info=meta.get("case_info", ""),
    )

    claims = []
    for i, c in enumerate(doc.get("claims", [])):
        where = f"claims[{i}]"
        if c.get("derived_from") == c["quantity"]:
            violations.append(f"{where}: derived_from repeats the asserted quantity")
        if "reported_lr" in c and c["quantity"] != Quantity.POSTERIOR_ODDS.value:
            violations.append(f"{where}: reported_lr only applies to PosteriorOdds claims")
        try:
            claims.append(Claim(
                quantity=c["quantity"],
                value=c["value"],
                derived_from=c.get("derived_from"),
                asserter=c.get("asserter", ""),
                narrative=c.get("narrative", ""),
                reported_lr=c.get("reported_lr"),
            ))
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            violations.append(f"{where}: {exc}")

    scale = None
    if "scale" in doc:
        s = doc["scale"]
        try:
            bands = tuple(
                VerbalBand(Fraction(b["lower"]), None if b["upper"] is None else Fraction(b["upper"]), b["label"])
                for b in s["bands"]
            )
            scale = VerbalScale(
                bands,
                support_hp=s.get("support_hp", "common source"),
                support_hd=s.get("support_hd", "different source"),
            )
        except (ValueError, ZeroDivisionError) as exc:
            violations.append(f"scale: {exc}")

    independence = None
    if "independence" in doc:
        ind = doc["independence"]
        try:
            p = Fraction(ind["per_event_probability"])
        except ZeroDivisionError:
            p = None
        if p is None or not 0 < p <= 1:
            violations.append("independence.per_event_probability: must lie in (0, 1]")
        else:
            independence = IndependenceInput(p, ind["n_events"], ind.get("asserter", ""))

    assumed_guess = int(doc["assumed_guess"]) if "assumed_guess" in doc else None
    if assumed_guess is not None and table.count_note_hd is not None:
        violations.append("assumed_guess: given, but the note_hd cell is already known")

    if violations:
        raise SchemaError(violations, path=path)

    guesses = doc.get("sweep_guesses")
    return CaseFile(
        table=table,
        title=meta.get("title", ""),
        parties=tuple(meta.get("parties", ())),
        claims=tuple(claims),
        scale=scale,
        sweep_guesses=None if guesses is None else tuple(int(g) for g in guesses),
        assumed_guess=assumed_guess,
        independence=independence,
    )


def loads_case(text: str, path=None) -> CaseFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path=path, line=exc.lineno, column=exc.colno) from exc
    validator = jsonschema.Draft202012Validator(case_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        raise SchemaError(
            [f"{'/'.join(map(str, e.absolute_path)) or '<root>'}: {e.message}" for e in errors],
            path=path,
        )
    return _build(doc, path)


def load_case(path) -> CaseFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read case file: {exc.strerror}", path=path) from exc
    return loads_case(text, path=path)


def _odds_text(value) -> str:
    return str(value) if isinstance(value, ExactOdds) else str(Fraction(value))


def case_to_dict(case: CaseFile) -> dict:
    t = case.table
    lab = t.labels
    doc = {
        "format": FORMAT_TAG,
        "metadata": {"title": case.title, "parties": list(case.parties), "case_info": t.case_info},
        "table": {
            "e_hp": _cell_text(t.count_e_hp),
            "e_hd": _cell_text(t.count_e_hd),
            "note_hp": _cell_text(t.count_note_hp),
            "note_hd": _cell_text(t.count_note_hd),
            "labels": {"E": lab.e, "notE": lab.not_e, "Hp": lab.hp, "Hd": lab.hd},
        },
    }
    if case.assumed_guess is not None:
        doc["assumed_guess"] = str(case.assumed_guess)
    if case.sweep_guesses is not None:
        doc["sweep_guesses"] = [str(g) for g in case.sweep_guesses]
    if case.claims:
        doc["claims"] = []
        for c in case.claims:
            item = {"quantity": c.quantity.value, "value": _odds_text(c.value)}
            if c.derived_from is not None:
                item["derived_from"] = c.derived_from.value
            if c.reported_lr is not None:
                item["reported_lr"] = str(c.reported_lr)
            if c.asserter:
                item["asserter"] = c.asserter
            if c.narrative:
                item["narrative"] = c.narrative
            doc["claims"].append(item)
    if case.independence is not None:
        ind = case.independence
        doc["independence"] = {
            "per_event_probability": str(ind.per_event_probability),
            "n_events": ind.n_events,
        }
        if ind.asserter:
            doc["independence"]["asserter"] = ind.asserter
    if case.scale is not None:
        doc["scale"] = scale_to_dict(case.scale)
    return doc


def scale_to_dict(scale: VerbalScale) -> dict:
    return {
        "bands": [
            {"lower": str(b.lower), "upper": None if b.upper is None else str(b.upper), "label": b.label}
            for b in scale.bands
        ],
        "support_hp": scale.support_hp,
        "support_hd": scale.support_hd,
    }


def dumps_case(case: CaseFile) -> str:
    return json.dumps(case_to_dict(case), indent=2, ensure_ascii=False) + "\n"


def write_case(case: CaseFile, path) -> Path:
    path = Path(path)
    path.write_text(dumps_case(case), encoding="utf-8")
    return path


def load_scale(path) -> VerbalScale:
    """Load a standalone verbal scale file (the ``scale`` object of a case file)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read scale file: {exc.strerror}", path=path) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, path=path, line=exc.lineno, column=exc.colno) from exc
    wrapper = {"format": FORMAT_TAG, "table": dict.fromkeys(("e_hp", "e_hd", "note_hp", "note_hd"), UNKNOWN),
               "scale": doc}
    return loads_case(json.dumps(wrapper), path=path).scale


def bundled_case_path(name: str) -> Path:
    stem = name[:-5] if name.endswith(".case") else name
    if stem not in BUNDLED_CASES:
        raise KeyError(f"no bundled case named {name!r}; choose from {', '.join(BUNDLED_CASES)}")
    return Path(str(resources.files(__package__).joinpath("cases").joinpath(f"{stem}.case")))


def resolve_case_path(arg: str) -> Path:
    """A path on disk if it exists, otherwise a bundled case of that name."""
    path = Path(arg)
    if path.exists():
        return path
    try:
        return bundled_case_path(path.name)
    except KeyError:
        return path
