"""Exact likelihood-ratio analysis of forensic evidence count tables.

Quick start::

    >>> from forensic_lr import EvidenceTable, analyze
    >>> result = analyze(EvidenceTable.from_rows((1, 5_000_000), (0, 500_000_000)))
    >>> str(result.likelihood_ratio), str(result.posterior_odds)
    ('101', '1/5000000')
"""

from .case_io import CaseFile, load_case, loads_case, write_case, dumps_case, bundled_case_path
from .errors import (
    AxisError,
    DataError,
    ForensicLRError,
    IncompleteTable,
    IndeterminateProduct,
    IndeterminateRatio,
    NoFallacy,
    ParseError,
    SchemaError,
    UnconfiguredScale,
    UndefinedConditional,
    WrongUnknownPattern,
)
from .fallacy import (
    Claim,
    FallacyFinding,
    Pattern,
    Quantity,
    check_claim,
    corrected_statement,
    detect_transposed_conditional,
    detect_unit_prior,
    naive_independence_combination,
)
from .odds_core import (
    AnalysisResult,
    Event,
    EvidenceTable,
    ExactOdds,
    ExactProbability,
    TableLabels,
    analyze,
    bayes_update,
    conditional_probability,
    likelihood_ratio,
    posterior_odds,
    prior_odds,
)
from .report import render_report
from .sensitivity import DEFAULT_GUESSES, GuessSweep, complete_table, invariance_check, sweep
from .verbal_scale import DEFAULT_SCALE, VerbalBand, VerbalScale, verbal_equivalent

__version__ = "0.1.0"
