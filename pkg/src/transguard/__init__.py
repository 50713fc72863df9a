"""Rule-based pre- and post-processing around an ML Java/Python translator."""

from .collapse import CollapseClass, CollapseThresholds, CollapseVerdict, classify
from .harness import (
    Category,
    CorpusCase,
    DefaultChecker,
    EmptyCorpus,
    EvalReport,
    ExternalChecker,
    Judgement,
    ingest,
    judge_success,
    run_eval,
)
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .rules import Direction, MutationRecord, PreConfig, PrunePolicy, Rule, apply_post, apply_pre
from .syntax import Language, parse_source, render
from .translators import (
    FixtureMiss,
    HttpTranslator,
    IdentityTranslator,
    MockTranslator,
    SubprocessTranslator,
    TranslatorFailure,
)

__version__ = "0.1.0"

__all__ = [
    "Category",
    "CollapseClass",
    "CollapseThresholds",
    "CollapseVerdict",
    "CorpusCase",
    "DefaultChecker",
    "Direction",
    "EmptyCorpus",
    "EvalReport",
    "ExternalChecker",
    "FixtureMiss",
    "HttpTranslator",
    "IdentityTranslator",
    "Judgement",
    "Language",
    "MockTranslator",
    "MutationRecord",
    "PipelineConfig",
    "PipelineResult",
    "PreConfig",
    "PrunePolicy",
    "Rule",
    "SubprocessTranslator",
    "TranslatorFailure",
    "apply_post",
    "apply_pre",
    "classify",
    "ingest",
    "judge_success",
    "parse_source",
    "render",
    "run_eval",
    "run_pipeline",
]
