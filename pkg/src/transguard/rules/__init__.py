"""Pre-translation (R1-R3) and post-translation (R4) rewrite rules."""

from .arrays import array_params, array_params_to_list
from .focal import DEFAULT_FOCAL, extract_focal, find_focal
from .loops import convert_loops, detect_complex_for, for_to_while
from .post import (
    CondAlignment,
    CondPair,
    PostResult,
    PruneMode,
    PrunePolicy,
    align_conditionals,
    apply_post,
    prune_extra_clauses,
)
from .pre import Direction, PreConfig, PreResult, apply_pre, parse_rules
from .records import (
    AmbiguousFocal,
    CaptureError,
    FocalNotFound,
    MutationRecord,
    NameShadowError,
    Rule,
    RuleError,
    Unsupported,
)
from .rename import rename_arr_params

__all__ = [
    "AmbiguousFocal",
    "CaptureError",
    "CondAlignment",
    "CondPair",
    "DEFAULT_FOCAL",
    "Direction",
    "FocalNotFound",
    "MutationRecord",
    "NameShadowError",
    "PostResult",
    "PreConfig",
    "PreResult",
    "PruneMode",
    "PrunePolicy",
    "Rule",
    "RuleError",
    "Unsupported",
    "align_conditionals",
    "apply_post",
    "apply_pre",
    "array_params",
    "array_params_to_list",
    "convert_loops",
    "detect_complex_for",
    "extract_focal",
    "find_focal",
    "for_to_while",
    "parse_rules",
    "prune_extra_clauses",
    "rename_arr_params",
]
