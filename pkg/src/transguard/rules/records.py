"""Mutation records and rule-level exceptions."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any


class Rule(str, Enum):
    R1_CONTEXT = "R1_context"
    R2_LOOP = "R2_loop"
    R3A_ARRAY_LIST = "R3a_array_list"
    R3B_ARR_RENAME = "R3b_arr_rename"
    R4_PRUNE = "R4_prune"

    @property
    def short(self) -> str:
        return self.value.split("_", 1)[0].lower()

    @classmethod
    def from_short(cls, name: str) -> "Rule":
        name = name.strip().lower()
        for rule in cls:
            if rule.short == name or rule.value.lower() == name:
                return rule
        raise ValueError(f"unknown rule {name!r}")


PRE_RULES = (Rule.R1_CONTEXT, Rule.R2_LOOP, Rule.R3A_ARRAY_LIST, Rule.R3B_ARR_RENAME)
POST_RULES = (Rule.R4_PRUNE,)


class RuleError(Exception):
    """A rule refused to fire; the pipeline records it and moves on."""


class FocalNotFound(RuleError):
    pass


class AmbiguousFocal(RuleError):
    pass


class NameShadowError(RuleError):
    pass


class Unsupported(RuleError):
    pass


class CaptureError(RuleError):
    pass


Span = tuple[int, int]


@dataclass(frozen=True)
class MutationRecord:
    rule: Rule
    applicable: bool
    applied: bool = False
    notes: str = ""
    before_span: Span | None = None
    after_span: Span | None = None
    # Name of the RuleError that made the rule skip, if any.
    error: str | None = None

    def __post_init__(self):
        if self.applied and not self.applicable:
            raise ValueError("a rule cannot be applied where it is not applicable")

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        out["rule"] = self.rule.value
        for key in ("before_span", "after_span"):
            if out[key] is not None:
                out[key] = list(out[key])
        if out["error"] is None:
            del out["error"]
        return out


def changed_spans(before: str, after: str) -> tuple[Span, Span]:
    """Smallest differing regions of two texts (common prefix/suffix removed)."""
    limit = min(len(before), len(after))
    p = 0
    while p < limit and before[p] == after[p]:
        p += 1
    s = 0
    while s < limit - p and before[-1 - s] == after[-1 - s]:
        s += 1
    return (p, len(before) - s), (p, len(after) - s)


def applied_record(rule: Rule, before: str, after: str, notes: str = "") -> MutationRecord:
    b, a = changed_spans(before, after)
    return MutationRecord(rule, True, True, notes, b, a)


def skipped_record(rule: Rule, err: RuleError | None = None, *, applicable: bool = True,
                   notes: str = "") -> MutationRecord:
    if err is not None:
        notes = notes or str(err)
        return MutationRecord(rule, applicable, False, notes, error=type(err).__name__)
    return MutationRecord(rule, applicable, False, notes)
