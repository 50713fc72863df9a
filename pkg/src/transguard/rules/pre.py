"""Orchestration of the pre-translation rules (R1 -> R2 -> R3)."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from ..syntax.lexer import Language
from ..syntax.nodes import SyntaxUnit
from ..syntax.parser import parse_source
from .arrays import array_params, array_params_to_list
from .focal import DEFAULT_FOCAL, extract_focal, find_focal
from .loops import convert_loops
from .records import (
    PRE_RULES,
    AmbiguousFocal,
    FocalNotFound,
    MutationRecord,
    Rule,
    RuleError,
    applied_record,
    skipped_record,
)
from .rename import DEFAULT_ARR_PATTERN, matching_params, rename_arr_params
from .tree import splice_method


class Direction(str, Enum):
    J2P = "j2p"
    P2J = "p2j"

    @property
    def source(self) -> Language:
        return Language.JAVA if self is Direction.J2P else Language.PYTHON

    @property
    def target(self) -> Language:
        return Language.PYTHON if self is Direction.J2P else Language.JAVA

    @classmethod
    def coerce(cls, value: "Direction | str") -> "Direction":
        return value if isinstance(value, Direction) else cls(str(value).lower())


# Rules meaningful for each source language.
_VALID = {
    Rule.R1_CONTEXT: (Direction.J2P, Direction.P2J),
    Rule.R2_LOOP: (Direction.J2P,),
    Rule.R3A_ARRAY_LIST: (Direction.J2P,),
    Rule.R3B_ARR_RENAME: (Direction.P2J,),
}


def parse_rules(spec: str | Iterable[str | Rule] | None) -> frozenset[Rule]:
    """``"r1,r2"`` / ``"all"`` / an iterable of names into a rule set."""
    if spec is None:
        return frozenset(Rule)
    if isinstance(spec, str):
        items = [s for s in spec.split(",") if s.strip()]
    else:
        items = list(spec)
    out: set[Rule] = set()
    for item in items:
        if isinstance(item, Rule):
            out.add(item)
        elif item.strip().lower() == "all":
            out.update(Rule)
        elif item.strip().lower() == "none":
            continue
        else:
            out.add(Rule.from_short(item))
    return frozenset(out)


@dataclass(frozen=True)
class PreConfig:
    rules: frozenset[Rule] = frozenset(PRE_RULES)
    arr_pattern: str = DEFAULT_ARR_PATTERN
    arr_threshold: int = 1
    all_loops: bool = False
    focal_name: str = DEFAULT_FOCAL
    lenient: bool = False


@dataclass(frozen=True)
class PreResult:
    text: str
    records: tuple[MutationRecord, ...] = field(default=())

    def __iter__(self) -> Iterator:
        return iter((self.text, self.records))

    def record(self, rule: Rule) -> MutationRecord | None:
        return next((r for r in self.records if r.rule is rule), None)

    @property
    def applied(self) -> list[Rule]:
        return [r.rule for r in self.records if r.applied]


def apply_pre(source: str | SyntaxUnit, direction: Direction | str, config: PreConfig | None = None) -> PreResult:
    """Run the enabled pre-rules in order, each on the re-parsed previous output.

    Rule failures never abort: they surface as records with ``applied=False``.
    A source that fails to parse raises :class:`~transguard.syntax.ParseError`.
    """
    config = config or PreConfig()
    direction = Direction.coerce(direction)
    lang = direction.source
    if isinstance(source, SyntaxUnit):
        unit, text = source, source.source
    else:
        text = source
        unit = parse_source(text, lang, lenient=config.lenient)
    records: list[MutationRecord] = []

    def reparse(new_text: str) -> SyntaxUnit:
        return parse_source(new_text, lang, lenient=config.lenient)

    for rule in PRE_RULES:
        if rule not in config.rules:
            continue
        if direction not in _VALID[rule]:
            records.append(skipped_record(rule, applicable=False, notes=f"not used for {direction.value}"))
            continue
        try:
            if rule is Rule.R1_CONTEXT:
                new_text, rec = extract_focal(unit, config.focal_name)
            else:
                new_text, rec = _method_rule(rule, unit, text, config)
        except RuleError as err:
            records.append(skipped_record(rule, err, applicable=_applicable_despite(rule, err)))
            continue
        records.append(rec)
        if rec.applied:
            text = new_text
            unit = reparse(text)
    return PreResult(text, tuple(records))


def _applicable_despite(rule: Rule, err: RuleError) -> bool:
    return not isinstance(err, (FocalNotFound, AmbiguousFocal))


def _method_rule(rule: Rule, unit: SyntaxUnit, text: str, config: PreConfig) -> tuple[str, MutationRecord]:
    focal = find_focal(unit, config.focal_name)
    if rule is Rule.R2_LOOP:
        new, report = convert_loops(focal, all_loops=config.all_loops)
        if not report.candidates:
            return text, skipped_record(rule, applicable=False, notes="no complex for loop")
        notes = "; ".join(report.skipped)
        if not report.converted:
            first = report.skipped[0].split(":", 1)[0] if report.skipped else None
            return text, MutationRecord(rule, True, False, notes, error=first)
        out = splice_method(text, focal, new)
        return out, applied_record(rule, text, out, f"converted {report.converted} loop(s)" + (f"; {notes}" if notes else ""))
    if rule is Rule.R3A_ARRAY_LIST:
        params = array_params(focal)
        if not any(p.dims == 1 for p in params):
            note = "no array parameter" if not params else "only multi-dimensional array parameters"
            return text, skipped_record(rule, applicable=False, notes=note)
        new, names = array_params_to_list(focal)
        out = splice_method(text, focal, new)
        return out, applied_record(rule, text, out, "converted " + ", ".join(names))
    if rule is Rule.R3B_ARR_RENAME:
        matches = matching_params(focal, config.arr_pattern)
        if len(matches) < max(1, config.arr_threshold):
            return text, skipped_record(
                rule, applicable=False, notes=f"{len(matches)} matching parameter(s), threshold {config.arr_threshold}"
            )
        new, mapping = rename_arr_params(focal, config.arr_pattern)
        out = splice_method(text, focal, new)
        return out, applied_record(rule, text, out, ", ".join(f"{a}->{b}" for a, b in mapping.items()))
    raise ValueError(rule)
