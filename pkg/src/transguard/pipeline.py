"""preprocess -> translate -> postprocess, for a single focal method."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .collapse import CollapseThresholds, CollapseVerdict, classify
from .rules.focal import DEFAULT_FOCAL, find_focal
from .rules.post import PrunePolicy, apply_post
from .rules.pre import Direction, PreConfig, apply_pre
from .rules.records import MutationRecord, Rule, skipped_record
from .rules.rename import DEFAULT_ARR_PATTERN
from .syntax.lexer import ParseError
from .syntax.parser import parse_source
from .translators import DEFAULT_TIMEOUT_S, IdentityTranslator, Translator, TranslatorFailure

STAGES = ("input", "preprocessed", "raw_translation", "postprocessed")


@dataclass(frozen=True)
class PipelineConfig:
    rules: frozenset[Rule] = frozenset(Rule)
    arr_pattern: str = DEFAULT_ARR_PATTERN
    arr_threshold: int = 1
    all_loops: bool = False
    prune: PrunePolicy = PrunePolicy()
    lenient: bool = False
    thresholds: CollapseThresholds = CollapseThresholds()
    timeout_s: float = DEFAULT_TIMEOUT_S

    def pre_config(self, focal_name: str) -> PreConfig:
        return PreConfig(
            rules=self.rules,
            arr_pattern=self.arr_pattern,
            arr_threshold=self.arr_threshold,
            all_loops=self.all_loops,
            focal_name=focal_name,
            lenient=self.lenient,
        )


@dataclass(frozen=True)
class PipelineResult:
    direction: Direction
    focal: str
    stages: dict[str, str | None]
    records: tuple[MutationRecord, ...]
    verdict: CollapseVerdict
    timing: dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def output(self) -> str | None:
        return self.stages["postprocessed"]

    @property
    def failed(self) -> bool:
        return self.verdict.failure is not None

    def record(self, rule: Rule) -> MutationRecord | None:
        return next((r for r in self.records if r.rule is rule), None)

    def to_json(self) -> dict[str, Any]:
        # timing is left out so that reruns serialize identically
        return {
            "direction": self.direction.value,
            "focal": self.focal,
            "stages": dict(self.stages),
            "records": [r.to_json() for r in self.records],
            "verdict": self.verdict.to_json(),
        }


def run_pipeline(source: str, focal_name: str = DEFAULT_FOCAL, direction: Direction | str = Direction.J2P,
                 config: PipelineConfig | None = None, adapter: Translator | None = None) -> PipelineResult:
    """Run one method through the hybrid translator.

    Raises :class:`ParseError` or a focal error when the *input* is unusable;
    translator trouble is reported in the result instead.
    """
    config = config or PipelineConfig()
    adapter = adapter or IdentityTranslator()
    direction = Direction.coerce(direction)
    timing: dict[str, float] = {}
    stages: dict[str, str | None] = dict.fromkeys(STAGES)
    stages["input"] = source

    if not source.strip():
        raise ParseError("empty input", (0, 0))
    unit = parse_source(source, direction.source, lenient=config.lenient)
    find_focal(unit, focal_name)

    t0 = time.perf_counter()
    pre = apply_pre(unit, direction, config.pre_config(focal_name))
    timing["preprocess"] = time.perf_counter() - t0
    stages["preprocessed"] = pre.text
    records = list(pre.records)
    focal = find_focal(parse_source(pre.text, direction.source, lenient=True), focal_name)

    t0 = time.perf_counter()
    try:
        raw = adapter.translate(pre.text, direction)
    except TranslatorFailure as err:
        timing["translate"] = time.perf_counter() - t0
        if Rule.R4_PRUNE in config.rules:
            records.append(skipped_record(Rule.R4_PRUNE, applicable=False, notes="no translation"))
        return PipelineResult(direction, focal_name, stages, tuple(records), CollapseVerdict.failed(str(err)), timing)
    timing["translate"] = time.perf_counter() - t0
    stages["raw_translation"] = raw

    t0 = time.perf_counter()
    verdict = classify(raw, direction.target, focal, config.thresholds)
    timing["classify"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    out = raw
    if Rule.R4_PRUNE in config.rules:
        if not verdict.clean:
            records.append(skipped_record(
                Rule.R4_PRUNE, applicable=False, notes="postprocess skipped: collapse " + ",".join(verdict.names())
            ))
        elif direction is not Direction.P2J:
            records.append(skipped_record(Rule.R4_PRUNE, applicable=False, notes=f"not used for {direction.value}"))
        else:
            post = apply_post(pre.text, raw, config.prune, direction, focal_name)
            out = post.text
            records.extend(post.records)
    timing["postprocess"] = time.perf_counter() - t0
    stages["postprocessed"] = out
    return PipelineResult(direction, focal_name, stages, tuple(records), verdict, timing)
