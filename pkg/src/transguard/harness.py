"""Corpus ingestion, success judging and the error-pattern report."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import shlex
import subprocess
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping, Protocol, Sequence

from .collapse import CollapseVerdict
from .pipeline import PipelineConfig, PipelineResult, run_pipeline
from .rules.focal import DEFAULT_FOCAL, extract_focal, find_focal
from .rules.post import align_conditionals
from .rules.pre import Direction
from .rules.records import PRE_RULES, POST_RULES, Rule, RuleError
from .syntax.lexer import Language, SyntaxProblem
from .syntax.parser import parse_source
from .translators import IdentityTranslator, Translator, fixture_key

log = logging.getLogger(__name__)

EXTENSIONS = {Language.JAVA: ".java", Language.PYTHON: ".py"}
LABELS_FILE = "labels.json"


class EmptyCorpus(Exception):
    pass


class Category(str, Enum):
    ADDITIONAL_CONTEXT = "AdditionalContext"
    LOOP_CONVERSION = "LoopConversion"
    TYPE_SENSITIVITY = "TypeSensitivity"
    EXTRA_CONSTRAINTS = "ExtraConstraints"
    MISCELLANEOUS = "Miscellaneous"
    MOSTLY_CORRECT = "MostlyCorrect"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    Category.ADDITIONAL_CONTEXT: "Additional Context",
    Category.LOOP_CONVERSION: "Loop Conversion",
    Category.TYPE_SENSITIVITY: "Type Sensitivity",
    Category.EXTRA_CONSTRAINTS: "Extra Constraints",
    Category.MISCELLANEOUS: "Miscellaneous",
    Category.MOSTLY_CORRECT: "(Mostly) Correct",
}


class Judgement(str, Enum):
    SUCCESS = "success"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"
    CHECKER_ERROR = "checker_error"


# ---------------------------------------------------------------- corpus


@dataclass(frozen=True)
class CorpusCase:
    id: str
    java_path: Path | None = None
    python_path: Path | None = None
    focal_name: str = DEFAULT_FOCAL
    # direction value -> hand-assigned categories
    labels: Mapping[str, frozenset[Category]] = field(default_factory=dict)

    def path(self, language: Language) -> Path | None:
        return self.java_path if language is Language.JAVA else self.python_path

    def text(self, language: Language) -> str | None:
        p = self.path(language)
        return p.read_text(encoding="utf-8") if p is not None else None

    def labels_for(self, direction: Direction) -> frozenset[Category] | None:
        return self.labels.get(direction.value)


@dataclass(frozen=True)
class Corpus:
    cases: tuple[CorpusCase, ...]
    problems: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.cases)

    def __len__(self):
        return len(self.cases)


def _read_labels(root: Path, problems: list[str]) -> dict[str, dict[str, frozenset[Category]]]:
    path = root / LABELS_FILE
    if not path.exists():
        return {}
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        problems.append(f"{path}: {err}")
        return {}
    out: dict[str, dict[str, frozenset[Category]]] = {}
    for case_id, per_dir in raw.items():
        out[case_id] = {}
        for direction, names in per_dir.items():
            try:
                out[case_id][Direction.coerce(direction).value] = frozenset(Category(n) for n in names)
            except ValueError as err:
                problems.append(f"{path}: case {case_id}: {err}")
    return out


def ingest(root: str | Path, focal_name: str = DEFAULT_FOCAL) -> Corpus:
    """Read ``<root>/{java,python}/<id>.<ext>`` plus an optional labels.json."""
    root = Path(root)
    problems: list[str] = []
    found: dict[str, dict[Language, Path]] = {}
    for language, ext in EXTENSIONS.items():
        folder = root / language.value
        if not folder.is_dir():
            continue
        for path in sorted(folder.iterdir()):
            if path.suffix != ext or not path.is_file():
                continue
            try:
                path.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as err:
                problems.append(f"{path}: {err}")
                continue
            found.setdefault(path.stem, {})[language] = path
    if not found:
        raise EmptyCorpus(f"no cases under {root}")
    labels = _read_labels(root, problems)
    cases = tuple(
        CorpusCase(
            id=case_id,
            java_path=paths.get(Language.JAVA),
            python_path=paths.get(Language.PYTHON),
            focal_name=focal_name,
            labels=labels.get(case_id, {}),
        )
        for case_id, paths in sorted(found.items())
    )
    for p in problems:
        log.warning("corpus: %s", p)
    return Corpus(cases, tuple(problems))


def fixtures_from_corpus(cases: Iterable[CorpusCase], direction: Direction | str) -> dict[str, str]:
    """Ground truth for the mock: source key -> focal method of the target file."""
    direction = Direction.coerce(direction)
    table: dict[str, str] = {}
    for case in cases:
        src, dst = case.text(direction.source), case.text(direction.target)
        if src is None or dst is None:
            continue
        try:
            unit = parse_source(dst, direction.target)
            truth, _ = extract_focal(unit, case.focal_name)
        except (SyntaxProblem, RuleError) as err:
            log.warning("fixture %s: %s", case.id, err)
            continue
        table[fixture_key(src, direction, case.focal_name)] = truth
    return table


# ---------------------------------------------------------------- checking


class CheckerError(Exception):
    pass


@dataclass(frozen=True)
class CheckOutcome:
    compiles: bool
    # None when no run comparison was made
    same_output: bool | None = None


class Checker(Protocol):
    def check(self, result: PipelineResult) -> CheckOutcome: ...


class DefaultChecker:
    """Parse validity plus a clean collapse verdict stands in for "compiles"."""

    def check(self, result: PipelineResult) -> CheckOutcome:
        out = result.output
        if out is None or not result.verdict.clean:
            return CheckOutcome(False)
        try:
            unit = parse_source(out, result.direction.target)
        except SyntaxProblem:
            return CheckOutcome(False)
        return CheckOutcome(bool(unit.methods))


@dataclass(frozen=True)
class ExternalChecker:
    """User-supplied commands; ``{file}`` is replaced by a temporary file path.

    ``compile_cmd`` exit 0 means the translation compiles. When ``run_cmd``
    and ``reference_cmd`` are both set, their standard outputs (translation
    vs. original) are compared.
    """

    compile_cmd: str
    run_cmd: str | None = None
    reference_cmd: str | None = None
    timeout: float = 60.0

    def _run(self, template: str, text: str, suffix: str) -> subprocess.CompletedProcess:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / f"case{suffix}"
            path.write_text(text, encoding="utf-8")
            argv = [a.replace("{file}", str(path)) for a in shlex.split(template)]
            try:
                return subprocess.run(argv, capture_output=True, timeout=self.timeout, cwd=tmp)
            except (OSError, subprocess.TimeoutExpired) as err:
                raise CheckerError(f"{argv[0]}: {err}") from None

    def check(self, result: PipelineResult) -> CheckOutcome:
        out = result.output
        if out is None:
            return CheckOutcome(False)
        target = EXTENSIONS[result.direction.target]
        if self._run(self.compile_cmd, out, target).returncode != 0:
            return CheckOutcome(False)
        if not (self.run_cmd and self.reference_cmd):
            return CheckOutcome(True)
        got = self._run(self.run_cmd, out, target)
        want = self._run(self.reference_cmd, result.stages["input"] or "", EXTENSIONS[result.direction.source])
        if want.returncode != 0:
            raise CheckerError(f"reference run failed with status {want.returncode}")
        return CheckOutcome(True, got.returncode == 0 and got.stdout == want.stdout)


def divergence(result: PipelineResult) -> int:
    """Clauses the translation has beyond the source's, summed over conditionals."""
    out = result.output
    if out is None:
        return 0
    try:
        src = find_focal(parse_source(result.stages["input"] or "", result.direction.source, lenient=True), result.focal)
        dst_unit = parse_source(out, result.direction.target, lenient=True)
    except (SyntaxProblem, RuleError):
        return 0
    dst = next((m for m in dst_unit.methods if m.name == result.focal), None)
    dst = dst or next((m for m in dst_unit.methods if len(m.params) == len(src.params)), None)
    if dst is None:
        return 0
    extra = 0
    for pair in align_conditionals(src, dst).pairs:
        if pair.kind_mismatch or pair.src.chain.mixed or pair.dst.chain.mixed:
            continue
        extra += max(0, pair.dst.chain.count - pair.src.chain.count)
    return extra


def applicable_rules(result: PipelineResult) -> list[Rule]:
    return [r.rule for r in result.records if r.applicable]


def judge_success(before: PipelineResult, after: PipelineResult, checker: Checker | None = None) -> Judgement:
    """Did the rules turn this case into a compiling, faithful translation?

    ``before`` is the vanilla run (rules off), ``after`` the run with rules.
    """
    if not applicable_rules(after):
        return Judgement.NOT_APPLICABLE
    checker = checker or DefaultChecker()
    try:
        outcome = checker.check(after)
    except CheckerError as err:
        log.warning("checker: %s", err)
        return Judgement.CHECKER_ERROR
    if not outcome.compiles:
        return Judgement.FAIL
    faithful = outcome.same_output if outcome.same_output is not None else divergence(after) == 0
    return Judgement.SUCCESS if faithful else Judgement.FAIL


def derive_categories(before: PipelineResult, after: PipelineResult, checker_ok: bool) -> frozenset[Category]:
    """Tag a case from the rule records and the vanilla verdict."""
    applicable = set(applicable_rules(after))
    collapsed = not before.verdict.clean
    cats: set[Category] = set()
    if collapsed and Rule.R1_CONTEXT in applicable:
        cats.add(Category.ADDITIONAL_CONTEXT)
    if collapsed and Rule.R2_LOOP in applicable:
        cats.add(Category.LOOP_CONVERSION)
    if collapsed and applicable & {Rule.R3A_ARRAY_LIST, Rule.R3B_ARR_RENAME}:
        cats.add(Category.TYPE_SENSITIVITY)
    if divergence(before) > 0:
        cats.add(Category.EXTRA_CONSTRAINTS)
    if not cats:
        # nothing rule-shaped went wrong: the vanilla output is either fine or wrong for other reasons
        cats.add(Category.MOSTLY_CORRECT if checker_ok else Category.MISCELLANEOUS)
    return frozenset(cats)


# ---------------------------------------------------------------- evaluation


@dataclass(frozen=True)
class CaseRow:
    id: str
    categories: frozenset[Category]
    labeled: bool
    judgements: Mapping[str, Judgement] = field(default_factory=dict)
    verdict_before: tuple[str, ...] = ()
    verdict_after: tuple[str, ...] = ()
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "categories": sorted(c.value for c in self.categories),
            "labeled": self.labeled,
            "judgements": {k: v.value for k, v in sorted(self.judgements.items())},
            "verdict_before": list(self.verdict_before),
            "verdict_after": list(self.verdict_after),
            "error": self.error,
        }


@dataclass(frozen=True)
class CategoryRow:
    category: Category
    count: int
    pct: float


@dataclass(frozen=True)
class RuleRow:
    rule: Rule
    applicable: int
    success: int

    @property
    def rate(self) -> float | None:
        return self.success / self.applicable if self.applicable else None


@dataclass(frozen=True)
class EvalReport:
    direction: Direction
    total: int
    rows: tuple[CategoryRow, ...]
    rules: tuple[RuleRow, ...]
    cases: tuple[CaseRow, ...]

    def row(self, category: Category) -> CategoryRow:
        return next(r for r in self.rows if r.category is category)

    def rule(self, rule: Rule) -> RuleRow:
        return next(r for r in self.rules if r.rule is rule)

    def to_json(self) -> dict[str, Any]:
        return {
            "direction": self.direction.value,
            "total": self.total,
            "rows": [{"category": r.category.value, "count": r.count, "pct": r.pct} for r in self.rows],
            "rules": [
                {"rule": r.rule.value, "applicable": r.applicable, "success": r.success, "rate": r.rate}
                for r in self.rules
            ],
            "cases": [c.to_json() for c in self.cases],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["direction", "kind", "name", "count", "of", "value"])
        for r in self.rows:
            w.writerow([self.direction.value, "category", r.category.value, r.count, self.total, _pct(r.pct)])
        for r in self.rules:
            w.writerow([self.direction.value, "rule", r.rule.value, r.success, r.applicable, _rate(r.rate)])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [f"| Category | {self.direction.value.upper()} | Count |", "|---|---:|---:|"]
        lines += [f"| {r.category.title} | {_pct(r.pct)}% | {r.count}/{self.total} |" for r in self.rows]
        lines += ["", "| Rule | Applicable | Success | Rate |", "|---|---:|---:|---:|"]
        lines += [f"| {r.rule.value} | {r.applicable} | {r.success} | {_rate(r.rate)} |" for r in self.rules]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return format_table([self])

    def render(self, fmt: str) -> str:
        return {"json": lambda: self.dumps() + "\n", "csv": self.to_csv, "md": self.to_markdown,
                "text": self.to_text}[fmt]()


def _pct(value: float) -> str:
    return f"{value:g}"


def _rate(rate: float | None) -> str:
    return "n/a" if rate is None else f"{rate:.2f}"


def format_table(reports: Sequence[EvalReport]) -> str:
    """Aligned text table, one column per direction."""
    header = ["Error Pattern"] + [r.direction.value.upper() for r in reports]
    body = [[c.title] + [f"{_pct(r.row(c).pct)}%" for r in reports] for c in Category]
    rules = [[rule.value] + [_rate(r.rule(rule).rate) + f" ({r.rule(rule).success}/{r.rule(rule).applicable})"
                             for r in reports] for rule in (*PRE_RULES, *POST_RULES)]
    widths = [max(len(row[k]) for row in [header] + body + rules) for k in range(len(header))]

    def fmt(row: list[str]) -> str:
        return "  ".join(cell.ljust(w) if k == 0 else cell.rjust(w) for k, (cell, w) in enumerate(zip(row, widths))).rstrip()

    sep = "  ".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(r) for r in body] + [sep] + [fmt(r) for r in rules]) + "\n"


def worker_count(default: int = 4) -> int:
    raw = os.environ.get("TRANSGUARD_WORKERS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring TRANSGUARD_WORKERS=%r", raw)
        return default


def evaluate_case(case: CorpusCase, direction: Direction, config: PipelineConfig, adapter: Translator,
                  checker: Checker | None = None) -> CaseRow:
    labels = case.labels_for(direction)
    source = case.text(direction.source)
    if source is None:
        return CaseRow(case.id, labels or frozenset({Category.MISCELLANEOUS}), labels is not None,
                       error=f"no {direction.source.value} file")
    checker = checker or DefaultChecker()
    try:
        before = run_pipeline(source, case.focal_name, direction, replace(config, rules=frozenset()), adapter)
        after = run_pipeline(source, case.focal_name, direction, config, adapter)
    except Exception as err:  # one bad case must not sink the run
        log.warning("case %s: %s", case.id, err)
        return CaseRow(case.id, labels or frozenset({Category.MISCELLANEOUS}), labels is not None,
                       error=f"{type(err).__name__}: {err}")
    judgement = judge_success(before, after, checker)
    judgements = {rule.value: judgement for rule in applicable_rules(after)}
    try:
        vanilla = checker.check(before)
        checker_ok = vanilla.compiles and vanilla.same_output is not False
    except CheckerError:
        checker_ok = False
    cats = labels if labels is not None else derive_categories(before, after, checker_ok)
    return CaseRow(case.id, cats, labels is not None, judgements,
                   tuple(_names(before.verdict)), tuple(_names(after.verdict)))


def _names(verdict: CollapseVerdict) -> list[str]:
    return ["failed"] if verdict.failure is not None else verdict.names()


def run_eval(cases: Iterable[CorpusCase], direction: Direction | str, config: PipelineConfig | None = None,
             adapter: Translator | None = None, checker: Checker | None = None,
             workers: int | None = None) -> EvalReport:
    direction = Direction.coerce(direction)
    config = config or PipelineConfig()
    adapter = adapter or IdentityTranslator()
    cases = sorted(cases, key=lambda c: c.id)
    workers = workers or worker_count()
    if workers > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda c: evaluate_case(c, direction, config, adapter, checker), cases))
    else:
        rows = [evaluate_case(c, direction, config, adapter, checker) for c in cases]
    return summarize(direction, rows)


def summarize(direction: Direction, rows: Sequence[CaseRow]) -> EvalReport:
    total = len(rows)
    cat_rows = []
    for cat in Category:
        count = sum(1 for r in rows if cat in r.categories)
        cat_rows.append(CategoryRow(cat, count, round(100 * count / total, 2) if total else 0.0))
    rule_rows = []
    for rule in (*PRE_RULES, *POST_RULES):
        judged = [r.judgements[rule.value] for r in rows if rule.value in r.judgements]
        judged = [j for j in judged if j is not Judgement.CHECKER_ERROR]
        rule_rows.append(RuleRow(rule, len(judged), sum(1 for j in judged if j is Judgement.SUCCESS)))
    return EvalReport(direction, total, tuple(cat_rows), tuple(rule_rows), tuple(rows))
