"""Detect degenerate ("collapsed") translator output."""

from __future__ import annotations

import re
from dataclasses import dataclass, fields
from enum import Enum

from .syntax.lexer import Language, SyntaxProblem, TokenKind, tokenize
from .syntax.nodes import MethodUnit
from .syntax.parser import parse_source


class CollapseClass(str, Enum):
    IMPORT_SPAM = "ImportSpam"
    NUMBER_SPAM = "NumberSpam"
    COMMA_SPAM = "CommaSpam"
    SPACETOKEN_SPAM = "SpacetokenSpam"
    STRUCTURAL = "Structural"


@dataclass(frozen=True)
class CollapseThresholds:
    import_run: int = 3
    import_ratio: float = 0.30
    number_run: int = 16
    number_repeat_ratio: float = 0.75
    comma_run: int = 10
    spacetoken_count: int = 3

    @classmethod
    def from_mapping(cls, values: dict) -> "CollapseThresholds":
        known = {f.name: f.type for f in fields(cls)}
        kwargs = {}
        for key, value in values.items():
            if key not in known:
                raise KeyError(f"unknown collapse threshold {key!r}")
            kwargs[key] = float(value) if "ratio" in key else int(value)
        return cls(**kwargs)


@dataclass(frozen=True)
class Evidence:
    cls: CollapseClass
    span: tuple[int, int]
    count: int
    detail: str = ""


@dataclass(frozen=True)
class CollapseVerdict:
    classes: frozenset[CollapseClass] = frozenset()
    evidence: tuple[Evidence, ...] = ()
    # Set when there was no output to classify (translator failure).
    failure: str | None = None

    @property
    def clean(self) -> bool:
        return not self.classes and self.failure is None

    @classmethod
    def failed(cls, reason: str) -> "CollapseVerdict":
        return cls(failure=reason)

    def names(self) -> list[str]:
        return sorted(c.value for c in self.classes)

    def to_json(self) -> dict:
        return {
            "clean": self.clean,
            "classes": self.names(),
            "failure": self.failure,
            "evidence": [
                {"class": e.cls.value, "span": list(e.span), "count": e.count, "detail": e.detail}
                for e in self.evidence
            ],
        }


_IMPORT_LINE = re.compile(r"^\s*(import|from)\b")


def _imported_names(line: str) -> list[str]:
    body = line.strip().rstrip(";")
    m = re.match(r"from\s+(.+?)\s+import\s+(.+)$", body)
    if m:
        prefix = re.sub(r"\s+", "", m.group(1))
        items = [f"{prefix}.{x}" for x in _split_items(m.group(2))]
    else:
        items = _split_items(re.sub(r"^(import|from)\b", "", body))
    return [x for x in items if x]


def _split_items(text: str) -> list[str]:
    out = []
    for item in text.split(","):
        item = re.split(r"\s+as\s+", item.strip())[0]
        out.append(re.sub(r"\s+", "", item))
    return out


def _import_spam(text: str, th: CollapseThresholds) -> Evidence | None:
    lines = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        if raw.strip():
            lines.append((offset, raw))
        offset += len(raw)
    seen: dict[str, int] = {}
    repeated = False
    imports = 0
    run: list[tuple[int, str]] = []
    run_names: dict[str, int] = {}
    for k, (start, line) in enumerate(lines):
        if not _IMPORT_LINE.match(line):
            run, run_names = [], {}
            continue
        imports += 1
        names = _imported_names(line)
        for name in names:
            seen[name] = seen.get(name, 0) + 1
            run_names[name] = run_names.get(name, 0) + 1
        repeated = repeated or any(v > 1 for v in seen.values())
        run.append((start, line))
        end = start + len(line.rstrip("\n"))
        if len(run) >= th.import_run and any(v > 1 for v in run_names.values()):
            return Evidence(CollapseClass.IMPORT_SPAM, (run[0][0], end), len(run), "consecutive imports")
        # ratio over the lines up to here, so appending text cannot undo it
        if repeated and imports / (k + 1) > th.import_ratio:
            return Evidence(CollapseClass.IMPORT_SPAM, (lines[0][0], end), imports, "import ratio")
    return None


def _number_spam(tokens, th: CollapseThresholds) -> Evidence | None:
    runs: list[list[tuple[str, tuple[int, int]]]] = []
    current: list[tuple[str, tuple[int, int]]] = []
    expect_number = True
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        sign = ""
        if t.kind is TokenKind.OPERATOR and t.text in "+-" and i + 1 < n and tokens[i + 1].kind is TokenKind.NUMBER:
            sign = "-" if t.text == "-" else ""
            i += 1
            t = tokens[i]
        if t.kind is TokenKind.NUMBER:
            value = sign + t.text
            if not expect_number:
                runs.append(current)
                current = []
            current.append((value, t.span))
            expect_number = False
        elif t.is_(",") and not expect_number:
            expect_number = True
        else:
            if current:
                runs.append(current)
            current = []
            expect_number = True
        i += 1
    if current:
        runs.append(current)
    w = th.number_run
    for run in runs:
        for s in range(0, len(run) - w + 1):
            window = run[s:s + w]
            values = [v for v, _ in window]
            repeats = sum(1 for a, b in zip(values, values[1:]) if a == b)
            single = all(len(v.lstrip("-")) == 1 and v.lstrip("-").isdigit() for v in values)
            if single or repeats / (w - 1) >= th.number_repeat_ratio:
                span = (window[0][1][0], window[-1][1][1])
                return Evidence(CollapseClass.NUMBER_SPAM, span, len(run), "single digits" if single else "repeats")
    return None


def _comma_spam(text: str, th: CollapseThresholds) -> Evidence | None:
    pattern = re.compile(r"[,'\"]{%d,}" % th.comma_run)
    squeezed = []
    positions = []
    for pos, ch in enumerate(text):
        if not ch.isspace():
            squeezed.append(ch)
            positions.append(pos)
    m = pattern.search("".join(squeezed))
    if m is None:
        return None
    return Evidence(CollapseClass.COMMA_SPAM, (positions[m.start()], positions[m.end() - 1] + 1), m.end() - m.start())


def _spacetoken_spam(tokens, th: CollapseThresholds) -> Evidence | None:
    hits = [t for t in tokens if t.kind is TokenKind.IDENTIFIER and t.text == "SPACETOKEN"]
    if len(hits) < th.spacetoken_count:
        return None
    return Evidence(CollapseClass.SPACETOKEN_SPAM, (hits[0].span[0], hits[-1].span[1]), len(hits))


def _structural(text: str, language: Language, original: MethodUnit) -> Evidence | None:
    try:
        unit = parse_source(text, language, lenient=True)
    except SyntaxProblem as err:
        return Evidence(CollapseClass.STRUCTURAL, err.span, 0, "unparseable")
    arity = len(original.params)
    if any(len(m.params) == arity for m in unit.methods):
        return None
    return Evidence(CollapseClass.STRUCTURAL, (0, len(text)), len(unit.methods), f"no method with {arity} parameter(s)")


def classify(text: str, language: Language | str, original: MethodUnit | None = None,
             thresholds: CollapseThresholds | None = None) -> CollapseVerdict:
    """Classify ``text`` into the collapse taxonomy. Accepts any input."""
    language = Language.coerce(language)
    th = thresholds or CollapseThresholds()
    tokens = [t for t in tokenize(text, language, lenient=True) if t.kind not in (TokenKind.COMMENT, TokenKind.INDENT)]
    found = [
        _import_spam(text, th),
        _number_spam(tokens, th),
        _comma_spam(text, th),
        _spacetoken_spam(tokens, th),
    ]
    # Structural is the fallback for collapses with no spam signature.
    if original is not None and not any(found):
        found.append(_structural(text, language, original))
    evidence = tuple(e for e in found if e is not None)
    return CollapseVerdict(frozenset(e.cls for e in evidence), evidence)
