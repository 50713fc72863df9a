"""Adapters to the external ML translator, plus a deterministic mock."""

from __future__ import annotations

import random
import shlex
import subprocess
import urllib.error
import urllib.request
import zlib
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Protocol

from .rules.loops import detect_complex_for
from .rules.focal import DEFAULT_FOCAL, find_focal, has_context
from .rules.arrays import array_params
from .rules.pre import Direction, PreConfig, apply_pre
from .rules.records import PRE_RULES, RuleError
from .rules.rename import DEFAULT_ARR_PATTERN, matching_params
from .syntax.conditions import is_fully_parenthesized, op_token
from .syntax.lexer import Language, SyntaxProblem, Token, TokenKind, normalize, tokenize
from .syntax.nodes import CondChain, ForStmt, IfStmt, LogicOp, WhileStmt, iter_stmts
from .syntax.parser import parse_source

DEFAULT_TIMEOUT_S = 120.0


class TranslatorFailure(Exception):
    """Non-zero exit, timeout, or transport error from a translator."""


class FixtureMiss(KeyError):
    """The mock has no ground truth for the given input."""


class Translator(Protocol):
    kind: str

    def translate(self, text: str, direction: Direction) -> str: ...


@dataclass(frozen=True)
class SubprocessTranslator:
    """Method text on stdin, direction token as last argument, result on stdout."""

    command: str | tuple[str, ...]
    timeout: float = DEFAULT_TIMEOUT_S
    kind: str = "subprocess"

    def argv(self, direction: Direction) -> list[str]:
        base = shlex.split(self.command) if isinstance(self.command, str) else list(self.command)
        return base + [Direction.coerce(direction).value]

    def translate(self, text: str, direction: Direction) -> str:
        argv = self.argv(direction)
        try:
            proc = subprocess.run(argv, input=text.encode("utf-8"), capture_output=True, timeout=self.timeout)
        except subprocess.TimeoutExpired:
            raise TranslatorFailure(f"timed out after {self.timeout:g} s") from None
        except OSError as err:
            raise TranslatorFailure(f"cannot run {argv[0]!r}: {err}") from None
        if proc.returncode != 0:
            err = proc.stderr.decode("utf-8", "replace").strip()
            raise TranslatorFailure(f"exit status {proc.returncode}" + (f": {err}" if err else ""))
        try:
            return proc.stdout.decode("utf-8")
        except UnicodeDecodeError as err:
            raise TranslatorFailure(f"output is not UTF-8: {err}") from None


@dataclass(frozen=True)
class HttpTranslator:
    """POST the method text; ``X-Direction`` header; 200 means success."""

    url: str
    timeout: float = DEFAULT_TIMEOUT_S
    kind: str = "http"

    def translate(self, text: str, direction: Direction) -> str:
        req = urllib.request.Request(
            self.url,
            data=text.encode("utf-8"),
            method="POST",
            headers={"X-Direction": Direction.coerce(direction).value, "Content-Type": "text/plain; charset=utf-8"},
        )
        try:
            with urllib.request.urlopen(req, timeout=self.timeout) as resp:
                status = resp.status
                body = resp.read()
        except urllib.error.HTTPError as err:
            raise TranslatorFailure(f"HTTP {err.code}") from None
        except (urllib.error.URLError, OSError) as err:
            raise TranslatorFailure(f"transport error: {err}") from None
        if status != 200:
            raise TranslatorFailure(f"HTTP {status}")
        try:
            return body.decode("utf-8")
        except UnicodeDecodeError as err:
            raise TranslatorFailure(f"response is not UTF-8: {err}") from None


@dataclass(frozen=True)
class IdentityTranslator:
    """Echoes its input; handy for exercising the pipeline end to end."""

    kind: str = "mock"

    def translate(self, text: str, direction: Direction) -> str:
        return text


# ---------------------------------------------------------------- mock

PERFECT = "perfect"
ADDITIONAL_CONTEXT = "additional_context"
LOOP_CONVERSION = "loop_conversion"
TYPE_SENSITIVITY = "type_sensitivity"
EXTRA_CONSTRAINTS = "extra_constraints"
MISCELLANEOUS = "miscellaneous"
CATEGORY_PROFILES = (ADDITIONAL_CONTEXT, LOOP_CONVERSION, TYPE_SENSITIVITY, EXTRA_CONSTRAINTS, MISCELLANEOUS)
COLLAPSE_PROFILES = ("collapse_import", "collapse_number", "collapse_comma", "collapse_spacetoken")
PROFILES = (PERFECT,) + CATEGORY_PROFILES + COLLAPSE_PROFILES


def fixture_key(text: str, direction: Direction | str, focal_name: str = DEFAULT_FOCAL) -> str:
    """Canonical lookup key: the fully pre-processed input, token-normalized."""
    direction = Direction.coerce(direction)
    config = PreConfig(rules=frozenset(PRE_RULES), arr_threshold=1, focal_name=focal_name, lenient=True)
    try:
        text = apply_pre(text, direction, config).text
    except SyntaxProblem:
        pass
    return normalize(text, direction.source)


def import_spam(params: Iterable[str], modules: tuple[str, ...], rng: random.Random, lines: int = 12) -> str:
    head = f"def import ( {' , '.join(params)} ) :" if params else "def import ( ) :"
    body = []
    for _ in range(lines):
        names = [rng.choice(modules) for _ in range(rng.randint(2, 6))]
        body.append("    import " + " , ".join(names))
    return "\n".join([head] + body) + "\n"


def number_spam(rng: random.Random, count: int = 40) -> str:
    digits = ["0"] * count
    for k in range(0, count, rng.randint(5, 9)):
        digits[k] = str(rng.randint(0, 9))
    return "- 1 , " + " , ".join(digits) + "\n"


def comma_spam(rng: random.Random, count: int = 24) -> str:
    return "def " + "','" * rng.randint(count // 2, count) + "\n"


def spacetoken_spam(rng: random.Random, words: int = 6) -> str:
    vocab = ["CEILING", "in", "a", "b", "c", "param0", "get"]
    parts = ["def"]
    for _ in range(words):
        parts += ["SPACETOKEN", rng.choice(vocab)]
    return " ".join(parts) + "\n"


@dataclass
class MockTranslator:
    """Returns ground-truth translations, injecting the known blind spots.

    ``fixtures`` maps :func:`fixture_key` of an input to its ground truth.
    ``profiles`` selects which error patterns to inject: any subset of the
    five category profiles (or ``perfect`` for none); a ``collapse_*``
    profile makes every output that kind of collapse.
    """

    direction: Direction
    fixtures: Mapping[str, str] = field(default_factory=dict)
    profiles: frozenset[str] = frozenset({PERFECT})
    seed: int = 0
    focal_name: str = DEFAULT_FOCAL
    arr_threshold: int = 2
    arr_pattern: str = DEFAULT_ARR_PATTERN
    kind: str = "mock"

    def __post_init__(self):
        self.direction = Direction.coerce(self.direction)
        if isinstance(self.profiles, str):
            self.profiles = frozenset(p.strip() for p in self.profiles.split(",") if p.strip())
        self.profiles = frozenset(self.profiles)
        unknown = self.profiles - set(PROFILES) - {"all"}
        if unknown:
            raise ValueError(f"unknown mock profile(s): {', '.join(sorted(unknown))}")
        if "all" in self.profiles:
            self.profiles = frozenset(CATEGORY_PROFILES)

    def _rng(self, key: str) -> random.Random:
        return random.Random(zlib.crc32(key.encode("utf-8")) ^ self.seed)

    def translate(self, text: str, direction: Direction | None = None) -> str:
        direction = Direction.coerce(direction or self.direction)
        key = fixture_key(text, direction, self.focal_name)
        rng = self._rng(key)
        for profile in COLLAPSE_PROFILES:
            if profile in self.profiles:
                return self._collapse(profile, rng, text, direction)
        trigger = self._trigger(text, direction)
        if trigger is not None:
            return self._collapse(trigger, rng, text, direction)
        if key not in self.fixtures:
            raise FixtureMiss(key[:80])
        out = self.fixtures[key]
        # appended clauses were only ever seen in Python -> Java output
        if EXTRA_CONSTRAINTS in self.profiles and direction is Direction.P2J:
            out = append_clauses(out, direction.target, rng)
        if MISCELLANEOUS in self.profiles:
            out = corrupt(out, direction.target, rng)
        return out

    def _trigger(self, text: str, direction: Direction) -> str | None:
        """Which collapse (if any) the input provokes."""
        try:
            unit = parse_source(text, direction.source, lenient=True)
            focal = find_focal(unit, self.focal_name)
        except (SyntaxProblem, RuleError):
            return None
        if ADDITIONAL_CONTEXT in self.profiles and has_context(unit, focal):
            return "collapse_spacetoken" if direction is Direction.J2P else "collapse_comma"
        if direction is Direction.J2P:
            if LOOP_CONVERSION in self.profiles and any(
                isinstance(s, ForStmt) and detect_complex_for(s) for s in iter_stmts(focal.body)
            ):
                return "collapse_import:inspect"
            if TYPE_SENSITIVITY in self.profiles and any(p.dims == 1 for p in array_params(focal)):
                return "collapse_import:numpy"
        elif TYPE_SENSITIVITY in self.profiles:
            if len(matching_params(focal, self.arr_pattern)) >= self.arr_threshold:
                return "collapse_number"
        return None

    def _collapse(self, profile: str, rng: random.Random, text: str, direction: Direction) -> str:
        kind, _, flavor = profile.partition(":")
        if kind == "collapse_import":
            modules = {
                "inspect": ("inspect",),
                "numpy": ("numpy", "numpy", "numpy", "array", "tuple"),
            }.get(flavor, ("numpy", "stream", "tuple", "array"))
            params = _param_names(text, direction.source, self.focal_name)
            return import_spam(params, modules, rng)
        if kind == "collapse_number":
            return number_spam(rng)
        if kind == "collapse_comma":
            return comma_spam(rng)
        return spacetoken_spam(rng)


def _param_names(text: str, language: Language, focal: str) -> list[str]:
    try:
        unit = parse_source(text, language, lenient=True)
        return [p.name for p in find_focal(unit, focal).params]
    except (SyntaxProblem, RuleError):
        return []


def _extra_clause(chain: CondChain, language: Language, rng: random.Random) -> tuple[Token, ...]:
    if rng.random() < 0.5:
        first = chain.clauses[0]
        return first if _wrapped(first) else _wrap(first)
    ident = next((t for c in chain.clauses for t in c if t.kind is TokenKind.IDENTIFIER), None)
    name = ident.text if ident is not None else "x"
    return tuple(tokenize(f"( {name} % 10 == 0 )", language))


def _wrapped(tokens) -> bool:
    return is_fully_parenthesized(tokens)


def _wrap(tokens) -> tuple[Token, ...]:
    return (Token(TokenKind.PUNCTUATION, "("),) + tuple(tokens) + (Token(TokenKind.PUNCTUATION, ")"),)


def append_clauses(text: str, language: Language, rng: random.Random) -> str:
    """Append one clause to every if/while condition, as the translator does."""
    try:
        unit = parse_source(text, language)
    except SyntaxProblem:
        return text
    edits = []
    for method in unit.methods:
        for stmt in iter_stmts(method.body):
            if not isinstance(stmt, (IfStmt, WhileStmt)) or stmt.cond.mixed or stmt.cond_span is None:
                continue
            chain = stmt.cond
            op = chain.op if chain.op is not LogicOp.SINGLE else LogicOp.AND
            clauses = tuple(c if chain.count > 1 or _wrapped(c) else _wrap(c) for c in chain.clauses)
            extended = CondChain(op, clauses + (_extra_clause(chain, language, rng),))
            edits.append((stmt.cond_span, _render_chain(extended, language)))
    for (start, end), new in sorted(edits, reverse=True):
        text = text[:start] + new + text[end:]
    return text


def _render_chain(chain: CondChain, language: Language) -> str:
    sep = f" {op_token(chain.op, language)} "
    body = sep.join(" ".join(t.text for t in c) for c in chain.clauses)
    return f"( {body} )" if language is Language.JAVA else body


def corrupt(text: str, language: Language, rng: random.Random) -> str:
    """A small parse-clean semantic slip: flip one arithmetic operator or bump a literal."""
    try:
        toks = tokenize(text, language)
    except SyntaxProblem:
        return text
    flips = {"+": "-", "-": "+", "*": "+"}
    candidates = [t for t in toks if t.kind is TokenKind.OPERATOR and t.text in flips]
    if candidates:
        t = candidates[rng.randrange(len(candidates))]
        return text[: t.span[0]] + flips[t.text] + text[t.span[1]:]
    numbers = [t for t in toks if t.kind is TokenKind.NUMBER and t.text.isdigit()]
    if numbers:
        t = numbers[rng.randrange(len(numbers))]
        return text[: t.span[0]] + str(int(t.text) + 1) + text[t.span[1]:]
    return text
