"""R4: drop logical clauses the translator appended to conditions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from difflib import SequenceMatcher
from enum import Enum
from typing import Iterator

from ..syntax.conditions import with_clauses
from ..syntax.lexer import Language, SyntaxProblem
from ..syntax.nodes import CondChain, IfStmt, MethodUnit, Tokens, WhileStmt, iter_stmts
from ..syntax.parser import parse_source
from ..syntax.render import render_condition, render_tokens
from .focal import DEFAULT_FOCAL
from .pre import Direction
from .records import MutationRecord, Rule, applied_record, skipped_record


class PruneMode(str, Enum):
    COUNT = "count"
    MATCH = "match"


@dataclass(frozen=True)
class PrunePolicy:
    mode: PruneMode = PruneMode.COUNT
    # match mode only: map Python spellings onto Java ones before comparing
    normalize: bool = True


@dataclass(frozen=True)
class Conditional:
    kind: str  # "if" or "while"
    chain: CondChain
    span: tuple[int, int] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class CondPair:
    src: Conditional
    dst: Conditional

    @property
    def kind_mismatch(self) -> bool:
        return self.src.kind != self.dst.kind


@dataclass(frozen=True)
class CondAlignment:
    pairs: tuple[CondPair, ...]
    unmatched: tuple[int, int]  # (source side, translated side)


def conditionals(method: MethodUnit) -> list[Conditional]:
    """If/else-if/while conditions in pre-order."""
    out = []
    for stmt in iter_stmts(method.body):
        if isinstance(stmt, IfStmt):
            out.append(Conditional("if", stmt.cond, stmt.cond_span))
        elif isinstance(stmt, WhileStmt):
            out.append(Conditional("while", stmt.cond, stmt.cond_span))
    return out


def align_conditionals(src: MethodUnit, dst: MethodUnit) -> CondAlignment:
    """Pair conditionals by traversal order.

    Equal counts pair positionally, kind mismatches included. When the counts
    differ (a translator turned a ``while`` into a ``for``, say) pairing
    follows the longest common subsequence of kinds, so one lost conditional
    does not shift every later pair.
    """
    a, b = conditionals(src), conditionals(dst)
    if len(a) == len(b):
        return CondAlignment(tuple(CondPair(x, y) for x, y in zip(a, b)), (0, 0))
    matcher = SequenceMatcher(None, [c.kind for c in a], [c.kind for c in b], autojunk=False)
    pairs = tuple(
        CondPair(a[i + k], b[j + k]) for i, j, size in matcher.get_matching_blocks() for k in range(size)
    )
    return CondAlignment(pairs, (len(a) - len(pairs), len(b) - len(pairs)))


_TO_JAVA = {"and": "&&", "or": "||", "not": "!", "True": "true", "False": "false", "None": "null"}


def normalize_clause(tokens: Tokens, *, normalize: bool = True) -> str:
    texts = [t.text for t in tokens if t.text not in ("(", ")")]
    if normalize:
        texts = [_TO_JAVA.get(x, x) for x in texts]
    return " ".join(texts)


@dataclass(frozen=True)
class PruneOutcome:
    chain: CondChain
    applicable: bool
    applied: bool
    note: str = ""


def prune_extra_clauses(pair: CondPair, policy: PrunePolicy | None = None) -> PruneOutcome:
    policy = policy or PrunePolicy()
    src, dst = pair.src.chain, pair.dst.chain
    n, m = src.count, dst.count
    if pair.kind_mismatch:
        return PruneOutcome(dst, False, False, f"kind mismatch {pair.src.kind}/{pair.dst.kind}")
    if dst.mixed:
        return PruneOutcome(dst, False, False, "translated condition mixes && and ||")
    if m <= n:
        return PruneOutcome(dst, False, False)
    if n > 1 and src.op is not dst.op:
        return PruneOutcome(dst, True, False, "logical operator differs from the source")
    if policy.mode is PruneMode.COUNT:
        kept = list(dst.clauses[:n])
    else:
        pool = Counter(normalize_clause(c, normalize=policy.normalize) for c in src.clauses)
        kept = []
        for clause in dst.clauses:
            key = normalize_clause(clause, normalize=policy.normalize)
            if pool[key] > 0:
                pool[key] -= 1
                kept.append(clause)
        if not kept:
            return PruneOutcome(dst, True, False, "warning: no translated clause matches the source")
        if len(kept) == m:
            return PruneOutcome(dst, True, False, "all translated clauses match the source")
    return PruneOutcome(with_clauses(dst, kept), True, True, f"{m} -> {len(kept)} clauses")


@dataclass(frozen=True)
class PostResult:
    text: str
    records: tuple[MutationRecord, ...] = ()

    def __iter__(self) -> Iterator:
        return iter((self.text, self.records))


def _pick(methods: list[MethodUnit], name: str | None, arity: int | None) -> MethodUnit | None:
    if not methods:
        return None
    if name is not None:
        for m in methods:
            if m.name == name:
                return m
    if arity is not None:
        for m in methods:
            if len(m.params) == arity:
                return m
    return methods[0]


def _cond_text(chain: CondChain, language: Language) -> str:
    body = render_tokens(render_condition(chain, language))
    return f"( {body} )" if language is Language.JAVA else body


def apply_post(src_text: str, dst_text: str, policy: PrunePolicy | None = None,
               direction: Direction | str = Direction.P2J, focal_name: str | None = DEFAULT_FOCAL) -> PostResult:
    """Prune appended clauses in ``dst_text`` against ``src_text``.

    Only condition spans are rewritten. An unparseable translation is
    returned unchanged with an "unparseable" note.
    """
    policy = policy or PrunePolicy()
    direction = Direction.coerce(direction)
    try:
        src_unit = parse_source(src_text, direction.source, lenient=True)
        dst_unit = parse_source(dst_text, direction.target, lenient=True)
    except SyntaxProblem as err:
        return PostResult(dst_text, (skipped_record(Rule.R4_PRUNE, applicable=False, notes=f"unparseable: {err}"),))
    src = _pick(src_unit.methods, focal_name, None)
    if src is None:
        return PostResult(dst_text, (skipped_record(Rule.R4_PRUNE, applicable=False, notes="unparseable source"),))
    dst = _pick(dst_unit.methods, focal_name, len(src.params))
    if dst is None:
        return PostResult(dst_text, (skipped_record(Rule.R4_PRUNE, applicable=False, notes="unparseable"),))
    alignment = align_conditionals(src, dst)
    edits: list[tuple[tuple[int, int], str]] = []
    notes: list[str] = []
    applicable = False
    for k, pair in enumerate(alignment.pairs):
        outcome = prune_extra_clauses(pair, policy)
        applicable = applicable or outcome.applicable
        if outcome.note:
            notes.append(f"#{k} {outcome.note}")
        if outcome.applied and pair.dst.span is not None:
            edits.append((pair.dst.span, _cond_text(outcome.chain, direction.target)))
    if any(alignment.unmatched):
        notes.append("unmatched conditionals %d/%d" % alignment.unmatched)
    if not edits:
        return PostResult(dst_text, (skipped_record(Rule.R4_PRUNE, applicable=applicable, notes="; ".join(notes)),))
    out = dst_text
    for (start, end), text in sorted(edits, reverse=True):
        out = out[:start] + text + out[end:]
    return PostResult(out, (applied_record(Rule.R4_PRUNE, dst_text, out, "; ".join(notes)),))
