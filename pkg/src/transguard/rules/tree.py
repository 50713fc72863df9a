"""Tree rewriting helpers shared by the rules."""

from __future__ import annotations

from dataclasses import replace
from typing import Callable, Iterator, Sequence

from ..syntax.conditions import chain_tokens, parse_condition
from ..syntax.lexer import Language, Token, TokenKind
from ..syntax.nodes import (
    Block,
    BreakStmt,
    CompoundStmt,
    CondChain,
    ContinueStmt,
    DeclStmt,
    ExprStmt,
    ForHeader,
    ForStmt,
    IfStmt,
    MethodUnit,
    OpaqueStmt,
    ReturnStmt,
    Stmt,
    SyntaxUnit,
    Tokens,
    WhileStmt,
)
from ..syntax.render import render

# Role names passed to token-run callbacks.
EXPR_STMT = "expr_stmt"
DECL = "decl"
RETURN = "return"
COND = "cond"
FOR_INIT = "for_init"
FOR_UPDATE = "for_update"
HEAD = "head"
TAIL = "tail"
OPAQUE = "opaque"
LABEL = "label"

RunFn = Callable[[Tokens, str], Tokens]


def map_runs(block: Block, fn: RunFn, language: Language) -> Block:
    """Rebuild ``block`` with every token run passed through ``fn``."""
    return Block(tuple(_map_stmt(s, fn, language) for s in block.stmts))


def _map_cond(chain: CondChain, fn: RunFn, language: Language) -> CondChain:
    toks = chain_tokens(chain, language)
    new = fn(toks, COND)
    if new == toks:
        return chain
    return parse_condition(new, language)


def _map_stmt(stmt: Stmt, fn: RunFn, lang: Language) -> Stmt:
    if isinstance(stmt, ExprStmt):
        return replace(stmt, tokens=fn(stmt.tokens, EXPR_STMT))
    if isinstance(stmt, DeclStmt):
        return replace(stmt, tokens=fn(stmt.tokens, DECL))
    if isinstance(stmt, ReturnStmt):
        return replace(stmt, value=fn(stmt.value, RETURN))
    if isinstance(stmt, (BreakStmt, ContinueStmt)):
        return replace(stmt, label=fn(stmt.label, LABEL))
    if isinstance(stmt, OpaqueStmt):
        return replace(stmt, tokens=fn(stmt.tokens, OPAQUE))
    if isinstance(stmt, WhileStmt):
        return replace(stmt, cond=_map_cond(stmt.cond, fn, lang), body=map_runs(stmt.body, fn, lang))
    if isinstance(stmt, IfStmt):
        orelse = stmt.orelse
        if isinstance(orelse, IfStmt):
            orelse = _map_stmt(orelse, fn, lang)
        elif isinstance(orelse, Block):
            orelse = map_runs(orelse, fn, lang)
        return replace(stmt, cond=_map_cond(stmt.cond, fn, lang), then=map_runs(stmt.then, fn, lang), orelse=orelse)
    if isinstance(stmt, ForStmt):
        h = stmt.header
        init = tuple(replace(s, tokens=fn(s.tokens, FOR_INIT)) for s in h.init)
        cond = _map_cond(h.cond, fn, lang) if h.cond is not None else None
        update = tuple(replace(s, tokens=fn(s.tokens, FOR_UPDATE)) for s in h.update)
        return replace(stmt, header=ForHeader(init, cond, update), body=map_runs(stmt.body, fn, lang))
    if isinstance(stmt, CompoundStmt):
        parts = tuple((fn(head, HEAD), map_runs(body, fn, lang)) for head, body in stmt.parts)
        return replace(stmt, parts=parts, tail=fn(stmt.tail, TAIL))
    raise TypeError(type(stmt).__name__)


def iter_runs(block: Block, language: Language) -> Iterator[tuple[Tokens, str]]:
    """Every token run in ``block`` with its role, in source order."""
    found: list[tuple[Tokens, str]] = []

    def spy(run: Tokens, role: str) -> Tokens:
        found.append((run, role))
        return run

    map_runs(block, spy, language)
    return iter(found)


def identifiers(block: Block, language: Language) -> Iterator[Token]:
    for run, _ in iter_runs(block, language):
        for tok in run:
            if tok.kind is TokenKind.IDENTIFIER:
                yield tok


def identifier_names(stmts: Sequence[Stmt] | Block, language: Language) -> set[str]:
    block = stmts if isinstance(stmts, Block) else Block(tuple(stmts))
    return {t.text for t in identifiers(block, language)}


def splice_method(source: str, method: MethodUnit, new_method: MethodUnit) -> str:
    """Replace ``method``'s text in ``source`` with the rendering of ``new_method``."""
    start, end = method.span
    text = render(new_method, method.language).rstrip("\n")
    line_start = source.rfind("\n", 0, start) + 1
    pad = source[line_start:start]
    if pad and not pad.strip():
        text = text.replace("\n", "\n" + pad)
    return source[:start] + text + source[end:]


def find_methods(unit: SyntaxUnit, name: str) -> list[MethodUnit]:
    return [m for m in unit.methods if m.name == name]


def tok(kind: TokenKind, text: str) -> Token:
    return Token(kind, text)


def ident(text: str) -> Token:
    return Token(TokenKind.IDENTIFIER, text)


def punct(text: str) -> Token:
    return Token(TokenKind.PUNCTUATION, text)


def op(text: str) -> Token:
    return Token(TokenKind.OPERATOR, text)


def kw(text: str) -> Token:
    return Token(TokenKind.KEYWORD, text)
