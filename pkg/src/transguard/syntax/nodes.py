"""Immutable structural view of a parsed source file.

Token spans and raw condition tokens are excluded from equality, so two
trees compare equal when they have the same structure and token texts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Union

from .lexer import Language, Token, TokenKind

Tokens = tuple[Token, ...]


class LogicOp(str, Enum):
    AND = "and"
    OR = "or"
    SINGLE = "single"


@dataclass(frozen=True)
class CondChain:
    """A condition split into its top-level homogeneous clause chain."""

    op: LogicOp
    clauses: tuple[Tokens, ...]
    # True when both && and || appear at top level (so no split happened).
    mixed: bool = False
    raw: Tokens | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if (self.op is LogicOp.SINGLE) != (len(self.clauses) == 1):
            raise ValueError("op=single iff exactly one clause")

    @property
    def count(self) -> int:
        return len(self.clauses)

    def clause_texts(self) -> list[str]:
        return [" ".join(t.text for t in c) for c in self.clauses]


@dataclass(frozen=True)
class Block:
    stmts: tuple["Stmt", ...] = ()

    def __iter__(self) -> Iterator["Stmt"]:
        return iter(self.stmts)

    def __len__(self) -> int:
        return len(self.stmts)


@dataclass(frozen=True, kw_only=True)
class _Stmt:
    # Comments preceding the statement, kept verbatim.
    comments: Tokens = ()


@dataclass(frozen=True, kw_only=True)
class ExprStmt(_Stmt):
    tokens: Tokens


@dataclass(frozen=True, kw_only=True)
class DeclStmt(_Stmt):
    """Java local variable declaration (tokens exclude the ``;``)."""

    tokens: Tokens

    @property
    def names(self) -> tuple[str, ...]:
        return declared_names(self.tokens)


@dataclass(frozen=True, kw_only=True)
class ReturnStmt(_Stmt):
    value: Tokens = ()


@dataclass(frozen=True, kw_only=True)
class BreakStmt(_Stmt):
    label: Tokens = ()


@dataclass(frozen=True, kw_only=True)
class ContinueStmt(_Stmt):
    label: Tokens = ()


@dataclass(frozen=True, kw_only=True)
class OpaqueStmt(_Stmt):
    """Fallback: a token run rendered verbatim (terminators included)."""

    tokens: Tokens


@dataclass(frozen=True)
class ForHeader:
    init: tuple[Union[DeclStmt, ExprStmt], ...] = ()
    cond: CondChain | None = None
    update: tuple[ExprStmt, ...] = ()


@dataclass(frozen=True, kw_only=True)
class ForStmt(_Stmt):
    header: ForHeader
    body: Block


@dataclass(frozen=True, kw_only=True)
class WhileStmt(_Stmt):
    cond: CondChain
    body: Block
    cond_span: tuple[int, int] | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, kw_only=True)
class IfStmt(_Stmt):
    cond: CondChain
    then: Block
    orelse: Union["IfStmt", Block, None] = None
    cond_span: tuple[int, int] | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True, kw_only=True)
class CompoundStmt(_Stmt):
    """Any other block-bearing statement (try, switch, do, Python for, ...).

    ``parts`` holds (header tokens, block) pairs; ``tail`` holds trailing
    tokens such as the ``while ( c ) ;`` of a do-loop.
    """

    parts: tuple[tuple[Tokens, Block], ...]
    tail: Tokens = ()

    @property
    def is_loop(self) -> bool:
        head = self.parts[0][0] if self.parts else ()
        return bool(head) and head[0].text in ("for", "while", "do")

    @property
    def is_bare_block(self) -> bool:
        return len(self.parts) == 1 and not self.parts[0][0] and not self.tail


Stmt = Union[ExprStmt, DeclStmt, ReturnStmt, BreakStmt, ContinueStmt, OpaqueStmt, ForStmt, WhileStmt, IfStmt, CompoundStmt]


@dataclass(frozen=True)
class Param:
    name: str
    type: str | None
    tokens: Tokens = field(default=(), repr=False)


@dataclass(frozen=True)
class MethodUnit:
    name: str
    params: tuple[Param, ...]
    body: Block
    modifiers: Tokens = ()
    # Tokens between the parameter list and the body (throws clause,
    # Python return annotation).
    trailer: Tokens = ()
    language: Language = Language.JAVA
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class OtherItem:
    tokens: Tokens
    span: tuple[int, int] = field(default=(0, 0), compare=False)


Item = Union[MethodUnit, OtherItem]


@dataclass(frozen=True)
class SyntaxUnit:
    language: Language
    items: tuple[Item, ...]
    source: str = field(default="", compare=False, repr=False)

    @property
    def methods(self) -> list[MethodUnit]:
        return [it for it in self.items if isinstance(it, MethodUnit)]

    def item_spans(self) -> list[tuple[int, int]]:
        """Partition of ``source`` among the items.

        Each item owns the bytes from its first token up to the next item's
        first token; the first item also owns any leading whitespace.
        """
        if not self.items:
            return []
        starts = [it.span[0] for it in self.items]
        starts[0] = 0
        ends = starts[1:] + [len(self.source)]
        return list(zip(starts, ends))


def declared_names(tokens: Tokens) -> tuple[str, ...]:
    """Names introduced by a Java declaration ``T a = 1 , b [ ] , c``."""
    n = len(tokens)
    i = 0
    angle = 0
    while i < n:
        tok = tokens[i]
        if tok.text == "<":
            angle += 1
        elif tok.text in (">", ">>", ">>>"):
            angle -= len(tok.text)
        elif (
            angle <= 0
            and tok.kind is TokenKind.IDENTIFIER
            and (i + 1 == n or tokens[i + 1].text in ("=", ",", "[", ":", ";"))
        ):
            break
        i += 1
    names: list[str] = []
    while i < n and tokens[i].kind is TokenKind.IDENTIFIER:
        names.append(tokens[i].text)
        depth = 0
        i += 1
        while i < n:
            text = tokens[i].text
            if text in ("(", "[", "{"):
                depth += 1
            elif text in (")", "]", "}"):
                depth -= 1
            elif text == "," and depth == 0:
                break
            i += 1
        i += 1
    return tuple(names)


def iter_stmts(block: Block) -> Iterator[Stmt]:
    """Pre-order walk over every statement nested in ``block``."""
    for stmt in block.stmts:
        yield stmt
        yield from iter_stmts_in(stmt)


def iter_stmts_in(stmt: Stmt) -> Iterator[Stmt]:
    for child in child_blocks(stmt):
        yield from iter_stmts(child)


def child_blocks(stmt: Stmt) -> list[Block]:
    if isinstance(stmt, (ForStmt, WhileStmt)):
        return [stmt.body]
    if isinstance(stmt, IfStmt):
        out = [stmt.then]
        if isinstance(stmt.orelse, IfStmt):
            out.append(Block((stmt.orelse,)))
        elif isinstance(stmt.orelse, Block):
            out.append(stmt.orelse)
        return out
    if isinstance(stmt, CompoundStmt):
        return [b for _, b in stmt.parts]
    return []
