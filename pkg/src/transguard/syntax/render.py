"""Pretty-printer producing the corpus' space-tokenized style."""

from __future__ import annotations

from typing import Sequence, Union

from .conditions import chain_tokens, is_fully_parenthesized
from .lexer import DEDENT, INDENT, NEWLINE, Language, Token, TokenKind
from .nodes import (
    Block,
    BreakStmt,
    CompoundStmt,
    CondChain,
    ContinueStmt,
    DeclStmt,
    ExprStmt,
    ForStmt,
    IfStmt,
    MethodUnit,
    OpaqueStmt,
    OtherItem,
    ReturnStmt,
    Stmt,
    SyntaxUnit,
    WhileStmt,
)

__all__ = ["render", "render_tokens", "render_condition"]

INDENT_UNIT = "    "

Node = Union[SyntaxUnit, MethodUnit, OtherItem, Block, Stmt, CondChain, Sequence[Token]]


def render(node: Node, language: Language | str) -> str:
    """Render a tree (or bare token run) back to source text."""
    language = Language.coerce(language)
    w = _Writer(language)
    if isinstance(node, SyntaxUnit):
        w.unit(node)
    elif isinstance(node, MethodUnit):
        w.method(node)
    elif isinstance(node, OtherItem):
        w.flow(node.tokens)
    elif isinstance(node, Block):
        if language is Language.JAVA:
            w.java_block_open((), node)
        else:
            w.stmts(node)
    elif isinstance(node, CondChain):
        return " ".join(t.text for t in render_condition(node, language))
    elif isinstance(node, (tuple, list)):
        return render_tokens(node)
    else:
        w.stmt(node)
    return w.text()


def render_tokens(tokens: Sequence[Token]) -> str:
    """Space-join tokens, breaking lines after line comments."""
    out: list[str] = []
    for i, tok in enumerate(tokens):
        if tok.is_marker:
            continue
        out.append(tok.text)
        if _is_line_comment(tok) and i + 1 < len(tokens):
            out.append("\n")
    return " ".join(out).replace(" \n ", "\n")


def render_condition(chain: CondChain, language: Language | str) -> tuple[Token, ...]:
    """Condition tokens as they appear inside the statement.

    For Java this excludes the statement's own parentheses. A rebuilt chain
    reduced to one fully parenthesized clause sheds that clause's
    parentheses, so ``( x != 0 )`` renders as ``while ( x != 0 )``.
    """
    toks = chain_tokens(chain, language)
    if chain.raw is None and chain.count == 1 and is_fully_parenthesized(toks):
        toks = toks[1:-1]
    return toks


def _is_line_comment(tok: Token) -> bool:
    return tok.kind is TokenKind.COMMENT and (tok.text.startswith("//") or tok.text.startswith("#"))


class _Writer:
    def __init__(self, language: Language):
        self.lang = language
        self.lines: list[str] = []
        self.level = 0

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def line(self, text: str) -> None:
        pad = INDENT_UNIT * self.level
        for piece in text.split("\n"):
            self.lines.append(pad + piece if piece else piece)

    # ---- items

    def unit(self, unit: SyntaxUnit) -> None:
        for item in unit.items:
            if isinstance(item, MethodUnit):
                self.method(item)
            else:
                self.flow(item.tokens)

    def flow(self, tokens: Sequence[Token]) -> None:
        if self.lang is Language.JAVA:
            self._java_flow(tokens)
        else:
            self._python_flow(tokens)

    def _java_flow(self, tokens: Sequence[Token]) -> None:
        current: list[str] = []
        depth = 0  # parentheses; `;` inside a for-header does not break lines

        def flush():
            if current:
                self.line(" ".join(current))
                current.clear()

        for tok in tokens:
            if tok.kind is TokenKind.COMMENT:
                flush()
                self.line(tok.text)
                continue
            if tok.is_("}"):
                flush()
                self.level = max(0, self.level - 1)
                self.line("}")
                continue
            current.append(tok.text)
            if tok.is_("("):
                depth += 1
            elif tok.is_(")"):
                depth = max(0, depth - 1)
            elif tok.is_("{"):
                flush()
                self.level += 1
            elif tok.is_(";") and depth == 0:
                flush()
        flush()

    def _python_flow(self, tokens: Sequence[Token]) -> None:
        current: list[str] = []

        def flush():
            if current:
                self.line(" ".join(current))
                current.clear()

        for tok in tokens:
            if tok.is_marker:
                if tok.text == NEWLINE:
                    flush()
                elif tok.text == INDENT:
                    flush()
                    self.level += 1
                elif tok.text == DEDENT:
                    flush()
                    self.level = max(0, self.level - 1)
                continue
            current.append(tok.text)
            if tok.kind is TokenKind.COMMENT:
                flush()
        flush()

    def method(self, m: MethodUnit) -> None:
        head: list[str] = []
        for tok in m.modifiers:
            if tok.kind is TokenKind.COMMENT:
                self.line(tok.text)
            else:
                head.append(tok.text)
        params = " , ".join(render_tokens(p.tokens) if p.tokens else _param_text(p) for p in m.params)
        head.append(m.name)
        head.append(f"( {params} )" if params else "( )")
        head.extend(t.text for t in m.trailer)
        if self.lang is Language.JAVA:
            self.java_block_open(head, m.body)
        else:
            self.line(" ".join(head) + " :")
            self.suite(m.body)

    # ---- statements

    def stmts(self, block: Block) -> None:
        for stmt in block.stmts:
            self.stmt(stmt)

    def suite(self, block: Block) -> None:
        self.level += 1
        if block.stmts:
            self.stmts(block)
        else:
            self.line("pass")
        self.level -= 1

    def java_block_open(self, head: Sequence[str], block: Block, *, prefix: str = "") -> None:
        opener = " ".join(x for x in (prefix, " ".join(head)) if x)
        opener = f"{opener} {{" if opener else "{"
        if not block.stmts:
            self.line(opener + " }")
            return
        self.line(opener)
        self.level += 1
        self.stmts(block)
        self.level -= 1
        self.line("}")

    def _java_chain(self, head: Sequence[str], block: Block) -> None:
        """Continue a construct on the line holding the previous ``}``."""
        last = self.lines.pop()
        closing = last.strip()
        pad_level = (len(last) - len(last.lstrip())) // len(INDENT_UNIT)
        saved = self.level
        self.level = pad_level
        self.java_block_open(head, block, prefix=closing)
        self.level = saved

    def comments(self, stmt: Stmt) -> None:
        for tok in stmt.comments:
            self.line(tok.text)

    def stmt(self, stmt: Stmt) -> None:
        self.comments(stmt)
        java = self.lang is Language.JAVA
        semi = " ;" if java else ""
        if isinstance(stmt, (ExprStmt, DeclStmt)):
            self.line(render_tokens(stmt.tokens) + semi)
        elif isinstance(stmt, OpaqueStmt):
            if stmt.tokens:
                if java and any(t.is_("{") for t in stmt.tokens):
                    self._java_flow(stmt.tokens)
                else:
                    self.line(render_tokens(stmt.tokens))
        elif isinstance(stmt, ReturnStmt):
            self.line(" ".join(["return", render_tokens(stmt.value)]).rstrip() + semi)
        elif isinstance(stmt, BreakStmt):
            self.line(" ".join(["break", render_tokens(stmt.label)]).rstrip() + semi)
        elif isinstance(stmt, ContinueStmt):
            self.line(" ".join(["continue", render_tokens(stmt.label)]).rstrip() + semi)
        elif isinstance(stmt, WhileStmt):
            self._conditional("while", stmt.cond, stmt.body)
        elif isinstance(stmt, IfStmt):
            self._if(stmt)
        elif isinstance(stmt, ForStmt):
            self._for(stmt)
        elif isinstance(stmt, CompoundStmt):
            self._compound(stmt)
        else:  # pragma: no cover - exhaustive over Stmt
            raise TypeError(f"cannot render {type(stmt).__name__}")

    def _cond_text(self, chain: CondChain) -> str:
        return render_tokens(render_condition(chain, self.lang))

    def _conditional(self, keyword: str, chain: CondChain, body: Block, *, chained: bool = False) -> None:
        if self.lang is Language.JAVA:
            head = [keyword, f"( {self._cond_text(chain)} )"]
            if chained:
                self._java_chain(head, body)
            else:
                self.java_block_open(head, body)
        else:
            self.line(f"{keyword} {self._cond_text(chain)} :")
            self.suite(body)

    def _if(self, stmt: IfStmt) -> None:
        java = self.lang is Language.JAVA
        self._conditional("if", stmt.cond, stmt.then)
        orelse = stmt.orelse
        while orelse is not None:
            if isinstance(orelse, IfStmt):
                # comments sit between the previous branch and `else if`
                for tok in orelse.comments:
                    self.line(tok.text)
                if java:
                    self._conditional("else if", orelse.cond, orelse.then, chained=not orelse.comments)
                else:
                    self._conditional("elif", orelse.cond, orelse.then)
                orelse = orelse.orelse
            else:
                if java:
                    self._java_chain(["else"], orelse)
                else:
                    self.line("else :")
                    self.suite(orelse)
                orelse = None

    def _for(self, stmt: ForStmt) -> None:
        h = stmt.header
        init = " , ".join(render_tokens(s.tokens) for s in h.init)
        cond = self._cond_text(h.cond) if h.cond is not None else ""
        update = " , ".join(render_tokens(s.tokens) for s in h.update)
        header = "for ( " + " ".join(f"{init} ; {cond} ; {update}".split()) + " )"
        self.java_block_open([header], stmt.body)

    def _compound(self, stmt: CompoundStmt) -> None:
        java = self.lang is Language.JAVA
        for k, (head, block) in enumerate(stmt.parts):
            head_text = render_tokens(head)
            if java:
                if k == 0:
                    self.java_block_open([head_text] if head_text else [], block)
                else:
                    self._java_chain([head_text], block)
            else:
                self.line(head_text)
                self.suite(block)
        if stmt.tail:
            tail = render_tokens(stmt.tail)
            if java:
                last = self.lines.pop()
                self.lines.append(f"{last} {tail}")
            else:
                self.line(tail)


def _param_text(param) -> str:
    return f"{param.type} {param.name}" if param.type else param.name
