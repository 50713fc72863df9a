"""Two-tier structural parser.

Items (methods vs everything else) are segmented by braces (Java) or by
indentation (Python); method bodies are then parsed into the handful of
statement kinds the rewrite rules inspect. Anything unrecognized becomes an
:class:`OpaqueStmt`, so well-bracketed input never fails to parse.
"""

from __future__ import annotations

from typing import Sequence

from .conditions import check_balanced, match_bracket, parse_condition, split_top_level
from .lexer import (
    BAD_DEDENT,
    DEDENT,
    INDENT,
    NEWLINE,
    Language,
    ParseError,
    SyntaxProblem,
    Token,
    TokenKind,
    tokenize,
)
from .nodes import (
    Block,
    BreakStmt,
    CompoundStmt,
    ContinueStmt,
    DeclStmt,
    ExprStmt,
    ForHeader,
    ForStmt,
    IfStmt,
    Item,
    MethodUnit,
    OpaqueStmt,
    OtherItem,
    Param,
    ReturnStmt,
    Stmt,
    SyntaxUnit,
    Tokens,
    WhileStmt,
)

__all__ = ["parse_unit", "parse_source", "parse_method_text", "looks_like_decl"]

JAVA_PRIMITIVES = frozenset("boolean byte char short int long float double void var".split())
_JAVA_MODIFIERS = frozenset(
    "public private protected static final abstract native synchronized transient volatile strictfp default".split()
)


def parse_unit(tokens: Sequence[Token], language: Language | str, *, lenient: bool = False,
               source: str = "") -> SyntaxUnit:
    """Segment a token stream into methods and other items."""
    language = Language.coerce(language)
    if language is Language.JAVA:
        items = _JavaParser(tokens, lenient).parse_items()
    else:
        items = _PythonParser(tokens, lenient).parse_items()
    return SyntaxUnit(language, tuple(items), source)


def parse_source(text: str, language: Language | str, *, lenient: bool = False) -> SyntaxUnit:
    """Tokenize and parse ``text``."""
    return parse_unit(tokenize(text, language, lenient=lenient), language, lenient=lenient, source=text)


def parse_method_text(text: str, language: Language | str, name: str | None = None, *,
                      lenient: bool = False) -> MethodUnit:
    """Parse ``text`` and return the method called ``name`` (or the first)."""
    unit = parse_source(text, language, lenient=lenient)
    methods = unit.methods
    if name is not None:
        methods = [m for m in methods if m.name == name]
    if not methods:
        raise ParseError(f"no method{' ' + name if name else ''} found", (0, len(text)))
    return methods[0]


def _extent(tokens: Sequence[Token]) -> tuple[int, int]:
    real = [t for t in tokens if not t.is_marker]
    if not real:
        pos = tokens[0].span[0] if tokens else 0
        return (pos, pos)
    return (real[0].span[0], real[-1].span[1])


def looks_like_decl(tokens: Sequence[Token]) -> bool:
    """Heuristic: does a Java statement token run declare locals?"""
    i = 0
    n = len(tokens)
    while i < n and (tokens[i].text in ("final",) or tokens[i].text == "@"):
        if tokens[i].text == "@":
            i += 2
            if i < n and tokens[i].is_("("):
                close = match_bracket(tokens, i)
                i = n if close < 0 else close + 1
        else:
            i += 1
    if i >= n:
        return False
    first = tokens[i]
    if first.kind is TokenKind.KEYWORD and first.text not in JAVA_PRIMITIVES:
        return False
    if first.kind not in (TokenKind.KEYWORD, TokenKind.IDENTIFIER):
        return False
    i += 1
    # qualified names and generic arguments
    angle = 0
    while i < n:
        text = tokens[i].text
        if text == "<":
            angle += 1
        elif text in (">", ">>", ">>>"):
            angle -= len(text)
            if angle < 0:
                return False
        elif angle > 0:
            if text not in (",", ".", "?", "[", "]", "extends", "super", "&") and tokens[i].kind not in (
                TokenKind.IDENTIFIER, TokenKind.KEYWORD):
                return False
        elif text == "." and i + 1 < n and tokens[i + 1].kind is TokenKind.IDENTIFIER:
            i += 1
        elif text == "[" and i + 1 < n and tokens[i + 1].is_("]"):
            i += 1
        else:
            break
        i += 1
    if angle != 0 or i >= n or tokens[i].kind is not TokenKind.IDENTIFIER:
        return False
    return i + 1 == n or tokens[i + 1].text in ("=", ",", "[", ":")


# ---------------------------------------------------------------- Java


class _JavaParser:
    def __init__(self, tokens: Sequence[Token], lenient: bool):
        self.toks = list(tokens)
        self.n = len(self.toks)
        self.lenient = lenient

    def error(self, message: str, tok_index: int) -> ParseError:
        tok = self.toks[min(tok_index, self.n - 1)] if self.n else None
        return ParseError(message, tok.span if tok else (0, 0))

    # ---- item segmentation

    def parse_items(self) -> list[Item]:
        items: list[Item] = []
        pending: list[Token] = []
        class_depth = 0
        i = 0
        toks = self.toks

        def flush():
            if pending:
                items.append(OtherItem(tuple(pending), _extent(pending)))
                pending.clear()

        while i < self.n:
            tok = toks[i]
            if tok.kind is TokenKind.COMMENT:
                pending.append(tok)
                i += 1
                continue
            if tok.is_("}"):
                if class_depth == 0 and not self.lenient:
                    raise self.error("unbalanced '}'", i)
                class_depth = max(0, class_depth - 1)
                pending.append(tok)
                i += 1
                continue
            end = self._run_end(i)
            run = toks[i:end + 1] if end < self.n else toks[i:]
            last = run[-1]
            if last.is_("{"):
                kind = self._brace_run_kind(run)
                if kind == "class":
                    pending.extend(run)
                    class_depth += 1
                    i = end + 1
                    continue
                if kind == "method":
                    close = match_bracket(toks, end)
                    comments = self._split_leading_comments(pending)
                    flush()
                    if close < 0:
                        if not self.lenient:
                            raise self.error("unbalanced '{' in method body", end)
                        method = self._method(comments, run, toks[end + 1:], opaque=True)
                        items.append(method)
                        i = self.n
                        continue
                    method = self._method(comments, run, toks[end + 1:close], opaque=False, close=toks[close])
                    items.append(method)
                    i = close + 1
                    continue
                close = match_bracket(toks, end)
                if close < 0:
                    if not self.lenient:
                        raise self.error("unbalanced '{'", end)
                    close = self.n - 1
                pending.extend(toks[i:close + 1])
                i = close + 1
                continue
            pending.extend(run)
            i = end + 1
        if class_depth and not self.lenient:
            raise self.error("unclosed class body", self.n - 1)
        flush()
        return items

    @staticmethod
    def _split_leading_comments(pending: list[Token]) -> list[Token]:
        """Detach trailing comments from ``pending`` (they precede a method)."""
        k = len(pending)
        while k > 0 and pending[k - 1].kind is TokenKind.COMMENT:
            k -= 1
        comments = pending[k:]
        del pending[k:]
        return comments

    def _run_end(self, i: int) -> int:
        """Index of the first top-level ';' or '{' at or after ``i``."""
        depth = 0
        toks = self.toks
        while i < self.n:
            t = toks[i]
            if t.kind is TokenKind.PUNCTUATION:
                if t.text in "([":
                    depth += 1
                elif t.text in ")]":
                    depth = max(0, depth - 1)
                elif depth == 0 and t.text in ";{":
                    return i
                elif depth == 0 and t.text == "}":
                    return i - 1
            i += 1
        return self.n

    def _brace_run_kind(self, run: Sequence[Token]) -> str:
        depth = 0
        for t in run[:-1]:
            if t.is_("("):
                depth += 1
            elif t.is_(")"):
                depth -= 1
            elif depth == 0 and t.text in ("class", "interface") and t.kind is TokenKind.KEYWORD:
                return "class"
            elif depth == 0 and t.text in ("enum", "new", "=") and t.kind is not TokenKind.STRING:
                return "other"
        if self._method_name_index(run) is not None:
            return "method"
        return "other"

    @staticmethod
    def _method_name_index(run: Sequence[Token]) -> int | None:
        # run ends with '{'; find the param list: the last top-level ')' that
        # is followed only by dims / a throws clause.
        body = list(run[:-1])
        close = None
        depth = 0
        for j, t in enumerate(body):
            if t.is_("("):
                depth += 1
            elif t.is_(")"):
                depth -= 1
                if depth == 0:
                    rest = body[j + 1:]
                    if not rest or rest[0].text == "throws" or all(x.text in "[]" for x in rest):
                        close = j
                        break
        if close is None:
            return None
        open_ = None
        depth = 0
        for j in range(close, -1, -1):
            if body[j].is_(")"):
                depth += 1
            elif body[j].is_("("):
                depth -= 1
                if depth == 0:
                    open_ = j
                    break
        if open_ is None or open_ == 0:
            return None
        name = body[open_ - 1]
        if name.kind is not TokenKind.IDENTIFIER:
            return None
        return open_ - 1

    def _method(self, comments: list[Token], run: Sequence[Token], body_toks: Sequence[Token], *,
                opaque: bool, close: Token | None = None) -> MethodUnit:
        name_idx = self._method_name_index(run)
        assert name_idx is not None
        header = list(run[:-1])
        rparen = match_bracket(header, name_idx + 1)
        params = self._java_params(header[name_idx + 2:rparen])
        modifiers = tuple(comments) + tuple(header[:name_idx])
        trailer = tuple(header[rparen + 1:])
        if opaque:
            body = Block((OpaqueStmt(tokens=tuple(body_toks)),)) if body_toks else Block()
            span = (_extent(list(comments) + list(run) + list(body_toks))[0], body_toks[-1].span[1] if body_toks else run[-1].span[1])
        else:
            body = _JavaBody(body_toks, self.lenient).parse_block_contents()
            span = (_extent(list(comments) + list(run))[0], close.span[1])
        return MethodUnit(header[name_idx].text, params, body, modifiers, trailer, Language.JAVA, span)

    @staticmethod
    def _java_params(toks: Sequence[Token]) -> tuple[Param, ...]:
        if not toks:
            return ()
        parts: list[list[Token]] = [[]]
        depth = 0
        for t in toks:
            if t.text in ("<", "(", "["):
                depth += 1
            elif t.text in (">", ")", "]"):
                depth -= 1
            elif t.text in (">>", ">>>"):
                depth -= len(t.text)
            if t.text == "," and depth == 0:
                parts.append([])
                continue
            parts[-1].append(t)
        params = []
        for part in parts:
            idents = [k for k, t in enumerate(part) if t.kind is TokenKind.IDENTIFIER]
            if not idents:
                params.append(Param("", " ".join(t.text for t in part) or None, tuple(part)))
                continue
            k = idents[-1]
            type_toks = [t.text for j, t in enumerate(part) if j != k]
            params.append(Param(part[k].text, " ".join(type_toks) or None, tuple(part)))
        return tuple(params)


class _JavaBody:
    """Statement parser over the tokens between a method's braces."""

    def __init__(self, tokens: Sequence[Token], lenient: bool):
        self.toks = list(tokens)
        self.n = len(self.toks)
        self.lenient = lenient
        self.i = 0

    def parse_block_contents(self, stop_at_brace: bool = False) -> Block:
        stmts: list[Stmt] = []
        while True:
            comments = self._comments()
            if self.i >= self.n or (stop_at_brace and self.toks[self.i].is_("}")):
                if comments:
                    stmts.append(OpaqueStmt(tokens=(), comments=comments))
                return Block(tuple(stmts))
            stmt = self.statement()
            if comments:
                stmt = _with_comments(stmt, comments + stmt.comments)
            stmts.append(stmt)

    def _comments(self) -> Tokens:
        start = self.i
        while self.i < self.n and self.toks[self.i].kind is TokenKind.COMMENT:
            self.i += 1
        return tuple(self.toks[start:self.i])

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.toks[j] if j < self.n else None

    def _paren_group(self) -> tuple[Tokens, tuple[int, int]] | None:
        """Consume ``( ... )`` at the cursor; returns inner tokens and span."""
        tok = self.peek()
        if tok is None or not tok.is_("("):
            return None
        close = match_bracket(self.toks, self.i)
        if close < 0:
            return None
        inner = tuple(self.toks[self.i + 1:close])
        span = (tok.span[0], self.toks[close].span[1])
        self.i = close + 1
        return inner, span

    def _body(self) -> Block:
        self.comments_before_body = self._comments()
        if self.i >= self.n:
            return Block()
        stmt = self.statement()
        if isinstance(stmt, CompoundStmt) and stmt.is_bare_block:
            block = stmt.parts[0][1]
            if self.comments_before_body or stmt.comments:
                block = _prepend_comments(block, self.comments_before_body + stmt.comments)
            return block
        if isinstance(stmt, OpaqueStmt) and [t.text for t in stmt.tokens] == [";"] and not stmt.comments:
            return Block()
        if self.comments_before_body:
            stmt = _with_comments(stmt, self.comments_before_body + stmt.comments)
        return Block((stmt,))

    def _braced_block(self) -> Block | None:
        tok = self.peek()
        if tok is None or not tok.is_("{"):
            return None
        close = match_bracket(self.toks, self.i)
        if close < 0:
            return None
        inner = _JavaBody(self.toks[self.i + 1:close], self.lenient).parse_block_contents()
        self.i = close + 1
        return inner

    def _until_semicolon(self) -> tuple[Tokens, bool]:
        """Tokens up to a top-level ';' (consumed); flag says if found."""
        depth = 0
        start = self.i
        while self.i < self.n:
            t = self.toks[self.i]
            if t.kind is TokenKind.PUNCTUATION:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    if depth == 0:
                        break
                    depth -= 1
                elif t.text == ";" and depth == 0:
                    self.i += 1
                    return tuple(self.toks[start:self.i - 1]), True
            self.i += 1
        return tuple(self.toks[start:self.i]), False

    def statement(self) -> Stmt:
        tok = self.toks[self.i]
        text = tok.text if tok.kind is not TokenKind.STRING else None
        start = self.i
        if text == "{":
            block = self._braced_block()
            if block is not None:
                return CompoundStmt(parts=(((), block),))
        elif text == ";":
            self.i += 1
            return OpaqueStmt(tokens=(tok,))
        elif text == "if":
            stmt = self._if()
            if stmt is not None:
                return stmt
        elif text == "while":
            self.i += 1
            group = self._paren_group()
            if group is not None and group[0]:
                cond = self._cond(group[0])
                if cond is not None:
                    body = self._body()
                    return WhileStmt(cond=cond, body=body, cond_span=group[1])
        elif text == "for":
            stmt = self._for()
            if stmt is not None:
                return stmt
        elif text == "do":
            self.i += 1
            body = self._body()
            if self.peek() is not None and self.peek().is_("while"):
                tail, _ = self._until_semicolon()
                return CompoundStmt(parts=(((tok,), body),), tail=tail + (Token(TokenKind.PUNCTUATION, ";"),))
        elif text in ("try", "synchronized", "switch"):
            stmt = self._compound(text)
            if stmt is not None:
                return stmt
        elif text in ("return", "break", "continue"):
            self.i += 1
            rest, _ = self._until_semicolon()
            if text == "return":
                return ReturnStmt(value=rest)
            return BreakStmt(label=rest) if text == "break" else ContinueStmt(label=rest)
        elif text in ("case", "default"):
            stmt = self._case_label()
            if stmt is not None:
                return stmt
        elif text in ("class", "interface", "enum") or (
            tok.kind is TokenKind.IDENTIFIER and self.peek(1) is not None and self.peek(1).is_(":")
        ):
            if tok.kind is TokenKind.IDENTIFIER:
                self.i += 2
                return OpaqueStmt(tokens=tuple(self.toks[start:self.i]))
            return self._opaque_through_brace()
        self.i = start
        toks, found = self._until_semicolon()
        if not found:
            if self.i == start:
                # stray closer: swallow one token to guarantee progress
                self.i += 1
                return OpaqueStmt(tokens=(tok,))
            return OpaqueStmt(tokens=toks)
        if not toks:
            return OpaqueStmt(tokens=(self.toks[self.i - 1],))
        if looks_like_decl(toks):
            return DeclStmt(tokens=toks)
        return ExprStmt(tokens=toks)

    def _cond(self, toks: Tokens):
        try:
            return parse_condition(toks, Language.JAVA)
        except SyntaxProblem:
            return None

    def _if(self) -> IfStmt | None:
        self.i += 1
        group = self._paren_group()
        if group is None or not group[0]:
            return None
        cond = self._cond(group[0])
        if cond is None:
            return None
        then = self._body()
        save = self.i
        between = self._comments()
        orelse: IfStmt | Block | None = None
        if self.peek() is not None and self.peek().is_("else"):
            self.i += 1
            nxt_comments = self._comments()
            if self.peek() is not None and self.peek().is_("if"):
                inner = self._if()
                if inner is None:
                    self.i = save
                    return IfStmt(cond=cond, then=then, cond_span=group[1])
                if between or nxt_comments:
                    inner = _with_comments(inner, between + nxt_comments + inner.comments)
                orelse = inner
            else:
                self.i -= len(nxt_comments)
                orelse = self._body()
                if between:
                    orelse = _prepend_comments(orelse, between)
        else:
            self.i = save
        return IfStmt(cond=cond, then=then, orelse=orelse, cond_span=group[1])

    def _for(self) -> Stmt | None:
        start = self.i
        self.i += 1
        group = self._paren_group()
        if group is None:
            self.i = start
            return None
        inner = group[0]
        parts = split_top_level(inner, {";"})
        if len(parts) != 3:
            head = tuple(self.toks[start:self.i])
            body = self._body()
            return CompoundStmt(parts=((head, body),))
        init_toks, cond_toks, upd_toks = (p for _, p in parts)
        init: list[DeclStmt | ExprStmt] = []
        if init_toks:
            if looks_like_decl(init_toks):
                init.append(DeclStmt(tokens=tuple(init_toks)))
            else:
                init.extend(ExprStmt(tokens=tuple(p)) for _, p in split_top_level(init_toks, {","}))
        cond = self._cond(tuple(cond_toks)) if cond_toks else None
        if cond_toks and cond is None:
            self.i = start
            return None
        update = tuple(ExprStmt(tokens=tuple(p)) for _, p in split_top_level(upd_toks, {","})) if upd_toks else ()
        body = self._body()
        return ForStmt(header=ForHeader(tuple(init), cond, update), body=body)

    def _compound(self, keyword: str) -> Stmt | None:
        start = self.i
        self.i += 1
        parts: list[tuple[Tokens, Block]] = []
        head_start = start
        if self.peek() is not None and self.peek().is_("("):
            if self._paren_group() is None:
                self.i = start
                return None
        block = self._braced_block()
        if block is None:
            self.i = start
            return None
        parts.append((tuple(self.toks[head_start:self.i - 0])[: self._head_len(head_start)], block))
        if keyword == "try":
            while self.peek() is not None and self.peek().text in ("catch", "finally"):
                head_start = self.i
                self.i += 1
                if self.peek() is not None and self.peek().is_("("):
                    if self._paren_group() is None:
                        break
                head = tuple(self.toks[head_start:self.i])
                block = self._braced_block()
                if block is None:
                    self.i = head_start
                    break
                parts.append((head, block))
        return CompoundStmt(parts=tuple(parts))

    def _head_len(self, head_start: int) -> int:
        # header runs from head_start up to (not including) the block's '{'
        j = head_start
        depth = 0
        while j < self.n:
            t = self.toks[j]
            if t.is_("(") or t.is_("["):
                depth += 1
            elif t.is_(")") or t.is_("]"):
                depth -= 1
            elif t.is_("{") and depth == 0:
                return j - head_start
            j += 1
        return j - head_start

    def _case_label(self) -> Stmt | None:
        start = self.i
        depth = 0
        while self.i < self.n:
            t = self.toks[self.i]
            if t.text in ("(", "[", "{"):
                depth += 1
            elif t.text in (")", "]", "}"):
                if depth == 0:
                    break
                depth -= 1
            elif depth == 0 and t.kind is not TokenKind.STRING and t.text in (":", "->"):
                self.i += 1
                return OpaqueStmt(tokens=tuple(self.toks[start:self.i]))
            elif depth == 0 and t.text == ";":
                break
            self.i += 1
        self.i = start
        return None

    def _opaque_through_brace(self) -> Stmt:
        start = self.i
        while self.i < self.n and not self.toks[self.i].is_("{"):
            self.i += 1
        if self.i < self.n:
            close = match_bracket(self.toks, self.i)
            self.i = self.n if close < 0 else close + 1
        return OpaqueStmt(tokens=tuple(self.toks[start:self.i]))


def _with_comments(stmt: Stmt, comments: Tokens) -> Stmt:
    from dataclasses import replace

    return replace(stmt, comments=tuple(comments))


def _prepend_comments(block: Block, comments: Tokens) -> Block:
    if not comments:
        return block
    if not block.stmts:
        return Block((OpaqueStmt(tokens=(), comments=tuple(comments)),))
    first = block.stmts[0]
    return Block((_with_comments(first, tuple(comments) + first.comments),) + block.stmts[1:])


# ---------------------------------------------------------------- Python


_PY_CONTINUATIONS = {
    "if": ("elif", "else"),
    "for": ("else",),
    "while": ("else",),
    "try": ("except", "else", "finally"),
}


class _PythonParser:
    def __init__(self, tokens: Sequence[Token], lenient: bool):
        self.toks = list(tokens)
        self.n = len(self.toks)
        self.lenient = lenient
        self.i = 0
        self.skip_dedents = 0

    def error(self, message: str) -> ParseError:
        tok = self.toks[min(self.i, self.n - 1)] if self.n else None
        return ParseError(message, tok.span if tok else (0, 0))

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.toks[j] if j < self.n else None

    def _marker(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind is TokenKind.INDENT and tok.text == text

    # ---- items

    def parse_items(self) -> list[Item]:
        items: list[Item] = []
        pending: list[Token] = []

        def flush():
            if pending:
                items.append(OtherItem(tuple(pending), _extent(pending)))
                pending.clear()

        while self.i < self.n:
            start = self.i
            self._skip_layout(top=True)
            if self.i >= self.n:
                pending.extend(self.toks[start:self.i])
                break
            comments_start = self.i
            while self.peek() is not None and self.peek().kind is TokenKind.COMMENT:
                self.i += 1
            tok = self.peek()
            if tok is not None and tok.is_("def") and (not self.lenient or self._well_formed_def()):
                comments = tuple(self.toks[comments_start:self.i])
                pending.extend(self.toks[start:comments_start])
                flush()
                items.append(self._method(comments))
                continue
            self.i = start
            self._skip_layout(top=True)
            self._logical_statement_tokens()
            pending.extend(self.toks[start:self.i])
        flush()
        return items

    def _skip_layout(self, top: bool = False) -> None:
        while self.i < self.n:
            tok = self.toks[self.i]
            if tok.kind is not TokenKind.INDENT:
                return
            if tok.text == NEWLINE:
                self.i += 1
            elif tok.text == BAD_DEDENT:
                if not self.lenient:
                    raise self.error("inconsistent dedent")
                self.i += 1
            elif top and tok.text in (INDENT, DEDENT):
                if not self.lenient:
                    raise self.error("unexpected indent" if tok.text == INDENT else "unexpected dedent")
                self.i += 1
            else:
                return

    def _logical_statement_tokens(self) -> None:
        """Advance past one top-level statement (with any suite)."""
        tok = self.peek()
        compound = tok is not None and tok.kind is TokenKind.KEYWORD and tok.text in (
            "if", "for", "while", "try", "with", "class", "def", "async")
        compound = compound or (tok is not None and tok.is_("@"))
        self._to_newline()
        if compound and self._marker(INDENT):
            self._skip_suite()
            while self.peek() is not None and self.peek().text in ("elif", "else", "except", "finally"):
                self._to_newline()
                if self._marker(INDENT):
                    self._skip_suite()

    def _to_newline(self) -> None:
        while self.i < self.n and not self._marker(NEWLINE):
            if self.toks[self.i].kind is TokenKind.INDENT and self.toks[self.i].text != BAD_DEDENT:
                return
            self.i += 1
        if self.i < self.n:
            self.i += 1

    def _skip_suite(self) -> None:
        depth = 0
        while self.i < self.n:
            tok = self.toks[self.i]
            self.i += 1
            if tok.kind is TokenKind.INDENT:
                if tok.text == INDENT:
                    depth += 1
                elif tok.text == DEDENT:
                    depth -= 1
                    if depth == 0:
                        return

    # ---- methods

    def _well_formed_def(self) -> bool:
        """``def name ( ... ) ... :`` on one logical line; lenient mode keeps anything else opaque."""
        name, paren = self.peek(1), self.peek(2)
        if name is None or name.kind is not TokenKind.IDENTIFIER or paren is None or not paren.is_("("):
            return False
        close = match_bracket(self.toks, self.i + 2)
        return close >= 0 and self._find_colon(close + 1) is not None

    def _method(self, comments: Tokens) -> MethodUnit:
        def_tok = self.toks[self.i]
        header_start = self.i
        self.i += 1
        name_tok = self.peek()
        if name_tok is None or name_tok.kind is not TokenKind.IDENTIFIER:
            if not self.lenient or name_tok is None or name_tok.kind is TokenKind.INDENT:
                raise self.error("expected function name")
        self.i += 1
        params: tuple[Param, ...] = ()
        if self.peek() is not None and self.peek().is_("("):
            close = match_bracket(self.toks, self.i)
            if close < 0:
                if not self.lenient:
                    raise self.error("unclosed parameter list")
                close = self.i
                while close < self.n and not (self.toks[close].kind is TokenKind.INDENT):
                    close += 1
                params = self._py_params(self.toks[self.i + 1:close])
                self.i = close
            else:
                params = self._py_params(self.toks[self.i + 1:close])
                self.i = close + 1
        elif not self.lenient:
            raise self.error("expected '('")
        trailer_start = self.i
        colon = self._find_colon(self.i)
        if colon is None:
            if not self.lenient:
                raise self.error("expected ':'")
            trailer = ()
            while self.i < self.n and self.toks[self.i].kind is not TokenKind.INDENT:
                self.i += 1
            body = Block()
            if self._marker(NEWLINE):
                self.i += 1
            if self._marker(INDENT):
                body = self._suite_after_newline()
        else:
            trailer = tuple(self.toks[trailer_start:colon])
            self.i = colon + 1
            body = self._suite()
        modifiers = tuple(comments) + (def_tok,)
        span_toks = list(comments) + self.toks[header_start:self.i]
        return MethodUnit(name_tok.text, params, body, modifiers, trailer, Language.PYTHON, _extent(span_toks))

    @staticmethod
    def _py_params(toks: Sequence[Token]) -> tuple[Param, ...]:
        if not toks:
            return ()
        params = []
        for _, part in split_top_level(toks, {","}):
            if not part:
                continue
            idents = [t for t in part if t.kind is TokenKind.IDENTIFIER]
            name = idents[0].text if idents else ""
            ann = None
            for k, t in enumerate(part):
                if t.text == ":" and t.kind is not TokenKind.STRING:
                    cut = len(part)
                    for j in range(k + 1, len(part)):
                        if part[j].text == "=":
                            cut = j
                            break
                    ann = " ".join(x.text for x in part[k + 1:cut]) or None
                    break
            params.append(Param(name, ann, tuple(part)))
        return tuple(params)

    def _find_colon(self, start: int) -> int | None:
        """Index of the ':' ending a compound-statement header."""
        depth = 0
        lambdas = 0
        j = start
        while j < self.n:
            t = self.toks[j]
            if t.kind is TokenKind.INDENT:
                return None
            if t.kind is TokenKind.PUNCTUATION:
                if t.text in "([{":
                    depth += 1
                elif t.text in ")]}":
                    depth -= 1
                elif t.text == ":" and depth == 0:
                    if lambdas:
                        lambdas -= 1
                    else:
                        return j
            elif t.is_("lambda") and depth == 0:
                lambdas += 1
            j += 1
        return None

    # ---- statements

    def _suite(self) -> Block:
        """Suite following a header ':' (inline or indented)."""
        comments = []
        while self.peek() is not None and self.peek().kind is TokenKind.COMMENT:
            comments.append(self.toks[self.i])
            self.i += 1
        if self._marker(NEWLINE):
            self.i += 1
            if self._marker(INDENT):
                block = self._suite_after_newline()
            else:
                if not self.lenient:
                    raise self.error("expected an indented block")
                block = Block()
            return _prepend_comments(block, tuple(comments))
        if self.i >= self.n or self.toks[self.i].kind is TokenKind.INDENT:
            if not self.lenient:
                raise self.error("expected an indented block")
            return _prepend_comments(Block(), tuple(comments))
        stmt = self._simple_statement()
        return _prepend_comments(Block((stmt,)), tuple(comments))

    def _suite_after_newline(self) -> Block:
        self.i += 1  # INDENT
        stmts: list[Stmt] = []
        while True:
            self._skip_blank()
            if self.i >= self.n:
                return Block(tuple(stmts))
            tok = self.toks[self.i]
            if tok.kind is TokenKind.INDENT and tok.text == DEDENT:
                if self.skip_dedents:
                    self.skip_dedents -= 1
                    self.i += 1
                    continue
                self.i += 1
                return Block(tuple(stmts))
            if tok.kind is TokenKind.INDENT and tok.text == INDENT:
                if not self.lenient:
                    raise self.error("unexpected indent")
                self.skip_dedents += 1
                self.i += 1
                continue
            stmts.append(self._statement())

    def _skip_blank(self) -> None:
        while self.i < self.n:
            tok = self.toks[self.i]
            if tok.kind is TokenKind.INDENT and tok.text == NEWLINE:
                self.i += 1
            elif tok.kind is TokenKind.INDENT and tok.text == BAD_DEDENT:
                if not self.lenient:
                    raise self.error("inconsistent dedent")
                self.i += 1
            else:
                return

    def _leading_comments(self) -> Tokens:
        start = self.i
        while self.peek() is not None and self.peek().kind is TokenKind.COMMENT:
            self.i += 1
            if self._marker(NEWLINE):
                self.i += 1
        return tuple(t for t in self.toks[start:self.i] if t.kind is TokenKind.COMMENT)

    def _statement(self) -> Stmt:
        comments = self._leading_comments()
        tok = self.peek()
        if tok is None or tok.kind is TokenKind.INDENT:
            return OpaqueStmt(tokens=(), comments=comments)
        stmt = self._statement_body(tok)
        if comments:
            stmt = _with_comments(stmt, comments + stmt.comments)
        return stmt

    def _statement_body(self, tok: Token) -> Stmt:
        text = tok.text if tok.kind is TokenKind.KEYWORD else None
        if text in ("if", "while"):
            stmt = self._if_while(text)
            if stmt is not None:
                return stmt
        if text in ("for", "try", "with", "class", "def", "async", "while", "if") or (
            tok.kind is TokenKind.IDENTIFIER and tok.text == "match" and self._find_colon(self.i) is not None
            and self._is_compound_line()
        ):
            stmt = self._compound()
            if stmt is not None:
                return stmt
        if tok.is_("@"):
            toks = self._line()
            return OpaqueStmt(tokens=toks)
        return self._simple_statement()

    def _is_compound_line(self) -> bool:
        colon = self._find_colon(self.i)
        return colon is not None and self.peek(colon - self.i + 1) is not None and self._marker(NEWLINE, colon - self.i + 1)

    def _line(self) -> Tokens:
        start = self.i
        while self.i < self.n and not (self.toks[self.i].kind is TokenKind.INDENT):
            self.i += 1
        toks = tuple(self.toks[start:self.i])
        if self._marker(NEWLINE):
            self.i += 1
        return toks

    def _simple_statement(self) -> Stmt:
        toks = self._line()
        trailing: Tokens = ()
        if toks and toks[-1].kind is TokenKind.COMMENT:
            k = len(toks)
            while k > 0 and toks[k - 1].kind is TokenKind.COMMENT:
                k -= 1
            toks, trailing = toks[:k], toks[k:]
        if not toks:
            return OpaqueStmt(tokens=trailing)
        head = toks[0].text if toks[0].kind is TokenKind.KEYWORD else None
        if trailing:
            return OpaqueStmt(tokens=toks + trailing)
        if head == "return":
            return ReturnStmt(value=toks[1:])
        if head == "break" and len(toks) == 1:
            return BreakStmt()
        if head == "continue" and len(toks) == 1:
            return ContinueStmt()
        return ExprStmt(tokens=toks)

    def _if_while(self, keyword: str) -> Stmt | None:
        start = self.i
        colon = self._find_colon(self.i + 1)
        if colon is None or colon == self.i + 1:
            return None
        cond_toks = tuple(self.toks[self.i + 1:colon])
        try:
            cond = parse_condition(cond_toks, Language.PYTHON)
        except SyntaxProblem:
            return None
        span = (cond_toks[0].span[0], cond_toks[-1].span[1])
        self.i = colon + 1
        body = self._suite()
        if keyword == "while":
            if self._peek_keyword_after_comments() == "else":
                self.i = start
                return None
            return WhileStmt(cond=cond, body=body, cond_span=span)
        orelse: IfStmt | Block | None = None
        nxt = self._peek_keyword_after_comments()
        if nxt == "elif":
            comments = self._leading_comments()
            inner = self._if_while("if")
            if inner is None:
                self.i = start
                return None
            if comments:
                inner = _with_comments(inner, comments + inner.comments)
            orelse = inner
        elif nxt == "else":
            comments = self._leading_comments()
            colon = self._find_colon(self.i + 1)
            if colon != self.i + 1:
                self.i = start
                return None
            self.i = colon + 1
            orelse = _prepend_comments(self._suite(), comments)
        return IfStmt(cond=cond, then=body, orelse=orelse, cond_span=span)

    def _peek_keyword_after_comments(self) -> str | None:
        j = self.i
        while j < self.n:
            t = self.toks[j]
            if t.kind is TokenKind.COMMENT or (t.kind is TokenKind.INDENT and t.text == NEWLINE):
                j += 1
                continue
            return t.text if t.kind is TokenKind.KEYWORD else None
        return None

    def _compound(self) -> Stmt | None:
        start = self.i
        first = self.toks[self.i].text
        parts: list[tuple[Tokens, Block]] = []
        colon = self._find_colon(self.i)
        if colon is None:
            return None
        head = tuple(self.toks[self.i:colon + 1])
        self.i = colon + 1
        parts.append((head, self._suite()))
        allowed = _PY_CONTINUATIONS.get(first, ())
        while allowed and self._peek_keyword_after_comments() in allowed:
            save = self.i
            comments = self._leading_comments()
            colon = self._find_colon(self.i)
            if colon is None:
                self.i = save
                break
            head = tuple(self.toks[self.i:colon + 1])
            self.i = colon + 1
            parts.append((head, _prepend_comments(self._suite(), comments)))
        if not parts:
            self.i = start
            return None
        return CompoundStmt(parts=tuple(parts))


def strict_check(text: str, language: Language | str) -> SyntaxUnit:
    """Parse strictly, also requiring balanced brackets overall."""
    toks = tokenize(text, language)
    check_balanced([t for t in toks if t.kind is not TokenKind.INDENT])
    return parse_unit(toks, language, source=text)
