"""Tokenizers for the space-tokenized Java and Python method corpus.

Both lexers are hand-written rather than built on :mod:`tokenize` because
translator output is frequently garbage (unclosed brackets, bogus
indentation) and must still be lexed in lenient mode.
"""

from __future__ import annotations

import keyword
import re
from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "Language",
    "TokenKind",
    "Token",
    "SyntaxProblem",
    "LexError",
    "ParseError",
    "NEWLINE",
    "INDENT",
    "DEDENT",
    "BAD_DEDENT",
    "tokenize",
    "token_texts",
    "normalize",
]


class Language(str, Enum):
    JAVA = "java"
    PYTHON = "python"

    @classmethod
    def coerce(cls, value: "Language | str") -> "Language":
        if isinstance(value, Language):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown language {value!r}") from None


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    NUMBER = "numeric-literal"
    STRING = "string-literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    COMMENT = "comment"
    INDENT = "indent-marker"


# Texts of the Python layout markers.
NEWLINE = "<NEWLINE>"
INDENT = "<INDENT>"
DEDENT = "<DEDENT>"
BAD_DEDENT = "<BADDEDENT>"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    # Character offsets into the source; ignored by equality so that
    # re-rendered trees compare equal to their originals.
    span: tuple[int, int] = field(default=(0, 0), compare=False)

    def is_(self, text: str) -> bool:
        return self.text == text and self.kind is not TokenKind.STRING

    @property
    def is_marker(self) -> bool:
        return self.kind is TokenKind.INDENT

    def __repr__(self) -> str:
        return f"Token({self.kind.value}, {self.text!r})"


class SyntaxProblem(Exception):
    """Base for lexing/parsing failures; carries the offending span."""

    def __init__(self, message: str, span: tuple[int, int] = (0, 0)):
        super().__init__(f"{message} at {span[0]}..{span[1]}")
        self.message = message
        self.span = span


class LexError(SyntaxProblem):
    pass


class ParseError(SyntaxProblem):
    pass


JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null var""".split()
)

PYTHON_KEYWORDS = frozenset(keyword.kwlist)

_JAVA_OPERATORS = sorted(
    """>>>= <<= >>= >>> ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^=
    << >> + - * / % = < > ! ~ ? : & | ^ @""".split(),
    key=len,
    reverse=True,
)
_PY_OPERATORS = sorted(
    """**= //= >>= <<= ... -> := ** // == != <= >= += -= *= /= %= &= |= ^= @=
    << >> + - * / % = < > ~ & | ^ @ :""".split(),
    key=len,
    reverse=True,
)
_PUNCT = set("()[]{};,.")

_JAVA_NUMBER = re.compile(
    r"0[xX][0-9a-fA-F_]+[lL]?|0[bB][01_]+[lL]?"
    r"|(?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?"
)
_PY_NUMBER = re.compile(
    r"0[xX][0-9a-fA-F_]+|0[bB][01_]+|0[oO][0-7_]+"
    r"|(?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?[jJ]?"
)
_IDENT = re.compile(r"[^\W\d]\w*|\$[\w$]*")
_JAVA_IDENT = re.compile(r"[^\W\d$][\w$]*|\$[\w$]*")
_PY_STRING_START = re.compile(r"(?i:[rbuf]|rb|br|fr|rf)?('''|\"\"\"|'|\")")

_OPENERS = {"(": ")", "[": "]", "{": "}"}
_CLOSERS = {")", "]", "}"}


def tokenize(text: str, language: Language | str, *, lenient: bool = False) -> list[Token]:
    """Lex ``text`` into tokens.

    ``SPACETOKEN`` and other detokenizer artifacts are ordinary identifiers.
    In lenient mode an unterminated string literal runs to the end of its
    line instead of raising :class:`LexError`.
    """
    language = Language.coerce(language)
    if language is Language.JAVA:
        return _JavaLexer(text, lenient).run()
    return _PythonLexer(text, lenient).run()


def token_texts(tokens) -> list[str]:
    return [t.text for t in tokens]


def normalize(text: str, language: Language | str) -> str:
    """Single-space joined token texts, layout markers and comments dropped.

    Used to compare outputs "modulo token spacing".
    """
    toks = tokenize(text, language, lenient=True)
    return " ".join(t.text for t in toks if t.kind not in (TokenKind.INDENT, TokenKind.COMMENT))


class _Lexer:
    operators: list[str]

    def __init__(self, text: str, lenient: bool):
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.lenient = lenient
        self.tokens: list[Token] = []

    def emit(self, kind: TokenKind, start: int, end: int, text: str | None = None) -> None:
        self.tokens.append(Token(kind, self.text[start:end] if text is None else text, (start, end)))

    def _line_end(self, pos: int) -> int:
        end = self.text.find("\n", pos)
        return self.n if end < 0 else end

    def operator_at(self, pos: int) -> str | None:
        for op in self.operators:
            if self.text.startswith(op, pos):
                return op
        return None

    def unterminated(self, start: int, end: int) -> None:
        if not self.lenient:
            raise LexError("unterminated string literal", (start, end))
        self.emit(TokenKind.STRING, start, end)
        self.pos = end


class _JavaLexer(_Lexer):
    operators = _JAVA_OPERATORS

    def run(self) -> list[Token]:
        text, n = self.text, self.n
        while self.pos < n:
            ch = text[self.pos]
            start = self.pos
            if ch.isspace():
                self.pos += 1
            elif text.startswith("//", start):
                end = self._line_end(start)
                self.emit(TokenKind.COMMENT, start, end)
                self.pos = end
            elif text.startswith("/*", start):
                end = text.find("*/", start + 2)
                end = n if end < 0 else end + 2
                self.emit(TokenKind.COMMENT, start, end)
                self.pos = end
            elif text.startswith('"""', start):
                end = text.find('"""', start + 3)
                if end < 0:
                    self.unterminated(start, n)
                else:
                    self.emit(TokenKind.STRING, start, end + 3)
                    self.pos = end + 3
            elif ch in "\"'":
                self._quoted(start, ch)
            elif ch.isdigit() or (ch == "." and start + 1 < n and text[start + 1].isdigit()):
                m = _JAVA_NUMBER.match(text, start)
                self.emit(TokenKind.NUMBER, start, m.end())
                self.pos = m.end()
            elif (m := _JAVA_IDENT.match(text, start)) is not None:
                word = m.group()
                kind = TokenKind.KEYWORD if word in JAVA_KEYWORDS else TokenKind.IDENTIFIER
                self.emit(kind, start, m.end())
                self.pos = m.end()
            elif ch in _PUNCT and not text.startswith("...", start):
                self.emit(TokenKind.PUNCTUATION, start, start + 1)
                self.pos += 1
            else:
                op = self.operator_at(start) or ch
                self.emit(TokenKind.OPERATOR, start, start + len(op))
                self.pos += len(op)
        return self.tokens

    def _quoted(self, start: int, quote: str) -> None:
        text = self.text
        i = start + 1
        while i < self.n:
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if c == quote:
                self.emit(TokenKind.STRING, start, i + 1)
                self.pos = i + 1
                return
            if c == "\n":
                break
            i += 1
        self.unterminated(start, min(i, self.n))


class _PythonLexer(_Lexer):
    operators = _PY_OPERATORS
    tab_size = 4

    def run(self) -> list[Token]:
        text, n = self.text, self.n
        indents = [0]
        depth = 0
        at_line_start = True
        pending: list[Token] = []
        while self.pos < n:
            if at_line_start and depth == 0:
                col = 0
                while self.pos < n and text[self.pos] in " \t\f":
                    col = (col // self.tab_size + 1) * self.tab_size if text[self.pos] == "\t" else col + 1
                    self.pos += 1
                if self.pos >= n:
                    break
                ch = text[self.pos]
                if ch in "\r\n":
                    self.pos += 1
                    continue
                if ch == "#":
                    end = self._line_end(self.pos)
                    pending.append(Token(TokenKind.COMMENT, text[self.pos:end].rstrip("\r"), (self.pos, end)))
                    self.pos = end
                    continue
                if ch == "\\" and text[self.pos + 1:self.pos + 2] in ("\n", "\r"):
                    self.pos += 2
                    continue
                here = (self.pos, self.pos)
                if col > indents[-1]:
                    indents.append(col)
                    self.tokens.append(Token(TokenKind.INDENT, INDENT, here))
                elif col < indents[-1]:
                    while col < indents[-1]:
                        indents.pop()
                        self.tokens.append(Token(TokenKind.INDENT, DEDENT, here))
                    if col != indents[-1]:
                        self.tokens.append(Token(TokenKind.INDENT, BAD_DEDENT, here))
                self.tokens.extend(pending)
                pending.clear()
                at_line_start = False

            start = self.pos
            ch = text[start]
            if ch in " \t\f":
                self.pos += 1
            elif ch == "\\" and text[start + 1:start + 2] in ("\n", "\r"):
                self.pos += 2
                if text.startswith("\r\n", start + 1):
                    self.pos += 1
            elif ch in "\r\n":
                self.pos += 1
                if depth == 0:
                    self._newline(start)
                    at_line_start = True
            elif ch == "#":
                end = self._line_end(start)
                self.emit(TokenKind.COMMENT, start, end, text[start:end].rstrip("\r"))
                self.pos = end
            elif (m := _PY_STRING_START.match(text, start)) is not None:
                self._string(start, m)
            elif ch.isdigit() or (ch == "." and start + 1 < n and text[start + 1].isdigit()):
                m = _PY_NUMBER.match(text, start)
                self.emit(TokenKind.NUMBER, start, m.end())
                self.pos = m.end()
            elif (m := _IDENT.match(text, start)) is not None:
                word = m.group()
                kind = TokenKind.KEYWORD if word in PYTHON_KEYWORDS else TokenKind.IDENTIFIER
                self.emit(kind, start, m.end())
                self.pos = m.end()
            elif ch in _PUNCT and not text.startswith("...", start):
                if ch in _OPENERS:
                    depth += 1
                elif ch in _CLOSERS:
                    depth = max(0, depth - 1)
                self.emit(TokenKind.PUNCTUATION, start, start + 1)
                self.pos += 1
            else:
                op = self.operator_at(start) or ch
                kind = TokenKind.PUNCTUATION if op == ":" else TokenKind.OPERATOR
                self.emit(kind, start, start + len(op))
                self.pos += len(op)
        self._newline(self.n)
        while len(indents) > 1:
            indents.pop()
            self.tokens.append(Token(TokenKind.INDENT, DEDENT, (self.n, self.n)))
        if pending:
            self.tokens.extend(pending)
            self.tokens.append(Token(TokenKind.INDENT, NEWLINE, (self.n, self.n)))
        return self.tokens

    def _newline(self, pos: int) -> None:
        if self.tokens and not (self.tokens[-1].is_marker and self.tokens[-1].text != BAD_DEDENT):
            self.tokens.append(Token(TokenKind.INDENT, NEWLINE, (pos, pos + 1)))

    def _string(self, start: int, m: re.Match) -> None:
        quote = m.group(1)
        text = self.text
        raw = "r" in m.group(0)[: m.start(1) - start].lower()
        i = m.end()
        if len(quote) == 3:
            end = text.find(quote, i)
            while end >= 0 and not raw and _escaped(text, end):
                end = text.find(quote, end + 1)
            if end < 0:
                self.unterminated(start, self.n)
                return
            self.emit(TokenKind.STRING, start, end + 3)
            self.pos = end + 3
            return
        while i < self.n:
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if c == quote:
                self.emit(TokenKind.STRING, start, i + 1)
                self.pos = i + 1
                return
            if c in "\r\n":
                break
            i += 1
        self.unterminated(start, min(i, self.n))


def _escaped(text: str, pos: int) -> bool:
    backslashes = 0
    pos -= 1
    while pos >= 0 and text[pos] == "\\":
        backslashes += 1
        pos -= 1
    return backslashes % 2 == 1
