"""Condition decomposition into homogeneous top-level clause chains."""

from __future__ import annotations

from typing import Sequence

from .lexer import Language, ParseError, Token, TokenKind
from .nodes import CondChain, LogicOp, Tokens

_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {")": "(", "]": "[", "}": "{"}

_LOGIC = {
    Language.JAVA: {"&&": LogicOp.AND, "||": LogicOp.OR},
    Language.PYTHON: {"and": LogicOp.AND, "or": LogicOp.OR},
}
# Top-level tokens binding looser than && / ||; a chain containing one of
# them is not split.
_LOOSER = {
    Language.JAVA: {"?", "->", "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="},
    Language.PYTHON: {"if", "else", "lambda", ":=", "for"},
}


def _is_bracket(tok: Token) -> bool:
    return tok.kind is TokenKind.PUNCTUATION and (tok.text in _OPEN or tok.text in _CLOSE)


def match_bracket(tokens: Sequence[Token], start: int) -> int:
    """Index of the bracket closing ``tokens[start]``, or -1 if unbalanced."""
    stack = []
    for i in range(start, len(tokens)):
        tok = tokens[i]
        if not _is_bracket(tok):
            continue
        if tok.text in _OPEN:
            stack.append(tok.text)
        else:
            if not stack or stack[-1] != _CLOSE[tok.text]:
                return -1
            stack.pop()
            if not stack:
                return i
    return -1


def check_balanced(tokens: Sequence[Token]) -> None:
    stack: list[Token] = []
    for tok in tokens:
        if not _is_bracket(tok):
            continue
        if tok.text in _OPEN:
            stack.append(tok)
        elif not stack or stack[-1].text != _CLOSE[tok.text]:
            raise ParseError(f"unbalanced {tok.text!r}", tok.span)
        else:
            stack.pop()
    if stack:
        raise ParseError(f"unclosed {stack[-1].text!r}", stack[-1].span)


def strip_outer_parens(tokens: Tokens) -> Tokens:
    while len(tokens) >= 2 and tokens[0].is_("(") and match_bracket(tokens, 0) == len(tokens) - 1:
        tokens = tokens[1:-1]
    return tokens


def is_fully_parenthesized(tokens: Sequence[Token]) -> bool:
    return len(tokens) >= 2 and tokens[0].is_("(") and match_bracket(tokens, 0) == len(tokens) - 1


def split_top_level(tokens: Sequence[Token], separators: set[str]) -> list[tuple[Token | None, list[Token]]]:
    """Split on separator tokens at bracket depth 0.

    Returns ``(separator, part)`` pairs; the first separator is ``None``.
    """
    parts: list[tuple[Token | None, list[Token]]] = [(None, [])]
    depth = 0
    for tok in tokens:
        if _is_bracket(tok):
            depth += 1 if tok.text in _OPEN else -1
        if depth == 0 and tok.kind is not TokenKind.STRING and tok.text in separators:
            parts.append((tok, []))
            continue
        parts[-1][1].append(tok)
    return parts


def parse_condition(tokens: Sequence[Token], language: Language | str) -> CondChain:
    """Decompose ``tokens`` into a :class:`CondChain`.

    Only a homogeneous top-level chain is split: ``a && b && c`` gives three
    clauses, while ``a && b || c`` stays a single (mixed) clause. Redundant
    outer parentheses around the whole condition are dropped first.
    """
    language = Language.coerce(language)
    raw = tuple(t for t in tokens if t.kind is not TokenKind.INDENT)
    check_balanced(raw)
    body = strip_outer_parens(raw)
    if not body:
        raise ParseError("empty condition", raw[0].span if raw else (0, 0))
    ops = _LOGIC[language]
    looser = _LOOSER[language]
    depth = 0
    for tok in body:
        if _is_bracket(tok):
            depth += 1 if tok.text in _OPEN else -1
        elif depth == 0 and tok.kind is not TokenKind.STRING and tok.text in looser:
            return CondChain(LogicOp.SINGLE, (body,), raw=raw)
    parts = split_top_level(body, set(ops))
    if len(parts) == 1:
        return CondChain(LogicOp.SINGLE, (body,), raw=raw)
    seen = {ops[sep.text] for sep, _ in parts[1:]}
    if len(seen) > 1:
        return CondChain(LogicOp.SINGLE, (body,), mixed=True, raw=raw)
    clauses = tuple(tuple(part) for _, part in parts)
    if any(not c for c in clauses):
        # `a && && b` and friends: leave the condition whole.
        return CondChain(LogicOp.SINGLE, (body,), raw=raw)
    return CondChain(seen.pop(), clauses, raw=raw)


def op_token(op: LogicOp, language: Language | str) -> str:
    language = Language.coerce(language)
    if language is Language.JAVA:
        return "&&" if op is LogicOp.AND else "||"
    return "and" if op is LogicOp.AND else "or"


def chain_tokens(chain: CondChain, language: Language | str) -> Tokens:
    """Tokens of the chain as it should be rendered inside a condition."""
    if chain.raw is not None:
        return chain.raw
    if chain.count == 1:
        return chain.clauses[0]
    kind = TokenKind.OPERATOR if Language.coerce(language) is Language.JAVA else TokenKind.KEYWORD
    sep = Token(kind, op_token(chain.op, language))
    out: list[Token] = []
    for i, clause in enumerate(chain.clauses):
        if i:
            out.append(sep)
        out.extend(clause)
    return tuple(out)


def with_clauses(chain: CondChain, clauses: Sequence[Tokens]) -> CondChain:
    """A copy of ``chain`` keeping only ``clauses`` (raw tokens dropped)."""
    clauses = tuple(clauses)
    op = LogicOp.SINGLE if len(clauses) == 1 else chain.op
    return CondChain(op, clauses, mixed=chain.mixed and len(clauses) == 1)
