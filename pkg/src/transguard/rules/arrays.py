"""R3a: rewrite 1-D Java array parameters as ``List`` of the wrapper type."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..syntax.conditions import match_bracket, split_top_level
from ..syntax.lexer import Language, Token, TokenKind
from ..syntax.nodes import MethodUnit, Param, Tokens
from .records import Unsupported
from .tree import EXPR_STMT, FOR_UPDATE, HEAD, ident, map_runs, op, punct

WRAPPERS = {
    "int": "Integer",
    "double": "Double",
    "long": "Long",
    "char": "Character",
    "boolean": "Boolean",
    "float": "Float",
    "short": "Short",
    "byte": "Byte",
}

_COMPOUND = {f"{o}=": o for o in "+ - * / % & | ^ << >> >>>".split()}


@dataclass(frozen=True)
class ArrayParam:
    index: int
    name: str
    element: Tokens  # element type tokens as declared
    dims: int

    @property
    def wrapper(self) -> Tokens:
        if len(self.element) == 1 and self.element[0].text in WRAPPERS:
            return (ident(WRAPPERS[self.element[0].text]),)
        return self.element


def array_params(method: MethodUnit) -> list[ArrayParam]:
    found = []
    for k, p in enumerate(method.params):
        toks = [t for t in p.tokens if t.text != "final"]
        if any(t.text == "..." for t in toks):
            continue
        dims = sum(1 for t in toks if t.is_("["))
        if not dims:
            continue
        element = tuple(t for t in toks if t.text not in ("[", "]") and not (t.text == p.name and t.kind is TokenKind.IDENTIFIER))
        found.append(ArrayParam(k, p.name, element, dims))
    return found


def _list_param(param: Param, ap: ArrayParam) -> Param:
    mods = tuple(t for t in param.tokens if t.text == "final")
    toks = mods + (ident("List"), op("<")) + ap.wrapper + (op(">"), ident(param.name))
    return Param(param.name, " ".join(t.text for t in toks[len(mods):-1]), toks)


def _paren(tokens: Tokens) -> Tokens:
    if len(tokens) == 1:
        return tuple(tokens)
    return (punct("("),) + tuple(tokens) + (punct(")"),)


def _get(name: str, index: Tokens) -> Tokens:
    return (ident(name), punct("."), ident("get"), punct("(")) + index + (punct(")"),)


def _set(name: str, index: Tokens, value: Tokens) -> Tokens:
    return (ident(name), punct("."), ident("set"), punct("(")) + index + (punct(","),) + value + (punct(")"),)


class _Rewriter:
    def __init__(self, names: set[str], method_name: str, wrappers: dict[str, Tokens]):
        self.names = names
        self.method_name = method_name
        self.wrappers = wrappers

    def is_param(self, run: Tokens, i: int) -> bool:
        t = run[i]
        return t.kind is TokenKind.IDENTIFIER and t.text in self.names and not (i and run[i - 1].is_("."))

    def __call__(self, run: Tokens, role: str) -> Tokens:
        if role == HEAD:
            return self.head(run)
        return self.expr(run, statement=role in (EXPR_STMT, FOR_UPDATE))

    def head(self, run: Tokens) -> Tokens:
        # enhanced for: `for ( [final] T x : p )` widens T
        texts = [t.text for t in run]
        if len(run) >= 7 and texts[:2] == ["for", "("] and texts[-1] == ")" and texts[-3] == ":":
            if self.is_param(run, len(run) - 2):
                name = texts[-2]
                decl = list(run[2:-3])
                k = 1 if decl and decl[0].text == "final" else 0
                if len(decl) == k + 2 and decl[k].text in WRAPPERS:
                    decl[k] = self.wrappers[name][0] if len(self.wrappers[name]) == 1 else decl[k]
                return tuple(run[:2]) + tuple(decl) + tuple(run[-3:])
        return self.expr(run, statement=False)

    def expr(self, run: Tokens, *, statement: bool) -> Tokens:
        run = tuple(run)
        n = len(run)
        out: list[Token] = []
        i = 0
        while i < n:
            t = run[i]
            # prefix ++ / -- on an element
            if t.text in ("++", "--") and t.kind is TokenKind.OPERATOR and i + 2 < n and self.is_param(run, i + 1) and run[i + 2].is_("["):
                close = match_bracket(run, i + 2)
                if not (statement and i == 0 and close == n - 1):
                    raise Unsupported("element increment inside an expression")
                name = run[i + 1].text
                index = self.expr(run[i + 3:close], statement=False)
                delta = (op(t.text[0]), Token(TokenKind.NUMBER, "1"))
                return _set(name, index, _get(name, index) + delta)
            if self.is_param(run, i):
                name = t.text
                nxt = run[i + 1] if i + 1 < n else None
                if nxt is not None and nxt.is_("["):
                    close = match_bracket(run, i + 1)
                    if close < 0:
                        raise Unsupported("unbalanced index expression")
                    index = self.expr(run[i + 2:close], statement=False)
                    after = run[close + 1] if close + 1 < n else None
                    if after is not None and after.kind is TokenKind.OPERATOR:
                        if after.text == "=" or after.text in _COMPOUND:
                            if not (statement and i == 0):
                                raise Unsupported("element assignment inside an expression")
                            value = self.expr(run[close + 2:], statement=False)
                            if after.text != "=":
                                value = _get(name, index) + (op(_COMPOUND[after.text]),) + _paren(value)
                            return _set(name, index, value)
                        if after.text in ("++", "--"):
                            if not (statement and i == 0 and close + 2 == n):
                                raise Unsupported("element increment inside an expression")
                            delta = (op(after.text[0]), Token(TokenKind.NUMBER, "1"))
                            return _set(name, index, _get(name, index) + delta)
                    out.extend(_get(name, index))
                    i = close + 1
                    continue
                if (nxt is not None and nxt.is_(".") and i + 2 < n and run[i + 2].text == "length"
                        and not (i + 3 < n and run[i + 3].is_("("))):
                    out.extend((ident(name), punct("."), ident("size"), punct("("), punct(")")))
                    i += 3
                    continue
                if nxt is not None and nxt.kind is TokenKind.OPERATOR and (nxt.text == "=" or nxt.text in _COMPOUND):
                    raise Unsupported(f"parameter {name!r} is reassigned")
                if not self._recursive_argument(run, i):
                    raise Unsupported(f"parameter {name!r} used as a whole array")
                out.append(t)
                i += 1
                continue
            if t.text == "Arrays" and i + 4 < n and run[i + 1].is_(".") and run[i + 3].is_("(") and self.is_param(run, i + 4):
                close = match_bracket(run, i + 3)
                args = [p for _, p in split_top_level(run[i + 4:close], {","})]
                method = run[i + 2].text
                if (method == "sort" and len(args) == 1) or (method == "fill" and len(args) == 2):
                    rest = tuple(self.expr(tuple(a), statement=False) for a in args[1:])
                    new_args: list[Token] = [run[i + 4]]
                    for a in rest:
                        new_args.append(punct(","))
                        new_args.extend(a)
                    out.extend((ident("Collections"), punct("."), ident(method), punct("(")))
                    out.extend(new_args)
                    out.append(punct(")"))
                    i = close + 1
                    continue
                raise Unsupported(f"Arrays.{method} on a converted parameter")
            out.append(t)
            i += 1
        return tuple(out)

    def _recursive_argument(self, run: Tokens, i: int) -> bool:
        """Is ``run[i]`` a whole argument of a call to the method itself?"""
        if not (i and run[i - 1].text in ("(", ",")):
            return False
        if i + 1 < len(run) and run[i + 1].text not in (")", ","):
            return False
        depth = 0
        for j in range(i - 1, -1, -1):
            t = run[j]
            if t.is_(")") or t.is_("]"):
                depth += 1
            elif t.is_("(") or t.is_("["):
                if depth == 0:
                    return t.is_("(") and j > 0 and run[j - 1].text == self.method_name
                depth -= 1
        return False


def array_params_to_list(method: MethodUnit) -> tuple[MethodUnit, list[str]]:
    """Convert every 1-D array parameter; returns the new method and the names.

    Raises :class:`Unsupported` when the method cannot be converted safely.
    """
    params = array_params(method)
    multi = [p.name for p in params if p.dims > 1]
    single = [p for p in params if p.dims == 1]
    if multi:
        raise Unsupported(f"multi-dimensional array parameter {multi[0]!r}")
    if not single:
        return method, []
    names = {p.name for p in single}
    rewriter = _Rewriter(names, method.name, {p.name: p.wrapper for p in single})
    body = map_runs(method.body, rewriter, Language.JAVA)
    new_params = list(method.params)
    for ap in single:
        new_params[ap.index] = _list_param(method.params[ap.index], ap)
    return replace(method, params=tuple(new_params), body=body), [p.name for p in single]
