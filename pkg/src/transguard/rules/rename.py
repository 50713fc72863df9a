"""R3b: rename Python parameters called ``arr``/``arrK`` to ``listK``."""

from __future__ import annotations

import re
from dataclasses import replace

from ..syntax.lexer import Language, Token, TokenKind
from ..syntax.nodes import MethodUnit, Param, Tokens
from .records import CaptureError, Unsupported
from .tree import identifiers, map_runs

DEFAULT_ARR_PATTERN = r"arr\d*"
_FSTRING = re.compile(r"^[rRbB]?[fF][rR]?['\"]")


def matching_params(method: MethodUnit, pattern: str = DEFAULT_ARR_PATTERN) -> list[str]:
    rx = re.compile(pattern)
    return [p.name for p in method.params if p.name and rx.fullmatch(p.name)]


def plan_renames(method: MethodUnit, pattern: str = DEFAULT_ARR_PATTERN) -> dict[str, str]:
    """Map each matching parameter to its ``listK`` name.

    ``arrK`` keeps its number; a bare ``arr`` takes the lowest free number.
    Raises :class:`CaptureError` if a target name is already used.
    """
    names = matching_params(method, pattern)
    used = {t.text for t in identifiers(method.body, Language.PYTHON)} | {p.name for p in method.params}
    mapping: dict[str, str] = {}
    taken: set[str] = set()
    for name in names:
        m = re.fullmatch(r"arr(\d+)", name)
        if m:
            target = f"list{m.group(1)}"
            if target in used or target in taken:
                raise CaptureError(f"{target!r} is already bound in the method")
            mapping[name] = target
            taken.add(target)
    for name in names:
        if name in mapping:
            continue
        k = 1
        while f"list{k}" in used or f"list{k}" in taken:
            k += 1
        mapping[name] = f"list{k}"
        taken.add(mapping[name])
    return mapping


def _rename_run(run: Tokens, mapping: dict[str, str]) -> Tokens:
    out: list[Token] = []
    depth: list[str] = []
    for i, t in enumerate(run):
        if t.kind is TokenKind.PUNCTUATION and t.text in "([{":
            depth.append(t.text)
        elif t.kind is TokenKind.PUNCTUATION and t.text in ")]}" and depth:
            depth.pop()
        if t.kind is TokenKind.STRING and _FSTRING.match(t.text):
            for old in mapping:
                if re.search(r"\{[^}]*\b%s\b" % re.escape(old), t.text):
                    raise Unsupported(f"f-string refers to {old!r}")
        if t.kind is not TokenKind.IDENTIFIER or t.text not in mapping:
            out.append(t)
            continue
        attribute = i > 0 and run[i - 1].is_(".")
        keyword_arg = (
            depth and depth[-1] == "(" and i > 0 and run[i - 1].text in ("(", ",")
            and i + 1 < len(run) and run[i + 1].is_("=")
        )
        out.append(t if attribute or keyword_arg else Token(t.kind, mapping[t.text], t.span))
    return tuple(out)


def rename_arr_params(method: MethodUnit, pattern: str = DEFAULT_ARR_PATTERN) -> tuple[MethodUnit, dict[str, str]]:
    mapping = plan_renames(method, pattern)
    if not mapping:
        return method, {}
    body = map_runs(method.body, lambda run, role: _rename_run(run, mapping), Language.PYTHON)
    params = []
    for p in method.params:
        if p.name in mapping:
            toks = tuple(Token(t.kind, mapping[t.text], t.span) if t.kind is TokenKind.IDENTIFIER and t.text == p.name else t
                         for t in p.tokens)
            p = Param(mapping[p.name], p.type, toks)
        params.append(p)
    return replace(method, params=tuple(params), body=body), mapping
