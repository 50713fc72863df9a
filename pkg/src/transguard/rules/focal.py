"""R1: translate the focal method in isolation."""

from __future__ import annotations

from ..syntax.lexer import TokenKind
from ..syntax.nodes import MethodUnit, OtherItem, SyntaxUnit
from ..syntax.render import render
from .records import AmbiguousFocal, FocalNotFound, MutationRecord, Rule, applied_record, skipped_record
from .tree import find_methods

DEFAULT_FOCAL = "f_gold"


def find_focal(unit: SyntaxUnit, focal_name: str = DEFAULT_FOCAL) -> MethodUnit:
    found = find_methods(unit, focal_name)
    if not found:
        raise FocalNotFound(f"no method named {focal_name!r}")
    if len(found) > 1:
        raise AmbiguousFocal(f"{len(found)} methods named {focal_name!r}")
    return found[0]


def has_context(unit: SyntaxUnit, focal: MethodUnit) -> bool:
    """True when anything besides the focal method (and comments) is present."""
    for item in unit.items:
        if item is focal:
            continue
        if isinstance(item, MethodUnit):
            return True
        if isinstance(item, OtherItem) and any(
            t.kind not in (TokenKind.COMMENT, TokenKind.INDENT) for t in item.tokens
        ):
            return True
    return False


def extract_focal(unit: SyntaxUnit, focal_name: str = DEFAULT_FOCAL) -> tuple[str, MutationRecord]:
    """Return the focal method's text alone.

    Raises :class:`FocalNotFound` / :class:`AmbiguousFocal`. When the unit
    holds nothing but the focal method the source text is returned as is.
    """
    focal = find_focal(unit, focal_name)
    if not has_context(unit, focal):
        return unit.source, skipped_record(Rule.R1_CONTEXT, applicable=False, notes="no surrounding context")
    text = render(focal, unit.language)
    dropped = sum(1 for it in unit.items if it is not focal)
    return text, applied_record(Rule.R1_CONTEXT, unit.source, text, f"removed {dropped} surrounding item(s)")
