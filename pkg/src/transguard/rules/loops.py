"""R2: rewrite complex Java ``for`` loops as ``while`` loops."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace

from ..syntax.conditions import split_top_level
from ..syntax.lexer import Language, TokenKind
from ..syntax.nodes import (
    Block,
    BreakStmt,
    CompoundStmt,
    CondChain,
    ContinueStmt,
    DeclStmt,
    ExprStmt,
    ForStmt,
    IfStmt,
    LogicOp,
    MethodUnit,
    OpaqueStmt,
    ReturnStmt,
    Stmt,
    WhileStmt,
    child_blocks,
    iter_stmts,
)
from .records import NameShadowError, RuleError, Unsupported
from .tree import identifier_names, kw

_ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<= >>= >>>=".split())
TRUE_COND = CondChain(LogicOp.SINGLE, ((kw("true"),),))


def _target(tokens) -> str | None:
    """Variable written by a simple update/assignment expression."""
    texts = [t.text for t in tokens]
    if len(tokens) >= 2 and texts[0] in ("++", "--") and tokens[1].kind is TokenKind.IDENTIFIER:
        return texts[1]
    if tokens and tokens[0].kind is TokenKind.IDENTIFIER:
        if len(tokens) == 1 or texts[1] in _ASSIGN_OPS or texts[1] in ("++", "--"):
            return texts[0]
    for t in tokens:
        if t.kind is TokenKind.IDENTIFIER:
            return t.text
    return None


def loop_variables(stmt: ForStmt) -> set[str]:
    names: set[str] = set()
    for s in stmt.header.init:
        if isinstance(s, DeclStmt):
            names.update(s.names)
        else:
            target = _target(s.tokens)
            if target:
                names.add(target)
    for s in stmt.header.update:
        target = _target(s.tokens)
        if target:
            names.add(target)
    return names


def is_linear_update(tokens) -> bool:
    """``v ++``, ``v --``, ``++ v``, ``-- v``, ``v += c`` or ``v -= c`` (c literal)."""
    kinds = [t.kind for t in tokens]
    texts = [t.text for t in tokens]
    if len(tokens) == 2:
        if kinds[0] is TokenKind.IDENTIFIER and texts[1] in ("++", "--"):
            return True
        if texts[0] in ("++", "--") and kinds[1] is TokenKind.IDENTIFIER:
            return True
    if len(tokens) == 3:
        return kinds[0] is TokenKind.IDENTIFIER and texts[1] in ("+=", "-=") and kinds[2] is TokenKind.NUMBER
    return False


def detect_complex_for(stmt: ForStmt) -> bool:
    """Multiple conditions, multiple variables, or a nonlinear update."""
    h = stmt.header
    if h.cond is not None and h.cond.count > 1:
        return True
    if len(loop_variables(stmt)) > 1:
        return True
    return any(not is_linear_update(u.tokens) for u in h.update)


# ---- reachability


def _own_break(block: Block) -> bool:
    """Does an unlabeled break in ``block`` target the enclosing loop?"""
    for stmt in block.stmts:
        if isinstance(stmt, BreakStmt) and not stmt.label:
            return True
        if isinstance(stmt, (ForStmt, WhileStmt)):
            continue
        if isinstance(stmt, CompoundStmt) and (stmt.is_loop or _head_is(stmt, "switch")):
            continue
        if any(_own_break(b) for b in child_blocks(stmt)):
            return True
    return False


def _head_is(stmt: CompoundStmt, word: str) -> bool:
    head = stmt.parts[0][0] if stmt.parts else ()
    return bool(head) and head[0].text == word


def _always_true(chain: CondChain | None) -> bool:
    return chain is None or (chain.count == 1 and [t.text for t in chain.clauses[0]] == ["true"])


def completes_normally(block: Block) -> bool:
    """Conservative version of Java's "can complete normally" for a block."""
    if not block.stmts:
        return True
    return _stmt_completes(block.stmts[-1])


def _stmt_completes(stmt: Stmt) -> bool:
    if isinstance(stmt, (ReturnStmt, BreakStmt, ContinueStmt)):
        return False
    if isinstance(stmt, ExprStmt) and stmt.tokens and stmt.tokens[0].is_("throw"):
        return False
    if isinstance(stmt, IfStmt):
        if stmt.orelse is None:
            return True
        other = Block((stmt.orelse,)) if isinstance(stmt.orelse, IfStmt) else stmt.orelse
        return completes_normally(stmt.then) or completes_normally(other)
    if isinstance(stmt, WhileStmt):
        return not (_always_true(stmt.cond) and not _own_break(stmt.body))
    if isinstance(stmt, ForStmt):
        return not (_always_true(stmt.header.cond) and not _own_break(stmt.body))
    if isinstance(stmt, CompoundStmt) and stmt.is_bare_block:
        return completes_normally(stmt.parts[0][1])
    return True


# ---- the transform


def _insert_before_continue(block: Block, updates: tuple[ExprStmt, ...]) -> Block:
    out: list[Stmt] = []
    for stmt in block.stmts:
        if isinstance(stmt, ContinueStmt) and not stmt.label:
            first = replace(updates[0], comments=stmt.comments) if stmt.comments else updates[0]
            out.extend((first,) + updates[1:])
            out.append(replace(stmt, comments=()))
            continue
        if isinstance(stmt, OpaqueStmt) and any(t.is_("continue") for t in stmt.tokens):
            raise Unsupported("continue inside an unparsed statement")
        if isinstance(stmt, (ForStmt, WhileStmt)) or (isinstance(stmt, CompoundStmt) and stmt.is_loop):
            out.append(stmt)
            continue
        if isinstance(stmt, IfStmt):
            orelse = stmt.orelse
            if isinstance(orelse, IfStmt):
                orelse = _insert_before_continue(Block((orelse,)), updates).stmts[0]
            elif isinstance(orelse, Block):
                orelse = _insert_before_continue(orelse, updates)
            out.append(replace(stmt, then=_insert_before_continue(stmt.then, updates), orelse=orelse))
            continue
        if isinstance(stmt, CompoundStmt):
            parts = tuple((head, _insert_before_continue(b, updates)) for head, b in stmt.parts)
            out.append(replace(stmt, parts=parts))
            continue
        out.append(stmt)
    return Block(tuple(out))


def declared_in(block: Block) -> set[str]:
    names: set[str] = set()
    for stmt in iter_stmts(block):
        if isinstance(stmt, DeclStmt):
            names.update(stmt.names)
        elif isinstance(stmt, ForStmt):
            for s in stmt.header.init:
                if isinstance(s, DeclStmt):
                    names.update(s.names)
    return names


def for_to_while(stmt: ForStmt, live_names: frozenset[str] | set[str] = frozenset()) -> list[Stmt]:
    """``init ; while ( cond ) { body ; update }`` with updates before continues.

    ``live_names`` are names the hoisted declarations must not collide with.
    """
    h = stmt.header
    init: list[Stmt] = []
    for s in h.init:
        if isinstance(s, DeclStmt):
            clash = sorted(set(s.names) & set(live_names))
            if clash:
                raise NameShadowError(f"loop variable {clash[0]!r} is already in use")
            init.append(s)
        else:
            init.extend(ExprStmt(tokens=tuple(p)) for _, p in split_top_level(s.tokens, {","}) if p)
    updates = tuple(ExprStmt(tokens=u.tokens) for u in h.update)
    body = stmt.body
    if updates:
        captured = identifier_names(list(updates), Language.JAVA) & declared_in(body)
        if captured:
            raise NameShadowError(f"update would see body local {sorted(captured)[0]!r}")
        new_body = _insert_before_continue(body, updates)
        if completes_normally(body):
            new_body = Block(new_body.stmts + updates)
    else:
        new_body = body
    loop = WhileStmt(cond=h.cond if h.cond is not None else TRUE_COND, body=new_body)
    out = init + [loop]
    if stmt.comments:
        out[0] = replace(out[0], comments=stmt.comments + out[0].comments)
    return out


@dataclass
class LoopReport:
    candidates: int = 0
    converted: int = 0
    skipped: list[str] = field(default_factory=list)


def _is_label(stmt: Stmt) -> bool:
    return (
        isinstance(stmt, OpaqueStmt)
        and len(stmt.tokens) == 2
        and stmt.tokens[0].kind is TokenKind.IDENTIFIER
        and stmt.tokens[1].text == ":"
    )


def convert_loops(method: MethodUnit, *, all_loops: bool = False) -> tuple[MethodUnit, LoopReport]:
    """Apply :func:`for_to_while` to every eligible loop, innermost first."""
    report = LoopReport()
    params = {p.name for p in method.params}
    decl_counts: Counter[str] = Counter()
    for stmt in iter_stmts(method.body):
        if isinstance(stmt, DeclStmt):
            decl_counts.update(stmt.names)
        elif isinstance(stmt, ForStmt):
            for s in stmt.header.init:
                if isinstance(s, DeclStmt):
                    decl_counts.update(s.names)

    def xform_block(block: Block, after: frozenset[str]) -> Block:
        stmts = list(block.stmts)
        ids = [identifier_names([s], Language.JAVA) for s in stmts]
        out: list[Stmt] = []
        for k, stmt in enumerate(stmts):
            tail: set[str] = set(after)
            for later in ids[k + 1:]:
                tail |= later
            stmt = xform_children(stmt, frozenset(tail))
            if isinstance(stmt, ForStmt) and (all_loops or detect_complex_for(stmt)):
                report.candidates += 1
                try:
                    if k and _is_label(stmts[k - 1]):
                        raise Unsupported("labeled loop")
                    own = {n for s in stmt.header.init if isinstance(s, DeclStmt) for n in s.names}
                    twice = {n for n in own if decl_counts[n] > 1}
                    out.extend(for_to_while(stmt, (tail | params | twice) & own))
                    report.converted += 1
                    continue
                except RuleError as err:
                    report.skipped.append(f"{type(err).__name__}: {err}")
            out.append(stmt)
        return Block(tuple(out))

    def xform_children(stmt: Stmt, after: frozenset[str]) -> Stmt:
        if isinstance(stmt, (ForStmt, WhileStmt)):
            return replace(stmt, body=xform_block(stmt.body, after))
        if isinstance(stmt, IfStmt):
            orelse = stmt.orelse
            if isinstance(orelse, IfStmt):
                orelse = xform_children(orelse, after)
            elif isinstance(orelse, Block):
                orelse = xform_block(orelse, after)
            return replace(stmt, then=xform_block(stmt.then, after), orelse=orelse)
        if isinstance(stmt, CompoundStmt):
            return replace(stmt, parts=tuple((h, xform_block(b, after)) for h, b in stmt.parts))
        return stmt

    body = xform_block(method.body, frozenset())
    return replace(method, body=body), report
