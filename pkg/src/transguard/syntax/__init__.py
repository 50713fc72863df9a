"""Lexing, structural parsing and rendering of Java and Python methods."""

from .conditions import chain_tokens, parse_condition, split_top_level, with_clauses
from .lexer import Language, LexError, ParseError, SyntaxProblem, Token, TokenKind, normalize, tokenize
from .nodes import (
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
    LogicOp,
    MethodUnit,
    OpaqueStmt,
    OtherItem,
    Param,
    ReturnStmt,
    SyntaxUnit,
    WhileStmt,
    iter_stmts,
)
from .parser import parse_method_text, parse_source, parse_unit
from .render import render, render_tokens

__all__ = [
    "Block",
    "BreakStmt",
    "CompoundStmt",
    "CondChain",
    "ContinueStmt",
    "DeclStmt",
    "ExprStmt",
    "ForHeader",
    "ForStmt",
    "IfStmt",
    "Language",
    "LexError",
    "LogicOp",
    "MethodUnit",
    "OpaqueStmt",
    "OtherItem",
    "Param",
    "ParseError",
    "ReturnStmt",
    "SyntaxProblem",
    "SyntaxUnit",
    "Token",
    "TokenKind",
    "WhileStmt",
    "chain_tokens",
    "iter_stmts",
    "normalize",
    "parse_condition",
    "parse_method_text",
    "parse_source",
    "parse_unit",
    "render",
    "render_tokens",
    "split_top_level",
    "tokenize",
    "with_clauses",
]
