"""A tiny interpreter for the int/boolean Java subset used by the loop fuzzer.

Independent of transguard: own tokenizer, own parser. Semantics follow Java
for what it covers: 32-bit wrap-around, truncating ``/`` and ``%``,
short-circuit ``&&``/``||``, block scoping of locals, labeled-free
``break``/``continue``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_TOKEN = re.compile(r"\s*(>>>=|<<=|>>=|>>>|\+\+|--|&&|\|\||[-+*/%&|^!=<>]=|<<|>>|\d+|[A-Za-z_]\w*|\S)")
TYPES = {"int", "boolean", "long"}


def wrap(v: int) -> int:
    return (v + 2**31) % 2**32 - 2**31


def lex(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SyntaxError(text[pos:pos + 20])
        out.append(m.group(1))
        pos = m.end()
    return out


class Fuel(Exception):
    pass


class _Break(Exception):
    pass


class _Continue(Exception):
    pass


class _Return(Exception):
    def __init__(self, value):
        self.value = value


@dataclass
class Outcome:
    kind: str  # "return", "fuel", "arith"
    value: object
    store: dict[str, object]
    trace: list[tuple[tuple[str, object], ...]] = field(default_factory=list)


# ---- parser: statements become nested tuples


class Parser:
    def __init__(self, tokens: list[str]):
        self.t = tokens
        self.i = 0

    def peek(self, k: int = 0) -> str | None:
        j = self.i + k
        return self.t[j] if j < len(self.t) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise SyntaxError(f"expected {want!r}, got {tok!r} at {self.i}")
        self.i += 1
        return tok

    def method(self):
        while self.peek() != "(":
            self.take()
        name = self.t[self.i - 1]
        self.take("(")
        params = []
        while self.peek() != ")":
            self.take()  # type
            params.append(self.take())
            if self.peek() == ",":
                self.take()
        self.take(")")
        return name, params, self.block()

    def block(self):
        self.take("{")
        stmts = []
        while self.peek() != "}":
            stmts.append(self.stmt())
        self.take("}")
        return ("block", stmts)

    def stmt(self):
        tok = self.peek()
        if tok == "{":
            return self.block()
        if tok == "if":
            self.take()
            cond = self.paren()
            then = self.stmt()
            other = None
            if self.peek() == "else":
                self.take()
                other = self.stmt()
            return ("if", cond, then, other)
        if tok == "while":
            self.take()
            cond = self.paren()
            return ("while", cond, self.stmt())
        if tok == "for":
            self.take()
            self.take("(")
            init = self.simple(";")
            self.take(";")
            cond = None if self.peek() == ";" else self.expr()
            self.take(";")
            update = [] if self.peek() == ")" else self.expr_list()
            self.take(")")
            return ("for", init, cond, update, self.stmt())
        if tok in ("break", "continue"):
            self.take()
            self.take(";")
            return (tok,)
        if tok == "return":
            self.take()
            value = None if self.peek() == ";" else self.expr()
            self.take(";")
            return ("return", value)
        s = self.simple(";")
        self.take(";")
        return s

    def simple(self, end: str):
        if self.peek() == end:
            return ("block", [])
        if self.peek() in TYPES:
            self.take()
            decls = []
            while True:
                name = self.take()
                value = None
                if self.peek() == "=":
                    self.take()
                    value = self.assign()
                decls.append((name, value))
                if self.peek() != ",":
                    break
                self.take(",")
            return ("decl", decls)
        return ("exprs", self.expr_list())

    def expr_list(self):
        out = [self.expr()]
        while self.peek() == ",":
            self.take()
            out.append(self.expr())
        return out

    def paren(self):
        self.take("(")
        e = self.expr()
        self.take(")")
        return e

    # precedence climbing
    BINARY = [
        ["||"], ["&&"], ["|"], ["^"], ["&"], ["==", "!="], ["<", "<=", ">", ">="],
        ["<<", ">>", ">>>"], ["+", "-"], ["*", "/", "%"],
    ]
    ASSIGN = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="}

    def expr(self):
        return self.assign()

    def assign(self):
        left = self.ternary()
        if self.peek() in self.ASSIGN:
            op = self.take()
            if left[0] != "var":
                raise SyntaxError("assignment target")
            return ("assign", op, left[1], self.assign())
        return left

    def ternary(self):
        c = self.binary(0)
        if self.peek() == "?":
            self.take()
            a = self.assign()
            self.take(":")
            b = self.assign()
            return ("cond", c, a, b)
        return c

    def binary(self, level: int):
        if level == len(self.BINARY):
            return self.unary()
        left = self.binary(level + 1)
        while self.peek() in self.BINARY[level]:
            op = self.take()
            left = ("bin", op, left, self.binary(level + 1))
        return left

    def unary(self):
        tok = self.peek()
        if tok in ("-", "+", "!", "~"):
            self.take()
            return ("un", tok, self.unary())
        if tok in ("++", "--"):
            self.take()
            name = self.take()
            return ("pre", tok, name)
        return self.postfix()

    def postfix(self):
        tok = self.take()
        if tok == "(":
            e = self.expr()
            self.take(")")
            node = e
        elif tok.isdigit():
            node = ("num", int(tok))
        elif tok in ("true", "false"):
            node = ("num", tok == "true")
        elif re.match(r"[A-Za-z_]", tok):
            node = ("var", tok)
        else:
            raise SyntaxError(f"unexpected {tok!r}")
        if self.peek() in ("++", "--") and node[0] == "var":
            return ("post", self.take(), node[1])
        return node


# ---- evaluation


class Machine:
    def __init__(self, fuel: int):
        self.scopes: list[dict[str, object]] = []
        self.fuel = fuel
        self.trace: list[tuple[tuple[str, object], ...]] = []

    def snapshot(self) -> tuple[tuple[str, object], ...]:
        flat: dict[str, object] = {}
        for scope in self.scopes:
            flat.update(scope)
        return tuple(sorted(flat.items()))

    def lookup(self, name: str) -> dict[str, object]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope
        raise NameError(name)

    def exec_block(self, stmts, new_scope: bool = True):
        if new_scope:
            self.scopes.append({})
        try:
            for s in stmts:
                self.exec(s)
        finally:
            if new_scope:
                self.scopes.pop()

    def check(self, cond) -> bool:
        # every loop-condition evaluation is an iteration boundary
        self.fuel -= 1
        if self.fuel < 0:
            raise Fuel()
        self.trace.append(self.snapshot())
        return cond is None or bool(self.eval(cond))

    def exec(self, s):
        kind = s[0]
        if kind == "block":
            self.exec_block(s[1])
        elif kind == "decl":
            for name, value in s[1]:
                self.scopes[-1][name] = self.eval(value) if value is not None else 0
        elif kind == "exprs":
            for e in s[1]:
                self.eval(e)
        elif kind == "if":
            if self.eval(s[1]):
                self.exec(s[2])
            elif s[3] is not None:
                self.exec(s[3])
        elif kind == "while":
            while self.check(s[1]):
                try:
                    self.exec(s[2])
                except _Break:
                    break
                except _Continue:
                    continue
        elif kind == "for":
            self.scopes.append({})
            try:
                self.exec(s[1])
                while self.check(s[2]):
                    try:
                        self.exec(s[4])
                    except _Break:
                        break
                    except _Continue:
                        pass
                    for u in s[3]:
                        self.eval(u)
            finally:
                self.scopes.pop()
        elif kind == "break":
            raise _Break()
        elif kind == "continue":
            raise _Continue()
        elif kind == "return":
            raise _Return(None if s[1] is None else self.eval(s[1]))
        else:
            raise ValueError(kind)

    def eval(self, e):
        kind = e[0]
        if kind == "num":
            return e[1]
        if kind == "var":
            return self.lookup(e[1])[e[1]]
        if kind == "un":
            v = self.eval(e[2])
            return {"-": lambda: wrap(-v), "+": lambda: v, "!": lambda: not v, "~": lambda: wrap(~v)}[e[1]]()
        if kind in ("pre", "post"):
            scope = self.lookup(e[2])
            old = scope[e[2]]
            scope[e[2]] = wrap(old + (1 if e[1] == "++" else -1))
            return scope[e[2]] if kind == "pre" else old
        if kind == "assign":
            scope = self.lookup(e[2])
            value = self.eval(e[3])
            if e[1] != "=":
                value = self.arith(e[1][:-1], scope[e[2]], value)
            scope[e[2]] = value
            return value
        if kind == "cond":
            return self.eval(e[2]) if self.eval(e[1]) else self.eval(e[3])
        op = e[1]
        if op == "&&":
            return bool(self.eval(e[2])) and bool(self.eval(e[3]))
        if op == "||":
            return bool(self.eval(e[2])) or bool(self.eval(e[3]))
        return self.arith(op, self.eval(e[2]), self.eval(e[3]))

    @staticmethod
    def arith(op: str, a, b):
        if op in ("==", "!="):
            return (a == b) == (op == "==")
        if op in ("<", "<=", ">", ">="):
            return {"<": a < b, "<=": a <= b, ">": a > b, ">=": a >= b}[op]
        if op in ("/", "%"):
            if b == 0:
                raise ArithmeticError("/ by zero")
            q = abs(a) // abs(b) * (1 if (a >= 0) == (b >= 0) else -1)
            return wrap(q) if op == "/" else wrap(a - b * q)
        if op in ("&", "|", "^") and isinstance(a, bool):
            return {"&": a and b, "|": a or b, "^": a != b}[op]
        return wrap({
            "+": lambda: a + b, "-": lambda: a - b, "*": lambda: a * b,
            "&": lambda: a & b, "|": lambda: a | b, "^": lambda: a ^ b,
            "<<": lambda: a << (b & 31), ">>": lambda: a >> (b & 31),
            ">>>": lambda: (a % 2**32) >> (b & 31),
        }[op]())


def run(method_text: str, args: list[int], fuel: int = 2000) -> Outcome:
    """Run a static int method; returns the outcome with its trace."""
    name, params, body = Parser(lex(method_text)).method()
    m = Machine(fuel)
    m.scopes.append(dict(zip(params, args)))
    try:
        m.exec_block(body[1], new_scope=False)
        kind, value = "return", None
    except _Return as r:
        kind, value = "return", r.value
    except Fuel:
        kind, value = "fuel", None
    except ArithmeticError:
        kind, value = "arith", None
    return Outcome(kind, value, dict(m.scopes[0]), m.trace)
