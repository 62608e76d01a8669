"""Subtraction-free rational expressions and their max-plus images.

Nodes are interned, so building the same subexpression twice returns the same
object; large formulas are DAGs and every walk below memoises on node identity.

Text grammar (EBNF) accepted by ``parse`` / ``parse_block``::

    block    = { binding } [ expr ] ;
    binding  = "let" name "=" expr ";" ;
    expr     = term { "+" term } ;
    term     = power { ( "*" | "/" ) power } ;
    power    = atom [ ( "^" | "**" ) [ "-" ] digits ] ;
    atom     = number | name | "(" expr ")" ;
    number   = digits [ "." digits ] ;
    name     = letter { letter | digit | "_" | "'" } ;

A binary minus anywhere is rejected: the language has no subtraction.

Piecewise-linear text for ``parse_pl`` uses integers, ``+``, ``-``, ``k*``
scaling and ``max{a, b, ...}``::

    plexpr = [ "-" ] pterm { ( "+" | "-" ) pterm } ;
    pterm  = digits "*" patom | patom ;
    patom  = digits | name | ( "max" | "min" ) "{" plexpr { "," plexpr } "}"
           | "(" plexpr ")" ;
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence

_INTERN: dict = {}


class Node:
    __slots__ = ("key", "__weakref__")

    def __new__(cls, *fields):
        key = (cls.__name__,) + fields
        hit = _INTERN.get(key)
        if hit is not None:
            return hit
        obj = object.__new__(cls)
        obj.key = key
        _INTERN[key] = obj
        return obj

    def __repr__(self):
        return to_text(self)

    def __reduce__(self):
        return (type(self), self.key[1:])


# ---------------------------------------------------------------- rational side

class RatExpr(Node):
    __slots__ = ()

    def __add__(self, o):
        return Add(self, lift(o))

    def __radd__(self, o):
        return Add(lift(o), self)

    def __mul__(self, o):
        return Mul(self, lift(o))

    def __rmul__(self, o):
        return Mul(lift(o), self)

    def __truediv__(self, o):
        return Div(self, lift(o))

    def __rtruediv__(self, o):
        return Div(lift(o), self)

    def __pow__(self, k):
        return Pow(self, k)


class Var(RatExpr):
    __slots__ = ()

    def __new__(cls, name: str):
        return super().__new__(cls, name)

    @property
    def name(self):
        return self.key[1]


class PosConst(RatExpr):
    __slots__ = ()

    def __new__(cls, value):
        value = Fraction(value)
        if value <= 0:
            raise ValueError("constants must be strictly positive")
        return super().__new__(cls, value)

    @property
    def value(self):
        return self.key[1]


class Add(RatExpr):
    __slots__ = ()


class Mul(RatExpr):
    __slots__ = ()


class Div(RatExpr):
    __slots__ = ()


class Pow(RatExpr):
    __slots__ = ()

    def __new__(cls, base, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        return super().__new__(cls, base, exponent)


def lift(x) -> RatExpr:
    if isinstance(x, RatExpr):
        return x
    if isinstance(x, str):
        return Var(x)
    return PosConst(x)


ONE = PosConst(1)


def add_all(items: Iterable[RatExpr]) -> RatExpr:
    items = list(items)
    if not items:
        raise ValueError("empty sum")
    out = items[0]
    for x in items[1:]:
        out = Add(out, x)
    return out


def mul_all(items: Iterable[RatExpr]) -> RatExpr:
    out = None
    for x in items:
        out = x if out is None else Mul(out, x)
    return ONE if out is None else out


# ---------------------------------------------------------------- PL side

class PLExpr(Node):
    __slots__ = ()


class PVar(PLExpr):
    __slots__ = ()


class IntConst(PLExpr):
    __slots__ = ()


class Plus(PLExpr):
    __slots__ = ()


class Minus(PLExpr):
    __slots__ = ()


class Max(PLExpr):
    __slots__ = ()


class ScalarMul(PLExpr):
    __slots__ = ()


def children(e: Node) -> tuple:
    return tuple(f for f in e.key[1:] if isinstance(f, Node))


def variables(e: Node) -> set:
    seen, out, stack = set(), set(), [e]
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen.add(id(x))
        if isinstance(x, (Var, PVar)):
            out.add(x.key[1])
        stack.extend(children(x))
    return out


def _topo(roots: Sequence[Node]) -> list:
    order, seen = [], set()
    for r in roots:
        stack = [(r, False)]
        while stack:
            x, done = stack.pop()
            if done:
                order.append(x)
                continue
            if id(x) in seen:
                continue
            seen.add(id(x))
            stack.append((x, True))
            for c in reversed(children(x)):
                if id(c) not in seen:
                    stack.append((c, False))
    return order


def tropicalize(e: RatExpr) -> PLExpr:
    """x*y -> x+y, x/y -> x-y, x+y -> max, x^k -> k*x, constants -> 0."""
    memo: dict = {}
    for x in _topo([e]):
        t = type(x)
        if t is Var:
            r = PVar(x.name)
        elif t is PosConst:
            r = IntConst(0)
        elif t is Add:
            r = Max(memo[id(x.key[1])], memo[id(x.key[2])])
        elif t is Mul:
            r = Plus(memo[id(x.key[1])], memo[id(x.key[2])])
        elif t is Div:
            r = Minus(memo[id(x.key[1])], memo[id(x.key[2])])
        elif t is Pow:
            r = ScalarMul(x.key[2], memo[id(x.key[1])])
        else:
            raise TypeError(f"not a rational expression: {x!r}")
        memo[id(x)] = r
    return memo[id(e)]


class UnboundVariable(KeyError):
    pass


def eval_rational(e: RatExpr, env: Mapping[str, Fraction]) -> Fraction:
    memo: dict = {}
    for x in _topo([e]):
        t = type(x)
        if t is Var:
            try:
                v = env[x.name]
            except KeyError:
                raise UnboundVariable(x.name) from None
            r = Fraction(v)
        elif t is PosConst:
            r = x.value
        elif t is Add:
            r = memo[id(x.key[1])] + memo[id(x.key[2])]
        elif t is Mul:
            r = memo[id(x.key[1])] * memo[id(x.key[2])]
        elif t is Div:
            r = memo[id(x.key[1])] / memo[id(x.key[2])]
        elif t is Pow:
            r = memo[id(x.key[1])] ** x.key[2]
        else:
            raise TypeError(f"not a rational expression: {x!r}")
        memo[id(x)] = r
    return memo[id(e)]


def eval_tropical(p: PLExpr, env: Mapping[str, int]) -> int:
    memo: dict = {}
    for x in _topo([p]):
        t = type(x)
        if t is PVar:
            try:
                r = env[x.key[1]]
            except KeyError:
                raise UnboundVariable(x.key[1]) from None
        elif t is IntConst:
            r = x.key[1]
        elif t is Plus:
            r = memo[id(x.key[1])] + memo[id(x.key[2])]
        elif t is Minus:
            r = memo[id(x.key[1])] - memo[id(x.key[2])]
        elif t is Max:
            a, b = memo[id(x.key[1])], memo[id(x.key[2])]
            r = a if a >= b else b
        elif t is ScalarMul:
            r = x.key[1] * memo[id(x.key[2])]
        else:
            raise TypeError(f"not a PL expression: {x!r}")
        memo[id(x)] = r
    return memo[id(p)]


# ---------------------------------------------------------------- compilation

def _emit(roots: Sequence[Node], argnames: Sequence[str]) -> list:
    lines, names = [], {}
    pos = {a: i for i, a in enumerate(argnames)}
    for k, x in enumerate(_topo(roots)):
        t = type(x)
        v = f"t{k}"
        if t in (Var, PVar):
            nm = x.key[1]
            if nm not in pos:
                raise UnboundVariable(nm)
            expr = f"_F(a[{pos[nm]}])" if isinstance(x, Var) else f"a[{pos[nm]}]"
        elif t is PosConst:
            expr = f"_F({x.value.numerator}, {x.value.denominator})"
        elif t is IntConst:
            expr = str(x.key[1])
        elif t in (Add, Plus):
            expr = f"{names[id(x.key[1])]} + {names[id(x.key[2])]}"
        elif t is Mul:
            expr = f"{names[id(x.key[1])]} * {names[id(x.key[2])]}"
        elif t in (Div, Minus):
            op = "/" if t is Div else "-"
            expr = f"{names[id(x.key[1])]} {op} {names[id(x.key[2])]}"
        elif t is Pow:
            expr = f"{names[id(x.key[1])]} ** {x.key[2]}"
        elif t is Max:
            a, b = names[id(x.key[1])], names[id(x.key[2])]
            expr = f"{a} if {a} >= {b} else {b}"
        elif t is ScalarMul:
            expr = f"{x.key[1]} * {names[id(x.key[2])]}"
        else:
            raise TypeError(type(x))
        names[id(x)] = v
        lines.append(f"    {v} = {expr}")
    outs = ", ".join(names[id(r)] for r in roots)
    lines.append(f"    return ({outs},)")
    return lines


def compile_exprs(roots: Sequence[Node], argnames: Sequence[str]) -> Callable:
    """Straight-line Python function a -> tuple of values for the given roots.

    Works for both rational and PL roots; rational variables are read through
    ``Fraction`` so integer inputs never fall back to float division.
    """
    lines = ["def _fn(a):"] + _emit(roots, argnames)
    ns = {"_F": Fraction}
    exec("\n".join(lines), ns)
    return ns["_fn"]


# ---------------------------------------------------------------- text

class ParseError(ValueError):
    pass


class SubtractionError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z][A-Za-z0-9_']*)|(\*\*|[-+*/^();={},]))")


def _tokens(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("sym", sym))
        pos = m.end()
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, text: str, env: Mapping[str, RatExpr]):
        self.toks = _tokens(text)
        self.i = 0
        self.env = dict(env)

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if kind and tok[0] != kind or value and tok[1] != value:
            raise ParseError(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok

    def block(self):
        while self.peek() == ("name", "let"):
            self.take()
            name = self.take("name")[1]
            self.take("sym", "=")
            self.env[name] = self.expr()
            self.take("sym", ";")
        result = None
        if self.peek()[0] != "end":
            result = self.expr()
        self.take("end")
        return self.env, result

    def expr(self):
        out = self.term()
        while True:
            tok = self.peek()
            if tok == ("sym", "+"):
                self.take()
                out = Add(out, self.term())
            elif tok == ("sym", "-"):
                raise SubtractionError("subtraction is not allowed in positive expressions")
            else:
                return out

    def term(self):
        out = self.power()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.power()
            out = Mul(out, rhs) if op == "*" else Div(out, rhs)
        return out

    def power(self):
        base = self.atom()
        if self.peek() in (("sym", "^"), ("sym", "**")):
            self.take()
            sign = 1
            if self.peek() == ("sym", "-"):
                self.take()
                sign = -1
            k = self.take("num")[1]
            if not k.isdigit():
                raise ParseError("exponents must be integers")
            return Pow(base, sign * int(k))
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return PosConst(Fraction(tok[1]))
        if tok[0] == "name":
            self.take()
            return self.env.get(tok[1]) or Var(tok[1])
        if tok == ("sym", "("):
            self.take()
            e = self.expr()
            self.take("sym", ")")
            return e
        if tok == ("sym", "-"):
            raise SubtractionError("negation is not allowed in positive expressions")
        raise ParseError(f"unexpected token {tok[1]!r}")


def parse(text: str, env: Mapping[str, RatExpr] = None) -> RatExpr:
    _, result = _Parser(text, env or {}).block()
    if result is None:
        raise ParseError("no expression after bindings")
    return result


def parse_block(text: str, env: Mapping[str, RatExpr] = None) -> dict:
    """Parse ``let`` bindings and return the full name -> expression map."""
    bindings, result = _Parser(text, env or {}).block()
    if result is not None:
        bindings["_"] = result
    return bindings


class _PLParser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    peek = _Parser.peek
    take = _Parser.take

    def expr(self):
        if self.peek() == ("sym", "-"):
            self.take()
            out = Minus(IntConst(0), self.term())
        else:
            out = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            out = Plus(out, rhs) if op == "+" else Minus(out, rhs)
        return out

    def term(self):
        tok = self.peek()
        if tok[0] == "num" and self.toks[self.i + 1] == ("sym", "*"):
            self.take()
            self.take()
            return ScalarMul(int(tok[1]), self.atom())
        return self.atom()

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            if not tok[1].isdigit():
                raise ParseError("PL constants must be integers")
            return IntConst(int(tok[1]))
        if tok in (("name", "max"), ("name", "min")):
            self.take("sym", "{")
            args = [self.expr()]
            while self.peek() == ("sym", ","):
                self.take()
                args.append(self.expr())
            self.take("sym", "}")
            if tok[1] == "min":
                args = [Minus(IntConst(0), a) for a in args]
            out = args[0]
            for a in args[1:]:
                out = Max(out, a)
            return out if tok[1] == "max" else Minus(IntConst(0), out)
        if tok[0] == "name":
            return PVar(tok[1])
        if tok == ("sym", "("):
            e = self.expr()
            self.take("sym", ")")
            return e
        raise ParseError(f"unexpected token {tok[1]!r}")


def parse_pl(text: str) -> PLExpr:
    p = _PLParser(text)
    e = p.expr()
    p.take("end")
    return e


def substitute(roots: Sequence[Node], mapping: Mapping[str, Node]) -> list:
    """Replace variables by expressions throughout a shared DAG (either kind)."""
    memo: dict = {}
    for x in _topo(roots):
        t = type(x)
        if t in (Var, PVar):
            r = mapping.get(x.key[1], x)
        elif t in (PosConst, IntConst):
            r = x
        elif t is Pow:
            r = Pow(memo[id(x.key[1])], x.key[2])
        elif t is ScalarMul:
            r = ScalarMul(x.key[1], memo[id(x.key[2])])
        else:
            r = t(memo[id(x.key[1])], memo[id(x.key[2])])
        memo[id(x)] = r
    return [memo[id(r)] for r in roots]


def check_subtraction_free(e) -> bool:
    """True for any RatExpr; text is parsed first and rejected on subtraction."""
    if isinstance(e, str):
        e = parse(e)
    if not isinstance(e, RatExpr):
        raise TypeError("expected a rational expression or its text")
    for x in _topo([e]):
        if not isinstance(x, RatExpr):
            return False
        if isinstance(x, PosConst) and x.value <= 0:
            return False
    return True


_OPNAMES = {Var: "var", PosConst: "const", Add: "add", Mul: "mul", Div: "div", Pow: "pow",
            PVar: "pvar", IntConst: "const", Plus: "plus", Minus: "minus", Max: "max",
            ScalarMul: "scale"}


def to_json_obj(e: Node):
    t = type(e)
    op = _OPNAMES[t]
    if t in (Var, PVar):
        return {"op": op, "name": e.key[1]}
    if t is PosConst:
        return {"op": op, "value": str(e.value)}
    if t is IntConst:
        return {"op": op, "value": e.key[1]}
    if t is Pow:
        return {"op": op, "exp": e.key[2], "args": [to_json_obj(e.key[1])]}
    if t is ScalarMul:
        return {"op": op, "k": e.key[1], "args": [to_json_obj(e.key[2])]}
    return {"op": op, "args": [to_json_obj(c) for c in children(e)]}


def to_json(e: Node) -> str:
    return json.dumps(to_json_obj(e), sort_keys=True)


def from_json_obj(obj) -> Node:
    op = obj["op"]
    args = [from_json_obj(a) for a in obj.get("args", [])]
    rat = {"add": Add, "mul": Mul, "div": Div}
    pl = {"plus": Plus, "minus": Minus, "max": Max}
    if op == "var":
        return Var(obj["name"])
    if op == "pvar":
        return PVar(obj["name"])
    if op == "const":
        v = obj["value"]
        return IntConst(v) if isinstance(v, int) else PosConst(Fraction(v))
    if op in rat:
        return rat[op](*args)
    if op in pl:
        return pl[op](*args)
    if op == "pow":
        return Pow(args[0], obj["exp"])
    if op == "scale":
        return ScalarMul(obj["k"], args[0])
    raise ValueError(f"unknown op {op!r}")


def to_text(e: Node) -> str:
    t = type(e)
    if t in (Var, PVar):
        return e.key[1]
    if t is PosConst:
        return str(e.value)
    if t is IntConst:
        return str(e.key[1])
    if t is Pow:
        return f"({to_text(e.key[1])})^{e.key[2]}"
    if t is ScalarMul:
        return f"{e.key[1]}*({to_text(e.key[2])})"
    if t is Max:
        return f"max{{{to_text(e.key[1])}, {to_text(e.key[2])}}}"
    sym = {Add: "+", Mul: "*", Div: "/", Plus: "+", Minus: "-"}[t]
    return f"({to_text(e.key[1])} {sym} {to_text(e.key[2])})"


def _mono_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for v, k in b:
        exps[v] = exps.get(v, 0) + k
    return tuple(sorted((v, k) for v, k in exps.items() if k))


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return out


def _poly_inv(p: dict):
    if len(p) != 1:
        return None
    (m, c), = p.items()
    return {tuple((v, -k) for v, k in m): 1 / Fraction(c)}


def laurent(e: RatExpr):
    """Expanded form as {monomial: coefficient}, or None if a sum is divided by.

    A monomial is a sorted tuple of (variable, nonzero exponent).
    """
    memo: dict = {}
    for node in _topo([e]):
        t = type(node)
        if t is Var:
            r = {((node.name, 1),): Fraction(1)}
        elif t is PosConst:
            r = {(): node.value}
        elif t in (Add, Mul, Div):
            a, b = memo[node.key[1]], memo[node.key[2]]
            if a is None or b is None:
                r = None
            elif t is Add:
                r = dict(a)
                for m, c in b.items():
                    r[m] = r.get(m, 0) + c
            elif t is Mul:
                r = _poly_mul(a, b)
            else:
                inv = _poly_inv(b)
                r = None if inv is None else _poly_mul(a, inv)
        elif t is Pow:
            base, k = memo[node.key[1]], node.key[2]
            if base is not None and k < 0:
                base = _poly_inv(base)
            r = None
            if base is not None:
                r = {(): Fraction(1)}
                for _ in range(abs(k)):
                    r = _poly_mul(r, base)
        else:
            raise TypeError(f"not a rational expression: {node!r}")
        memo[node] = None if r is None else {m: c for m, c in r.items() if c}
    return memo[e]


def laurent_text(e: RatExpr) -> str:
    """Readable expanded text; falls back to ``to_text`` when not a Laurent polynomial."""
    poly = laurent(e)
    if poly is None:
        return to_text(e)
    terms = []
    for m in sorted(poly, key=lambda m: (-sum(abs(k) for _, k in m), m)):
        c = poly[m]
        num = [v if k == 1 else f"{v}^{k}" for v, k in m if k > 0]
        den = [v if k == -1 else f"{v}^{-k}" for v, k in m if k < 0]
        body = "*".join(num) or ""
        if c != 1 or not body:
            body = f"{c}*{body}" if body else str(c)
        if den:
            body += "/" + (den[0] if len(den) == 1 else "(" + "*".join(den) + ")")
        terms.append(body)
    return " + ".join(terms) if terms else "0"


def pl_var(name: str) -> PLExpr:
    return PVar(name)
