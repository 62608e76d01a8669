"""Piecewise-linear case tables: guarded integer moves selected by inequalities.

A condition is text: comma-separated conjuncts, each conjunct one or more
comparisons joined by ``or``.  Sides of a comparison are PL expressions in the
grammar of :func:`affcrystal.expr.parse_pl`; named helpers (``lets``) may be
used on either side.  Commas inside ``max{...}`` are not conjunct separators.

Example::

    "b23 >= b12, b12+b24 > b35 or 2*b11 <= b22"
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .expr import Minus, PLExpr, compile_exprs, parse_pl, substitute

_OPS = {"<=": operator.le, ">=": operator.ge, "<": operator.lt, ">": operator.gt,
        "==": operator.eq}
_CMP = re.compile(r"(<=|>=|==|<|>)")


class ConditionError(ValueError):
    pass


def split_top(text: str, sep: str = ",") -> list:
    depth, start, out = 0, 0, []
    for k, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append(text[start:k])
            start = k + 1
    out.append(text[start:])
    return [s.strip() for s in out if s.strip()]


def resolve_lets(lets: Mapping[str, str] | None) -> dict:
    """Parse helper definitions in order; later ones may use earlier ones."""
    env: dict = {}
    for name, txt in (lets or {}).items():
        env[name] = substitute([parse_pl(txt)], env)[0]
    return env


def pl(text: str, env: Mapping[str, PLExpr]) -> PLExpr:
    return substitute([parse_pl(text)], env)[0]


def parse_condition(text: str, env: Mapping[str, PLExpr]) -> list:
    """-> list of conjuncts; each conjunct a list of (op, lhs - rhs)."""
    out = []
    for conj in split_top(text):
        alts = []
        for alt in re.split(r"\bor\b", conj):
            parts = _CMP.split(alt)
            if len(parts) != 3:
                raise ConditionError(f"need exactly one comparison in {alt!r}")
            lhs, op, rhs = parts
            alts.append((op, Minus(pl(lhs, env), pl(rhs, env))))
        out.append(alts)
    return out


@dataclass(frozen=True)
class Case:
    """One row: coordinate moves (name -> delta) under a condition."""
    label: str
    moves: Mapping[str, int]
    cond: str = ""
    note: str = ""


@dataclass
class CaseTable:
    """Compiled first-match dispatch over rows sharing a coordinate order.

    ``common`` moves are added in every case.
    """
    coords: Sequence[str]
    cases: Sequence[Case]
    lets: Mapping[str, str] = None
    common: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        env = resolve_lets(self.lets)
        self._conds = [parse_condition(c.cond, env) for c in self.cases]
        roots, self._shape = [], []
        for conj_list in self._conds:
            shape = []
            for alts in conj_list:
                shape.append(tuple(op for op, _ in alts))
                roots.extend(d for _, d in alts)
            self._shape.append(shape)
        self._eval = compile_exprs(roots, self.coords) if roots else (lambda a: ())
        pos = {c: k for k, c in enumerate(self.coords)}
        self._deltas = []
        for c in self.cases:
            d = [0] * len(self.coords)
            for name, v in list(self.common.items()) + list(c.moves.items()):
                d[pos[name]] += v
            self._deltas.append(tuple(d))

    def holds(self, pt: Sequence[int]) -> list:
        """Truth value of every row's condition at pt."""
        vals = iter(self._eval(tuple(pt)))
        out = []
        for shape in self._shape:
            ok = True
            for ops in shape:
                hit = False
                for op in ops:
                    hit = _OPS[op](next(vals), 0) or hit
                ok = ok and hit
            out.append(ok)
        return out

    def firing(self, pt: Sequence[int]) -> list:
        return [k for k, h in enumerate(self.holds(pt)) if h]

    def first(self, pt: Sequence[int]):
        for k, h in enumerate(self.holds(pt)):
            if h:
                return k
        return None

    def delta(self, k: int) -> tuple:
        return self._deltas[k]

    def move(self, pt: Sequence[int], k: int) -> tuple:
        return tuple(a + d for a, d in zip(pt, self._deltas[k]))

    def apply(self, pt: Sequence[int]):
        """First matching row applied, or None when no row fires."""
        k = self.first(pt)
        return None if k is None else self.move(pt, k)
