"""Parametrized perfect crystals B^{n,l} and their limits B^{n,inf} for D_{n+1}^(2).

Elements are arrays ``b_ij`` (1 <= i <= n, i <= j <= i+n) kept as integer tuples
in row-major order.  Kashiwara operators come from the transcribed case tables
in :mod:`affcrystal.pc_tables`; on B^{n,l} a row whose move would make an entry
negative yields ``None``.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from . import pc_tables as T
from .casetable import Case, CaseTable, pl
from .expr import compile_exprs

RANKS = (2, 3, 4)
MAX_ENUM_LEVEL = 4


class InvalidElement(ValueError):
    pass


class BoundsExceeded(ValueError):
    pass


def _rank(n: int) -> None:
    if n not in RANKS:
        raise ValueError(f"perfect crystals are tabulated for n in {RANKS}, got {n}")


def index_set(n: int) -> tuple:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i, i + n + 1))


def coord_names(n: int) -> tuple:
    return tuple(f"b{i}{j}" for i, j in index_set(n))


def comarks(n: int) -> tuple:
    """Coefficients of the canonical central element of D_{n+1}^(2)."""
    return (1,) + (2,) * (n - 1) + (1,)


@dataclass(frozen=True)
class PcElement:
    n: int
    level: Optional[int]
    b: tuple

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.b[_pos(self.n)[(i, j)]]

    def as_dict(self) -> dict:
        return {f"{i}{j}": v for (i, j), v in zip(index_set(self.n), self.b)}

    def to_json_obj(self) -> dict:
        return {"n": self.n, "level": self.level, "b": self.as_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    def label(self) -> str:
        return self.to_json()

    @classmethod
    def from_dict(cls, n: int, level: Optional[int], b: Mapping) -> "PcElement":
        _rank(n)
        vals = []
        for i, j in index_set(n):
            v = b.get((i, j), b.get(f"{i}{j}", b.get(f"b{i}{j}", 0)))
            vals.append(int(v))
        return cls(n, level, tuple(vals))

    @classmethod
    def from_json(cls, text_or_obj) -> "PcElement":
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        return cls.from_dict(obj["n"], obj.get("level"), obj["b"])


@lru_cache(maxsize=None)
def _pos(n: int) -> dict:
    return {ij: k for k, ij in enumerate(index_set(n))}


def zero(n: int) -> PcElement:
    """b_inf, the all-zero element of B^{n,inf}."""
    _rank(n)
    return PcElement(n, None, (0,) * len(index_set(n)))


# ---------------------------------------------------------------- linear structure

def _linear_rows(n: int) -> list:
    """Constraints as (coeffs over coords, coefficient of l); each row sums to 0."""
    names = coord_names(n)
    rows = []
    for i in range(1, n + 1):
        rows.append(({f"b{i}{j}": 1 for j in range(i, i + n + 1)}, -1))
    for rel in T.RELATIONS[n]:
        lhs, rhs = rel.split("=")
        coeffs: dict = {}
        for side, sign in ((lhs, 1), (rhs, -1)):
            for t in side.split("+"):
                t = t.strip()
                coeffs[t] = coeffs.get(t, 0) + sign
        rows.append((coeffs, 0))
    for coeffs, _ in rows:
        assert set(coeffs) <= set(names)
    return rows


@lru_cache(maxsize=None)
def affine_solution(n: int) -> dict:
    """Each coordinate as an integer affine form in FREE[n] and l.

    Returned as name -> dict(var -> int) with var in FREE[n] + ("l",).
    Raises if the free set does not determine the rest integrally.
    """
    _rank(n)
    free = T.FREE[n]
    bound = [c for c in coord_names(n) if c not in free]
    vars_ = list(free) + ["l"]
    # A * bound = B * vars  (rows of the homogeneous system moved across)
    mat = []
    for coeffs, lcoef in _linear_rows(n):
        left = [Fraction(coeffs.get(c, 0)) for c in bound]
        right = [Fraction(-coeffs.get(v, 0)) for v in free] + [Fraction(-lcoef)]
        mat.append(left + right)
    nb = len(bound)
    r = 0
    pivots = []
    for col in range(nb):
        piv = next((k for k in range(r, len(mat)) if mat[k][col] != 0), None)
        if piv is None:
            raise ArithmeticError(f"free set does not determine {bound[col]}")
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][col]
        mat[r] = [x / p for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col] != 0:
                f = mat[k][col]
                mat[k] = [x - f * y for x, y in zip(mat[k], mat[r])]
        pivots.append(col)
        r += 1
    for k in range(r, len(mat)):
        if any(mat[k]):
            raise ArithmeticError("inconsistent linear constraints")
    out = {v: {v: 1} for v in free}
    for k, col in enumerate(pivots):
        form = {}
        for v, x in zip(vars_, mat[k][nb:]):
            if x.denominator != 1:
                raise ArithmeticError(f"{bound[col]} is not integral in the free coordinates")
            if x:
                form[v] = int(x)
        out[bound[col]] = form
    return out


def from_free(n: int, params: Sequence[int], level: Optional[int] = None) -> PcElement:
    """Element with FREE[n] coordinates set to params (validity is not checked)."""
    sol = affine_solution(n)
    env = dict(zip(T.FREE[n], params))
    env["l"] = level or 0
    vals = tuple(sum(c * env[v] for v, c in sol[name].items()) for name in coord_names(n))
    return PcElement(n, level, vals)


def free_params(el: PcElement) -> tuple:
    return tuple(el[(int(f[1]), int(f[2:]))] for f in T.FREE[el.n])


def random_infinity(n: int, rng: random.Random, lo: int = -20, hi: int = 20) -> PcElement:
    return from_free(n, [rng.randint(lo, hi) for _ in T.FREE[n]])


def is_element(n: int, level: Optional[int], b) -> bool:
    """Membership in B^{n,level}, or B^{n,inf} when level is None."""
    _rank(n)
    if isinstance(b, PcElement):
        b = b.b
    elif isinstance(b, Mapping):
        b = PcElement.from_dict(n, level, b).b
    b = tuple(b)
    if len(b) != len(index_set(n)):
        return False
    env = dict(zip(coord_names(n), b))
    ell = level if level is not None else 0
    for coeffs, lcoef in _linear_rows(n):
        if sum(c * env[v] for v, c in coeffs.items()) + lcoef * ell != 0:
            return False
    if level is None:
        return True
    if level < 1 or any(v < 0 for v in b):
        return False
    for i in range(1, n):
        for t in range(i, i + n + 1):
            top = sum(env[f"b{i}{j}"] for j in range(i, t + 1))
            bot = sum(env.get(f"b{i + 1}{j}", 0) for j in range(i + 1, t + 2))
            if top < bot:
                return False
    return True


def check_element(el: PcElement) -> PcElement:
    if not is_element(el.n, el.level, el.b):
        raise InvalidElement(el.to_json())
    return el


# ---------------------------------------------------------------- operators

@lru_cache(maxsize=None)
def table(direction: str, n: int, k: int) -> CaseTable:
    _rank(n)
    src = T.E_TABLES if direction == "e" else T.F_TABLES
    common, rows = src[n][k]
    cases = [Case(lab, moves, cond or "0 == 0") for lab, moves, cond in rows]
    return CaseTable(coord_names(n), cases, common=common)


@lru_cache(maxsize=None)
def printed_table(direction: str, n: int, k: int) -> CaseTable:
    """The table exactly as printed, before errata."""
    src = T.E_TABLES if direction == "e" else T.F_TABLES
    common, rows = src[n][k]
    cases = [Case(lab, moves, T.PRINTED_CONDS.get((direction, n, k, lab), cond) or "0 == 0")
             for lab, moves, cond in rows]
    return CaseTable(coord_names(n), cases, common=common)


def _act(direction: str, k: int, el: PcElement) -> Optional[PcElement]:
    tab = table(direction, el.n, k)
    row = tab.first(el.b)
    if row is None:
        return None
    out = tab.move(el.b, row)
    if el.level is not None:
        # level-l guard: every decremented entry must have been positive
        if any(v < 0 for v in out):
            return None
    return PcElement(el.n, el.level, out)


def e_tilde(k: int, el: PcElement) -> Optional[PcElement]:
    return _act("e", k, el)


def f_tilde(k: int, el: PcElement) -> Optional[PcElement]:
    return _act("f", k, el)


def dispatch(direction: str, k: int, el: PcElement, printed: bool = False) -> list:
    """Labels of every row whose condition holds (diagnostic).

    With ``printed=True`` the conditions are the uncorrected ones, so zero or
    several labels flag an input where the printed dispatch is ambiguous.
    """
    tab = printed_table(direction, el.n, k) if printed else table(direction, el.n, k)
    return [tab.cases[r].label for r in tab.firing(el.b)]


@lru_cache(maxsize=None)
def _scalar_fns(n: int):
    args = coord_names(n) + ("l",)
    fns = {}
    for name, src in (("eps", T.EPS), ("phi", T.PHI), ("wt", T.WT)):
        fns[name] = compile_exprs([pl(src[n][k], {}) for k in range(n + 1)], args)
    return fns


def _scalars(name: str, el: PcElement) -> tuple:
    return _scalar_fns(el.n)[name](el.b + (el.level or 0,))


def eps(k: int, el: PcElement) -> int:
    return _scalars("eps", el)[k]


def phi(k: int, el: PcElement) -> int:
    return _scalars("phi", el)[k]


def wt(k: int, el: PcElement) -> int:
    return _scalars("wt", el)[k]


def eps_weight(el: PcElement) -> tuple:
    """epsilon(b) = sum eps_i Lambda_i, as Lambda-coordinates."""
    return _scalars("eps", el)


def phi_weight(el: PcElement) -> tuple:
    return _scalars("phi", el)


def wt_vector(el: PcElement) -> tuple:
    return _scalars("wt", el)


def level_of(weight: Sequence[int]) -> int:
    return sum(a * w for a, w in zip(comarks(len(weight) - 1), weight))


# ---------------------------------------------------------------- level l

def _check_bounds(n: int, level: int) -> None:
    _rank(n)
    if not 1 <= level <= MAX_ENUM_LEVEL:
        raise BoundsExceeded(f"level must lie in 1..{MAX_ENUM_LEVEL}, got {level}")


@lru_cache(maxsize=None)
def enumerate_level(n: int, level: int) -> tuple:
    """Every element of B^{n,level}, by a scan of the free coordinates over [0, l]."""
    _check_bounds(n, level)
    out = []
    for params in itertools.product(range(level + 1), repeat=len(T.FREE[n])):
        el = from_free(n, params, level)
        if is_element(n, level, el.b):
            out.append(el)
    return tuple(out)


def enumerate_by_closure(n: int, level: int, start: PcElement = None) -> tuple:
    """Connected component of start under all e_k, f_k (sorted)."""
    _check_bounds(n, level)
    if start is None:
        start = enumerate_level(n, level)[0]
    seen = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for k in range(n + 1):
            for op in (e_tilde, f_tilde):
                y = op(k, x)
                if y is not None and y not in seen:
                    seen.add(y)
                    todo.append(y)
    return tuple(sorted(seen, key=lambda el: el.b))


def minimal_elements(n: int, level: int) -> tuple:
    return tuple(b for b in enumerate_level(n, level) if level_of(eps_weight(b)) == level)


def dominant_weights(n: int, level: int) -> tuple:
    """P-bar_l^+ of D_{n+1}^(2): nonnegative Lambda-coordinates of level l."""
    marks = comarks(n)
    out = []

    def rec(k, left, acc):
        if k == len(marks):
            if left == 0:
                out.append(tuple(acc))
            return
        for v in range(left // marks[k] + 1):
            rec(k + 1, left - v * marks[k], acc + [v])

    rec(0, level, [])
    return tuple(sorted(out))


def crystal_edges(elements: Iterable[PcElement]) -> list:
    """(source, k, target) for every defined f_k inside the given set."""
    els = list(elements)
    inside = set(els)
    edges = []
    for x in els:
        for k in range(x.n + 1):
            y = f_tilde(k, x)
            if y is not None and y in inside:
                edges.append((x, k, y))
    return edges


def to_dot(elements: Iterable[PcElement], name: str = "B") -> str:
    els = list(elements)
    idx = {x: i for i, x in enumerate(els)}
    lines = [f"digraph {name} {{"]
    for x, i in idx.items():
        lab = x.label().replace('"', '\\"')
        lines.append(f'  n{i} [label="{lab}"];')
    for x, k, y in crystal_edges(els):
        lines.append(f'  n{idx[x]} -> n{idx[y]} [label="f_{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- local axioms

def local_violations(el: PcElement) -> list:
    """Partial inverse, phi = eps + wt and eps/phi bookkeeping at one element."""
    bad = []
    n = el.n
    e_vals, p_vals, w_vals = eps_weight(el), phi_weight(el), wt_vector(el)
    for k in range(n + 1):
        if p_vals[k] != e_vals[k] + w_vals[k]:
            bad.append(("phi=eps+wt", k, el.to_json_obj()))
        for fwd, back, de in ((f_tilde, e_tilde, 1), (e_tilde, f_tilde, -1)):
            y = fwd(k, el)
            if y is None:
                continue
            if not is_element(n, el.level, y.b):
                bad.append(("closure", k, el.to_json_obj()))
                continue
            if back(k, y) != el:
                bad.append(("partial-inverse", k, el.to_json_obj()))
            if eps(k, y) != e_vals[k] + de or phi(k, y) != p_vals[k] - de:
                bad.append(("eps/phi-shift", k, el.to_json_obj()))
        if el.level is not None:
            # on a finite crystal eps and phi are the string lengths
            if _run(e_tilde, k, el) != e_vals[k] or _run(f_tilde, k, el) != p_vals[k]:
                bad.append(("string-length", k, el.to_json_obj()))
    return bad


def _run(op, k: int, el: PcElement) -> int:
    steps = 0
    while True:
        el = op(k, el)
        if el is None:
            return steps
        steps += 1
        if steps > 10_000:
            raise RuntimeError("runaway string")
