"""Positive geometric crystals V_1 for C_n^(1), n = 2, 3, 4.

Points are tuples of positive ``Fraction`` in the coordinate order of
``formulas.XCOORDS``.  Symbolic data is kept as interned ``RatExpr`` DAGs and
evaluated through straight-line compiled functions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Sequence

from . import formulas
from .cartan import cartan_matrix, translation_word
from .expr import (ONE, PosConst, Pow, RatExpr, Var, add_all, compile_exprs, parse,
                   parse_block, substitute)
from .spin import e_tilde, f_tilde, weight

RANKS = (2, 3, 4)


class UnsupportedRank(ValueError):
    pass


class EmptyString(ValueError):
    """The node does not occur in the word, so e_i and eps_i are undefined."""


def _check_rank(n: int, allowed=RANKS) -> None:
    if n not in allowed:
        raise UnsupportedRank(f"rank {n} not in {allowed}")


# ---------------------------------------------------------------- Schubert cell

def _schubert_terms(word, a, i, pt):
    terms = {}
    for m, node in enumerate(word):
        if node != i:
            continue
        den = pt[m]
        for k in range(m):
            e = a[word[k]][i]
            if e:
                den = den * pt[k] ** e
        terms[m] = 1 / den
    if not terms:
        raise EmptyString(f"node {i} does not occur in {tuple(word)}")
    return terms


def schubert_eps(word: Sequence[int], cartan, i: int, pt: Sequence):
    terms = _schubert_terms(word, cartan.matrix, i, pt)
    vals = list(terms.values())
    out = vals[0]
    for v in vals[1:]:
        out = out + v
    return out


def schubert_gamma(word: Sequence[int], cartan, i: int, pt: Sequence):
    out = None
    for m, node in enumerate(word):
        e = cartan.matrix[node][i]
        if e:
            f = pt[m] ** e
            out = f if out is None else out * f
    return out if out is not None else (ONE if isinstance(pt[0], RatExpr) else Fraction(1))


def schubert_e(word: Sequence[int], cartan, i: int, c, pt: Sequence) -> tuple:
    """Coordinates of e_i^c on the cell of the given reduced word.

    Works over any field-like values (Fraction or RatExpr).
    """
    terms = _schubert_terms(word, cartan.matrix, i, pt)
    idx = sorted(terms)
    out = list(pt)
    for j in idx:
        num = den = None
        for m in idx:
            t = terms[m]
            top = c * t if m <= j else t
            bot = c * t if m < j else t
            num = top if num is None else num + top
            den = bot if den is None else den + bot
        out[j] = pt[j] * num / den
    return tuple(out)


# ---------------------------------------------------------------- families

class GcFamily:
    """e_i^c, eps_i, gamma_i (i = 0..n) on V_1(x), plus sigma-bar.

    ``e_action[i]`` is a tuple of RatExpr in ``c`` and the x-coordinates.
    ``e0_conjugated`` is sigma-bar^-1 o bar-e_0^c o sigma-bar built by substitution.
    """

    def __init__(self, n: int):
        _check_rank(n)
        self.n = n
        self.cartan = cartan_matrix("Cn1", n)
        self.coords = formulas.XCOORDS[n]
        self.ycoords = formulas.YCOORDS[n]
        self.xword = tuple(translation_word("varpi", n))
        self.yword = tuple(translation_word("varpi_check", n))
        xs = formulas.X_SIDE[n]
        env = parse_block(xs["shared"])
        self.e_action = {i: tuple(parse(t, env) for t in v) for i, v in xs["e"].items()}
        self.eps = {i: parse(t, env) for i, t in xs["eps"].items()}
        self.gamma = {i: parse(t, env) for i, t in xs["gamma"].items()}

        senv = parse_block(formulas.SIGMA4_SHARED) if n == 4 else {}
        self.sigma_bar = tuple(parse(t, senv) for t in formulas.SIGMA[n])
        self.sigma_bar_inv = tuple(parse(t) for t in formulas.SIGMA_INV[n])

        ys = formulas.Y_SIDE[n]
        yenv = parse_block(ys["shared"])
        self.bar_e0 = tuple(parse(t, yenv) for t in ys["e0"])
        self.bar_eps0 = parse(ys["eps0"], yenv)
        self.bar_gamma0 = parse(ys["gamma0"], yenv)

        to_y = dict(zip(self.ycoords, self.sigma_bar))
        inner = substitute(self.sigma_bar_inv, dict(zip(self.ycoords, self.bar_e0)))
        self.e0_conjugated = tuple(substitute(inner, to_y))
        self.eps0_conjugated, self.gamma0_conjugated = substitute(
            [self.bar_eps0, self.bar_gamma0], to_y)

        cx = ("c",) + self.coords
        self._e = {i: compile_exprs(v, cx) for i, v in self.e_action.items()}
        self._e0c = compile_exprs(self.e0_conjugated, cx)
        self._eps = compile_exprs([self.eps[i] for i in self.nodes], self.coords)
        self._gamma = compile_exprs([self.gamma[i] for i in self.nodes], self.coords)
        self._sigma = compile_exprs(self.sigma_bar, self.coords)
        self._sigma_inv = compile_exprs(self.sigma_bar_inv, self.ycoords)

    @property
    def nodes(self) -> range:
        return range(self.n + 1)

    def e(self, i: int, c, pt: Sequence) -> tuple:
        return self._e[i]((c,) + tuple(pt))

    def e0_conj(self, c, pt: Sequence) -> tuple:
        return self._e0c((c,) + tuple(pt))

    def eps_at(self, i: int, pt: Sequence):
        return self._eps(tuple(pt))[i]

    def gamma_at(self, i: int, pt: Sequence):
        return self._gamma(tuple(pt))[i]

    def eps_all(self, pt: Sequence) -> tuple:
        return self._eps(tuple(pt))

    def gamma_all(self, pt: Sequence) -> tuple:
        return self._gamma(tuple(pt))

    def sigma(self, pt: Sequence) -> tuple:
        return self._sigma(tuple(pt))

    def sigma_inv(self, pt: Sequence) -> tuple:
        return self._sigma_inv(tuple(pt))


@lru_cache(maxsize=None)
def family(n: int) -> GcFamily:
    return GcFamily(n)


def sigma_bar(n: int, pt: Sequence) -> tuple:
    return family(n).sigma(pt)


def sigma_bar_inv(n: int, pt: Sequence) -> tuple:
    return family(n).sigma_inv(pt)


def random_positive(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 100), rng.randint(1, 100))


def random_point(n: int, rng: random.Random) -> tuple:
    return tuple(random_positive(rng) for _ in formulas.XCOORDS[n])


# ---------------------------------------------------------------- axioms

def braid_sides(aij: int, aji: int, i: int, j: int, c1, c2):
    """Both sides of the Verma-type braid relation as (node, parameter) lists in written order.

    Returns None for pairs that impose no relation here.
    """
    if aij == 0 and aji == 0:
        return [(i, c1), (j, c2)], [(j, c2), (i, c1)]
    if (aij, aji) == (-1, -1):
        return ([(i, c1), (j, c1 * c2), (i, c2)],
                [(j, c2), (i, c1 * c2), (j, c1)])
    if (aij, aji) == (-2, -1):
        return ([(i, c1), (j, c1 ** 2 * c2), (i, c1 * c2), (j, c2)],
                [(j, c2), (i, c1 * c2), (j, c1 ** 2 * c2), (i, c1)])
    if (aij, aji) == (-3, -1):
        return ([(i, c1), (j, c1 ** 3 * c2), (i, c1 ** 2 * c2), (j, c1 ** 3 * c2 ** 2),
                 (i, c1 * c2), (j, c2)],
                [(j, c2), (i, c1 * c2), (j, c1 ** 3 * c2 ** 2), (i, c1 ** 2 * c2),
                 (j, c1 ** 3 * c2), (i, c1)])
    return None


def _apply_word(fam: GcFamily, steps, pt):
    for node, param in reversed(steps):
        pt = fam.e(node, param, pt)
    return pt


def verify_axioms(n: int, samples: int = 100, seed: int = 0) -> dict:
    """Exact check of the geometric crystal relations at random rational points."""
    fam = family(n)
    a = fam.cartan.matrix
    rng = random.Random(seed)
    checks: Dict[str, int] = {}
    violations = []

    def record(rel, ok, witness):
        checks[rel] = checks.get(rel, 0) + 1
        if not ok:
            violations.append({"relation": rel, **witness})

    pairs = []
    for i in fam.nodes:
        for j in fam.nodes:
            if i < j or (i > j and (a[i][j], a[j][i]) in ((-2, -1), (-3, -1))):
                pairs.append((i, j))

    for _ in range(samples):
        x = random_point(n, rng)
        c, d = random_positive(rng), random_positive(rng)
        wit = {"x": [str(v) for v in x], "c": str(c), "d": str(d)}
        eps_x, gam_x = fam.eps_all(x), fam.gamma_all(x)
        moved = {i: fam.e(i, c, x) for i in fam.nodes}
        for i in fam.nodes:
            y = moved[i]
            eps_y, gam_y = fam.eps_all(y), fam.gamma_all(y)
            record(f"identity[{i}]", fam.e(i, 1, x) == x, wit)
            record(f"group[{i}]", fam.e(i, c, fam.e(i, d, x)) == fam.e(i, c * d, x), wit)
            record(f"positive[{i}]", all(v > 0 for v in y), wit)
            record(f"eps_scale[{i}]", eps_y[i] == eps_x[i] / c, wit)
            for j in fam.nodes:
                record(f"gamma[{i},{j}]", gam_y[j] == c ** a[i][j] * gam_x[j], wit)
                if j != i and a[i][j] == 0 and a[j][i] == 0:
                    record(f"eps_fixed[{j},{i}]", eps_y[j] == eps_x[j], wit)
        for i, j in pairs:
            sides = braid_sides(a[i][j], a[j][i], i, j, c, d)
            if sides is None:
                continue
            lhs, rhs = sides
            record(f"verma[{i},{j}]", _apply_word(fam, lhs, x) == _apply_word(fam, rhs, x), wit)

    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "relations": [{"id": k, "checks": v,
                       "violations": sum(1 for w in violations if w["relation"] == k)}
                      for k, v in sorted(checks.items())],
        "violations": violations,
    }


# ---------------------------------------------------------------- module vectors

def _string_position(n: int, i: int, t: tuple) -> int:
    j = 0
    while True:
        t = e_tilde(n, i, t)
        if t is None:
            return j
        j += 1


def apply_Y(n: int, i: int, c: RatExpr, vec: dict) -> dict:
    """Y_i(c) = y_i(1/c) alpha_i-check(c) on a vector {tableau: RatExpr}."""
    scaled = {}
    for t, coef in vec.items():
        k = weight(n, t)[i]
        scaled[t] = coef * Pow(c, k) if k else coef
    out: dict = {}
    for t, coef in scaled.items():
        j = _string_position(n, i, t)
        s, k = t, 0
        while s is not None:
            term = coef
            if k:
                term = term * Pow(c, -k)
                mult = comb(j + k, k)
                if mult != 1:
                    term = term * PosConst(mult)
            out[s] = out[s] + term if s in out else term
            s = f_tilde(n, i, s)
            k += 1
    return out


def _expand(n: int, word, names, start) -> dict:
    vec = {start: ONE}
    for node, name in reversed(list(zip(word, names))):
        vec = apply_Y(n, node, Var(name), vec)
    return vec


def expand_V1(n: int) -> dict:
    """Y_{i_1}(x_1) ... Y_{i_l}(x_l) (1, 2, ..., n) over the t(varpi_n) word."""
    _check_rank(n, (2, 3))
    return _expand(n, translation_word("varpi", n), formulas.XCOORDS[n], tuple(range(1, n + 1)))


def expand_V2(n: int) -> dict:
    """Y_{i_1}(y_1) ... Y_{i_l}(y_l) (n-bar, ..., 1-bar) over the t(varpi_n check) word."""
    _check_rank(n, (2, 3))
    return _expand(n, translation_word("varpi_check", n), formulas.YCOORDS[n],
                   tuple(range(-n, 0)))


def printed_V1(n: int) -> dict:
    _check_rank(n, (2, 3))
    return {t: parse(s) for t, s in formulas.V1_COEFFS[n].items()}


def printed_V2(n: int) -> dict:
    _check_rank(n, (2, 3))
    return {t: parse(s) for t, s in formulas.V2_COEFFS[n].items()}


def compare_vectors(got: dict, want: dict, names: Sequence[str], points: int = 20,
                    seed: int = 0) -> list:
    """Tableaux whose coefficients differ at some random point (support mismatch included)."""
    rng = random.Random(seed)
    bad = []
    for t in sorted(set(got) | set(want)):
        if t not in got or t not in want:
            bad.append(t)
            continue
        fn = compile_exprs([got[t], want[t]], names)
        for _ in range(points):
            g, w = fn(tuple(random_positive(rng) for _ in names))
            if g != w:
                bad.append(t)
                break
    return bad


def hand_vs_schubert(n: int, samples: int = 100, seed: int = 0) -> list:
    """Points where the generic cell formulas disagree with the transcribed ones (i = 1..n)."""
    fam = family(n)
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x = random_point(n, rng)
        c = random_positive(rng)
        for i in range(1, n + 1):
            ok = (schubert_e(fam.xword, fam.cartan, i, c, x) == fam.e(i, c, x)
                  and schubert_eps(fam.xword, fam.cartan, i, x) == fam.eps_at(i, x)
                  and schubert_gamma(fam.xword, fam.cartan, i, x) == fam.gamma_at(i, x))
            if not ok:
                bad.append((i, x, c))
    return bad
