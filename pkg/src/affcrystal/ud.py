"""Ultra-discretized geometric crystals UD(V) for n = 2, 3, 4 and the maps Omega.

Two independent routes to the same PL data:

* ``ud_e`` tropicalizes the rational e_i^c of :class:`affcrystal.geometric.GcFamily`
  mechanically (the authoritative operator);
* ``printed_e`` / ``ud_eps`` / ``ud_wt`` evaluate transcribed PL text.

Kashiwara operators on UD(V) are the c = +1 / c = -1 restrictions of ``ud_e``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import perfect, ud_tables as U
from .casetable import Case, CaseTable, pl, resolve_lets
from .expr import compile_exprs, substitute, tropicalize
from .formulas import XCOORDS
from .geometric import UnsupportedRank, family

RANKS = (2, 3, 4)


def _rank(n: int) -> None:
    if n not in RANKS:
        raise UnsupportedRank(f"UD(V) is tabulated for n in {RANKS}, got {n}")


def coords(n: int) -> tuple:
    _rank(n)
    return XCOORDS[n]


# ---------------------------------------------------------------- compiled routes

@lru_cache(maxsize=None)
def _trop(n: int):
    fam = family(n)
    cx = ("c",) + fam.coords
    e = {i: compile_exprs([tropicalize(t) for t in fam.e_action[i]], cx) for i in fam.nodes}
    eps = compile_exprs([tropicalize(fam.eps[i]) for i in fam.nodes], fam.coords)
    gam = compile_exprs([tropicalize(fam.gamma[i]) for i in fam.nodes], fam.coords)
    return e, eps, gam


@lru_cache(maxsize=None)
def _printed(n: int):
    xs = coords(n)
    e = {}
    for i, (lets, slots) in U.E_ACTION[n].items():
        env = resolve_lets(lets)
        e[i] = compile_exprs([pl(s, env) for s in slots], ("c",) + xs)
    eps = compile_exprs([pl(U.EPS[n][i], {}) for i in range(n + 1)], xs)
    wt = compile_exprs([pl(U.WT[n][i], {}) for i in range(n + 1)], xs)
    return e, eps, wt


def ud_e(n: int, i: int, c: int, x: Sequence[int]) -> tuple:
    _rank(n)
    return _trop(n)[0][i]((c,) + tuple(x))


def printed_e(n: int, i: int, c: int, x: Sequence[int]) -> tuple:
    _rank(n)
    return _printed(n)[0][i]((c,) + tuple(x))


def ud_eps(n: int, i: int, x: Sequence[int]) -> int:
    _rank(n)
    return _printed(n)[1](tuple(x))[i]


def trop_eps(n: int, i: int, x: Sequence[int]) -> int:
    return _trop(n)[1](tuple(x))[i]


def ud_wt(n: int, i: int, x: Sequence[int]) -> int:
    _rank(n)
    return _printed(n)[2](tuple(x))[i]


def trop_gamma(n: int, i: int, x: Sequence[int]) -> int:
    return _trop(n)[2](tuple(x))[i]


def ud_phi(n: int, i: int, x: Sequence[int]) -> int:
    return ud_eps(n, i, x) + ud_wt(n, i, x)


def ud_kashiwara(n: int, i: int, direction: str, x: Sequence[int]) -> tuple:
    """e~_i is the c = 1 restriction, f~_i the c = -1 restriction."""
    if direction not in ("e", "f"):
        raise ValueError("direction must be 'e' or 'f'")
    return ud_e(n, i, 1 if direction == "e" else -1, x)


@lru_cache(maxsize=None)
def kashiwara_table(direction: str, n: int, k: int, printed: bool = False) -> CaseTable:
    """Displayed case table of e~_k / f~_k on UD(V)."""
    _rank(n)
    lets, tabs = (U.E_KASHIWARA if direction == "e" else U.F_KASHIWARA)[n]
    rows = []
    for lab, moves, cond in tabs[k]:
        if printed:
            cond = U.PRINTED_CONDS.get((direction, n, k, lab), cond)
        rows.append(Case(lab, moves, cond or "0 == 0"))
    return CaseTable(coords(n), rows, lets=lets)


# ---------------------------------------------------------------- Omega

@lru_cache(maxsize=None)
def _omega_fns(n: int):
    bn = perfect.coord_names(n)
    fwd = compile_exprs([pl(U.OMEGA[n][b], {}) for b in bn], coords(n))
    back = compile_exprs([pl(U.OMEGA_INV[n][x], {}) for x in coords(n)], bn)
    return fwd, back


def omega(n: int, x: Sequence[int]) -> perfect.PcElement:
    _rank(n)
    return perfect.PcElement(n, None, _omega_fns(n)[0](tuple(x)))


def omega_inv(n: int, b) -> tuple:
    if not isinstance(b, perfect.PcElement):
        b = perfect.PcElement.from_dict(n, None, b) if isinstance(b, dict) \
            else perfect.PcElement(n, None, tuple(b))
    perfect.check_element(b)
    return _omega_fns(n)[1](b.b)


def _linear_matrix(texts: Sequence[str], cols: Sequence[str]) -> list:
    """Coefficient rows of linear PL text (checked to be linear and homogeneous)."""
    rows = []
    for t in texts:
        f = compile_exprs([pl(t, {})], cols)
        base = f((0,) * len(cols))[0]
        if base != 0:
            raise ValueError(f"{t!r} is not homogeneous")
        row = []
        for k in range(len(cols)):
            unit = [0] * len(cols)
            unit[k] = 1
            row.append(f(tuple(unit))[0])
        # linearity check at a second point
        probe = tuple(range(1, len(cols) + 1))
        if f(probe)[0] != sum(a * b for a, b in zip(row, probe)):
            raise ValueError(f"{t!r} is not linear")
        rows.append(row)
    return rows


def _matmul(a, b):
    return [[sum(Fraction(a[i][k]) * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def omega_matrices(n: int) -> tuple:
    """(Omega, Omega^-1, S) as integer matrices; S maps free coordinates to b."""
    bn = perfect.coord_names(n)
    om = _linear_matrix([U.OMEGA[n][b] for b in bn], coords(n))
    oi = _linear_matrix([U.OMEGA_INV[n][x] for x in coords(n)], bn)
    sol = perfect.affine_solution(n)
    free = perfect.T.FREE[n]
    s = [[sol[b].get(f, 0) for f in free] for b in bn]
    return om, oi, s


def omega_identities(n: int) -> dict:
    """Exact matrix checks: Omega^-1 Omega = I, and Omega Omega^-1 = I on B^{n,inf}.

    Also checks that every Omega(x) satisfies the structural relations
    identically, i.e. the columns of Omega lie in the solution space.
    """
    om, oi, s = omega_matrices(n)
    dim = len(coords(n))
    ident = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    left = _matmul(oi, om) == ident
    right = _matmul(_matmul(om, oi), s) == [[Fraction(v) for v in row] for row in s]
    names = perfect.coord_names(n)
    rows = perfect._linear_rows(n)
    struct = all(
        sum(c * om[names.index(v)][col] for v, c in coeffs.items()) == 0
        for coeffs, _ in rows for col in range(dim))
    return {"inverse_left": left, "inverse_right": right, "structural": struct}


# ---------------------------------------------------------------- verification

def random_x(n: int, rng: random.Random, lo: int = -50, hi: int = 50) -> tuple:
    return tuple(rng.randint(lo, hi) for _ in coords(n))


def verify_iso(n: int, samples: int = 10_000, seed: int = 0, max_witnesses: int = 20) -> dict:
    """Omega commutes with e~_k, f~_k, eps_k, wt_k (hence phi_k) at random points."""
    _rank(n)
    rng = random.Random(seed)
    counts = {"checks": 0, "violations": 0}
    witnesses = []

    def record(kind, k, x, got, want):
        counts["violations"] += 1
        if len(witnesses) < max_witnesses:
            witnesses.append({"check": kind, "k": k, "x": list(x),
                              "b_side": got, "x_side": want})

    for _ in range(samples):
        x = random_x(n, rng)
        b = omega(n, x)
        for k in range(n + 1):
            for d, op in (("f", perfect.f_tilde), ("e", perfect.e_tilde)):
                got = op(k, b)
                want = omega(n, ud_kashiwara(n, k, d, x))
                counts["checks"] += 1
                if got != want:
                    record(f"{d}~", k, x, None if got is None else list(got.b), list(want.b))
            for kind, bf, xf in (("eps", perfect.eps, ud_eps), ("wt", perfect.wt, ud_wt),
                                 ("phi", perfect.phi, ud_phi)):
                g, w = bf(k, b), xf(n, k, x)
                counts["checks"] += 1
                if g != w:
                    record(kind, k, x, g, w)
    return {"n": n, "samples": samples, "seed": seed, **counts, "witnesses": witnesses}


# ---- region predicates of the n = 4 e_0

E0_REGIONS = ("x41", "A", "B", "C", "X", "Y", "Z", "W")


@lru_cache(maxsize=None)
def _region_terms():
    env = resolve_lets(U._N4)
    return compile_exprs([env.get(t) or pl(t, env) for t in E0_REGIONS], coords(4))


def e0_region(x: Sequence[int]) -> str:
    """Label of the first maximal term among the eight e_0 region terms (n = 4)."""
    vals = _region_terms()(tuple(x))
    return E0_REGIONS[vals.index(max(vals))]


def stratified_points(per_region: int, rng: random.Random, lo: int = -50, hi: int = 50,
                      budget: int = 2_000_000) -> list:
    """Points of the n = 4 box hitting every e_0 region at least per_region times.

    Plain rejection sampling would starve the small regions, so each draw picks a
    target region and pushes the coordinates along the gradient of its term until
    it dominates; the result is kept only if it is still inside the box.
    """
    hits = {r: [] for r in E0_REGIONS}
    grads = _region_gradients()
    tries = 0
    while any(len(v) < per_region for v in hits.values()):
        tries += 1
        if tries > budget:
            raise RuntimeError("stratified sampler exceeded its budget")
        target = min(hits, key=lambda r: len(hits[r]))
        x = list(random_x(4, rng, lo, hi))
        g = grads[target]
        for _ in range(200):
            if e0_region(x) == target:
                break
            k = rng.choice([j for j, v in enumerate(g) if v])
            x[k] = max(lo, min(hi, x[k] + (1 if g[k] > 0 else -1) * rng.randint(1, 8)))
        r = e0_region(x)
        if len(hits[r]) < per_region:
            hits[r].append(tuple(x))
    return [p for r in E0_REGIONS for p in hits[r]]


@lru_cache(maxsize=None)
def _region_gradients() -> dict:
    """Coefficient vector of each term minus the mean of the others."""
    env = resolve_lets(U._N4)
    texts = {"x41": "x41"}
    texts.update({t: U._N4[t] for t in E0_REGIONS if t != "x41"})
    rows = dict(zip(E0_REGIONS, _linear_matrix([texts[t] for t in E0_REGIONS], coords(4))))
    out = {}
    for t, row in rows.items():
        others = [rows[s] for s in E0_REGIONS if s != t]
        out[t] = tuple(8 * a - sum(o[j] for o in others) * 8 // 7 for j, a in enumerate(row))
    return out


def cross_check(n: int, samples: int = 10_000, seed: int = 0, per_region: int = 100,
                max_witnesses: int = 10) -> dict:
    """Printed PL formulas against the mechanical tropicalization.

    Points are uniform in [-50, 50]^dim with c in [-5, 5]; for n = 4 the
    stratified e_0 points are added on top.
    """
    _rank(n)
    rng = random.Random(seed)
    pts = [random_x(n, rng) for _ in range(samples)]
    regions = {}
    if n == 4:
        extra = stratified_points(per_region, rng)
        pts += extra
        for p in pts:
            r = e0_region(p)
            regions[r] = regions.get(r, 0) + 1
    cs = [rng.randint(-5, 5) for _ in pts]
    rows = []
    for i in range(n + 1):
        for what in ("e", "eps", "wt"):
            bad, wit = 0, []
            slot_bad = [0] * len(coords(n))
            for x, c in zip(pts, cs):
                if what == "e":
                    got, want = printed_e(n, i, c, x), ud_e(n, i, c, x)
                    diff = [a != b for a, b in zip(got, want)]
                    for k, d in enumerate(diff):
                        slot_bad[k] += d
                    miss = any(diff)
                elif what == "eps":
                    got, want = ud_eps(n, i, x), trop_eps(n, i, x)
                    miss = got != want
                else:
                    got, want = ud_wt(n, i, x), trop_gamma(n, i, x)
                    miss = got != want
                if miss:
                    bad += 1
                    if len(wit) < max_witnesses:
                        wit.append({"x": list(x), "c": c, "printed": _jsonable(got),
                                    "tropicalized": _jsonable(want)})
            row = {"i": i, "quantity": what, "points": len(pts), "mismatches": bad,
                   "witnesses": wit}
            if what == "e":
                row["slot_mismatches"] = dict(zip(coords(n), slot_bad))
            rows.append(row)
    total = sum(r["mismatches"] for r in rows)
    return {"n": n, "samples": samples, "seed": seed, "regions": regions,
            "rows": rows, "violations": total}


def _jsonable(v):
    return list(v) if isinstance(v, tuple) else v


def table_agreement(n: int, samples: int = 10_000, seed: int = 0, printed: bool = False,
                    max_witnesses: int = 10) -> dict:
    """Displayed UD(V) case tables against the c = +-1 restriction of ud_e.

    Only points where exactly one row fires are compared; zero and multiple
    firings are counted separately.
    """
    rng = random.Random(seed)
    pts = [random_x(n, rng) for _ in range(samples)]
    if n == 4:
        pts += stratified_points(100, rng)
    out = []
    for d in ("e", "f"):
        for k in range(n + 1):
            tab = kashiwara_table(d, n, k, printed)
            none = multi = bad = 0
            wit = []
            for x in pts:
                fire = tab.firing(x)
                if not fire:
                    none += 1
                    continue
                if len(fire) > 1:
                    multi += 1
                    continue
                got = tab.move(x, fire[0])
                want = ud_kashiwara(n, k, d, x)
                if got != want:
                    bad += 1
                    if len(wit) < max_witnesses:
                        wit.append({"x": list(x), "row": tab.cases[fire[0]].label,
                                    "table": list(got), "restriction": list(want)})
            out.append({"dir": d, "k": k, "points": len(pts), "no_row": none,
                        "several_rows": multi, "disagree": bad, "witnesses": wit})
    return {"n": n, "printed": printed, "rows": out,
            "violations": sum(r["disagree"] for r in out)}


def transport(n: int, samples: int = 10_000, seed: int = 0, printed: bool = True,
              max_witnesses: int = 10) -> dict:
    """B-side case-table dispatch against Omega-transport of the UD operators.

    For every random x and every (dir, k): the rows of the perfect-crystal table
    that fire at Omega(x) are listed; the first one is compared with
    Omega(ud_kashiwara(x)).  Inputs with no or several firing rows are logged.
    """
    _rank(n)
    rng = random.Random(seed)
    pts = [random_x(n, rng) for _ in range(samples)]
    if n == 4:
        pts += stratified_points(100, rng)
    out = []
    for d in ("e", "f"):
        for k in range(n + 1):
            tab = perfect.printed_table(d, n, k) if printed else perfect.table(d, n, k)
            none = multi = bad = 0
            wit = []
            for x in pts:
                b = omega(n, x)
                fire = tab.firing(b.b)
                want = omega(n, ud_kashiwara(n, k, d, x)).b
                if not fire:
                    none += 1
                elif len(fire) > 1:
                    multi += 1
                got = tab.move(b.b, fire[0]) if fire else None
                if got != want:
                    bad += 1
                    if len(wit) < max_witnesses:
                        wit.append({"x": list(x), "fired": [tab.cases[r].label for r in fire],
                                    "table": got and list(got), "transported": list(want)})
            out.append({"dir": d, "k": k, "points": len(pts), "no_row": none,
                        "several_rows": multi, "disagree": bad, "witnesses": wit})
    return {"n": n, "printed": printed, "rows": out,
            "violations": sum(r["disagree"] for r in out)}
