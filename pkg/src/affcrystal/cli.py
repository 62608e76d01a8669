"""Command-line front end: ``affcrystal <group> <command> [flags]``.

Exit status is 0 on success, 1 when a verification finds violations and 2 on
usage errors.  ``--json`` prints a canonical report (sorted keys), so equal
arguments give byte-identical output; wall time is only included with
``--timing``.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import geometric, perfect, spin, ud
from .cartan import lambda_to_eps
from .expr import laurent_text
from .formulas import XCOORDS, YCOORDS

DEFAULT_SEED = 20240601


class UsageError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    parameters: dict
    seed: Optional[int] = None
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    result: object = None
    wall_time: float = 0.0

    @property
    def violations(self) -> int:
        return int(self.counts.get("violations", 0))

    def to_obj(self, timing: bool = False) -> dict:
        out = {"command": self.command, "parameters": self.parameters, "seed": self.seed,
               "counts": self.counts, "witnesses": self.witnesses}
        if self.result is not None:
            out["result"] = self.result
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_obj(timing), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- argument helpers

_TERM = re.compile(r"([+-]?)(\d*)e(\d+)")


def parse_weight(text: str, n: int) -> tuple:
    """``e3-e7`` (epsilon-coordinates) or ``L:1,0,0`` (Lambda-coordinates)."""
    text = text.replace(" ", "")
    if text.startswith("L:"):
        try:
            lam = tuple(int(v) for v in text[2:].split(","))
        except ValueError:
            raise UsageError(f"bad Lambda weight {text!r}") from None
        if len(lam) != n + 1:
            raise UsageError(f"Lambda weight needs {n + 1} entries, got {len(lam)}")
        return lambda_to_eps(lam)
    if text == "0":
        return (0,) * n
    out = [0] * n
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            break
        sign, coef, idx = m.groups()
        k = int(idx)
        if not 1 <= k <= n:
            raise UsageError(f"e{k} is outside 1..{n}")
        out[k - 1] += (-1 if sign == "-" else 1) * (int(coef) if coef else 1)
        pos = m.end()
    if pos != len(text) or not text:
        raise UsageError(f"cannot parse weight {text!r}")
    return tuple(out)


def parse_ints(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _tableau_str(t) -> str:
    return "(" + ",".join(spin.entry_str(x) for x in t) + ")"


# ---------------------------------------------------------------- commands

def cmd_crystal_enumerate(a) -> RunReport:
    elems = spin.enumerate_crystal(a.n)
    rep = RunReport("crystal enumerate", {"n": a.n, "count": a.count},
                    counts={"elements": len(elems)})
    if a.count:
        rep.result = len(elems)
        rep.text = str(len(elems))
    else:
        rep.result = [list(t) for t in elems]
        rep.text = "\n".join(_tableau_str(t) for t in elems)
    return rep


def cmd_crystal_mult(a) -> RunReport:
    mu = parse_weight(a.weight, a.n)
    m = spin.weight_multiplicity(a.n, mu)
    rep = RunReport("crystal mult", {"n": a.n, "weight": a.weight, "eps": list(mu)},
                    counts={"multiplicity": m}, result=m)
    rep.text = str(m)
    if a.list:
        tabs = spin.tableaux_of_weight(a.n, mu)
        rep.result = {"multiplicity": m, "tableaux": [list(t) for t in tabs]}
        rep.text += "\n" + "\n".join(_tableau_str(t) for t in tabs)
    return rep


def cmd_crystal_graph(a) -> RunReport:
    dot = spin.to_dot(a.n)
    rep = RunReport("crystal graph", {"n": a.n}, counts={"elements": spin.dimension(a.n)},
                    result=dot)
    rep.text = dot.rstrip("\n")
    return rep


def cmd_gc_verify(a) -> RunReport:
    r = geometric.verify_axioms(a.n, a.samples, a.seed)
    bad = geometric.hand_vs_schubert(a.n, a.samples, a.seed)
    checks = sum(x["checks"] for x in r["relations"])
    wit = r["violations"][:a.max_witnesses]
    wit += [{"relation": "schubert", "i": i, "x": [str(v) for v in x], "c": str(c)}
            for i, x, c in bad[:a.max_witnesses]]
    viol = len(r["violations"]) + len(bad)
    rep = RunReport("gc verify", {"n": a.n, "samples": a.samples}, a.seed,
                    {"samples": a.samples, "checks": checks + a.samples * a.n,
                     "violations": viol}, wit, result={"relations": r["relations"]})
    rep.text = f"gc verify n={a.n}: {checks} relation checks, {viol} violations"
    return rep


def cmd_gc_expand(a) -> RunReport:
    if a.which == "V1":
        got, want, names = geometric.expand_V1(a.n), geometric.printed_V1(a.n), XCOORDS[a.n]
    else:
        got, want, names = geometric.expand_V2(a.n), geometric.printed_V2(a.n), YCOORDS[a.n]
    bad = geometric.compare_vectors(got, want, names, a.points, a.seed)
    rep = RunReport("gc expand", {"n": a.n, "which": a.which, "points": a.points}, a.seed,
                    {"coefficients": len(got), "violations": len(bad)},
                    [{"tableau": list(t)} for t in bad],
                    result={_tableau_str(t): laurent_text(got[t]) for t in sorted(got)})
    rep.text = "\n".join(f"{_tableau_str(t)}: {r}" for t, r in zip(sorted(got), rep.result.values()))
    rep.text += f"\n{len(bad)} coefficients differ from the transcribed vector"
    return rep


def _pc_level(a) -> int:
    if a.level is None:
        raise UsageError("--level is required")
    return a.level


def cmd_pc_dump(a) -> RunReport:
    els = perfect.enumerate_level(a.n, _pc_level(a))
    rep = RunReport("pc dump", {"n": a.n, "level": a.level, "format": a.format},
                    counts={"elements": len(els)})
    if a.format == "dot":
        rep.result = perfect.to_dot(els, f"B_{a.n}_{a.level}")
        rep.text = rep.result.rstrip("\n")
    else:
        rep.result = {"elements": [e.to_json_obj() for e in els],
                      "edges": [[s.to_json_obj(), k, t.to_json_obj()]
                                for s, k, t in perfect.crystal_edges(els)]}
        rep.text = "\n".join(e.to_json() for e in els)
    return rep


def cmd_pc_verify_level(a) -> RunReport:
    wit, checks = [], 0
    if a.level is None:
        rng = random.Random(a.seed)
        els = [perfect.random_infinity(a.n, rng) for _ in range(a.samples)]
        extra = {}
    else:
        els = list(perfect.enumerate_level(a.n, a.level))
        closure = perfect.enumerate_by_closure(a.n, a.level)
        mins = perfect.minimal_elements(a.n, a.level)
        dom = perfect.dominant_weights(a.n, a.level)
        low = [e for e in els if perfect.level_of(perfect.eps_weight(e)) < a.level]
        extra = {
            "closure_matches_scan": set(closure) == set(els),
            "eps_bijection": sorted(perfect.eps_weight(b) for b in mins) == list(dom),
            "phi_bijection": sorted(perfect.phi_weight(b) for b in mins) == list(dom),
            "minimal": len(mins), "dominant_weights": len(dom),
            "below_level": len(low),
        }
        for key in ("closure_matches_scan", "eps_bijection", "phi_bijection"):
            if not extra[key]:
                wit.append({"check": key})
        wit += [{"check": "level", "b": e.to_json_obj()} for e in low]
    for e in els:
        checks += 1
        wit.extend({"check": c, "k": k, "b": b} for c, k, b in perfect.local_violations(e))
    viol = len(wit)
    rep = RunReport("pc verify-level", {"n": a.n, "level": a.level, "samples": a.samples},
                    a.seed if a.level is None else None,
                    {"elements": len(els), "checks": checks, "violations": viol},
                    wit[:a.max_witnesses], result=extra or None)
    where = f"B^({a.n},{a.level})" if a.level else f"B^({a.n},inf), {a.samples} samples"
    rep.text = f"pc verify-level {where}: {len(els)} elements, {viol} violations"
    return rep


def _ud_report(name, a, r) -> RunReport:
    rows = r.get("rows", [])
    wit = r.get("witnesses") or [dict(w, **{k: row[k] for k in row if k in ("i", "quantity", "dir", "k")})
                                 for row in rows for w in row["witnesses"]]
    counts = {"samples": a.samples, "violations": r["violations"]}
    if "checks" in r:
        counts["checks"] = r["checks"]
    summary = [{k: v for k, v in row.items() if k != "witnesses"} for row in rows]
    res = {"rows": summary}
    if r.get("regions"):
        res["regions"] = r["regions"]
    rep = RunReport(name, {"n": a.n, "samples": a.samples}, a.seed, counts,
                    wit[:a.max_witnesses], result=res)
    rep.text = f"{name} n={a.n}: {r['violations']} violations"
    for row in summary:
        bad = row.get("mismatches", row.get("disagree", 0))
        if bad or row.get("no_row") or row.get("several_rows"):
            rep.text += "\n  " + json.dumps(row, sort_keys=True)
    return rep


def cmd_ud_verify_iso(a) -> RunReport:
    return _ud_report("ud verify-iso", a, ud.verify_iso(a.n, a.samples, a.seed))


def cmd_ud_cross_check(a) -> RunReport:
    return _ud_report("ud cross-check", a, ud.cross_check(a.n, a.samples, a.seed))


def cmd_ud_transport(a) -> RunReport:
    rep = _ud_report("ud transport", a,
                     ud.transport(a.n, a.samples, a.seed, printed=not a.corrected))
    rep.parameters["tables"] = "corrected" if a.corrected else "printed"
    return rep


def cmd_trop_eval(a) -> RunReport:
    x = parse_ints(a.x)
    if len(x) != len(ud.coords(a.n)):
        raise UsageError(f"--x needs {len(ud.coords(a.n))} integers in the order "
                         + ",".join(ud.coords(a.n)))
    if not 0 <= a.i <= a.n:
        raise UsageError(f"--i must lie in 0..{a.n}")
    trop = ud.ud_e(a.n, a.i, a.c, x)
    printed = ud.printed_e(a.n, a.i, a.c, x)
    res = {"coords": list(ud.coords(a.n)), "tropicalized": list(trop), "printed": list(printed),
           "eps": ud.trop_eps(a.n, a.i, x), "wt": ud.trop_gamma(a.n, a.i, x)}
    rep = RunReport("trop eval", {"n": a.n, "i": a.i, "c": a.c, "x": list(x)},
                    counts={"violations": int(trop != printed)}, result=res)
    rep.text = "(" + ",".join(map(str, trop)) + ")"
    if trop != printed:
        rep.text += "  printed formula gives (" + ",".join(map(str, printed)) + ")"
    return rep


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p, samples=None, seed=False, level=False):
    p.add_argument("--n", type=int, required=True)
    if level:
        p.add_argument("--level", type=int)
    if samples is not None:
        p.add_argument("--samples", type=int, default=samples)
        p.add_argument("--max-witnesses", type=int, default=20)
    if seed:
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true", help="print a canonical JSON report")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.add_argument("--out", help="write the output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="affcrystal", description="Crystal toolkit for C_n^(1).")
    groups = ap.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("crystal", help="spin crystal B(varpi_n)").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("enumerate")
    _common(p)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_crystal_enumerate)
    p = g.add_parser("mult")
    _common(p)
    p.add_argument("--weight", required=True, help="e3-e7 or L:1,0,0")
    p.add_argument("--list", action="store_true", help="also list the tableaux")
    p.set_defaults(fn=cmd_crystal_mult)
    p = g.add_parser("graph")
    _common(p)
    p.set_defaults(fn=cmd_crystal_graph)

    g = groups.add_parser("gc", help="geometric crystals").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("verify")
    _common(p, samples=100, seed=True)
    p.set_defaults(fn=cmd_gc_verify)
    p = g.add_parser("expand")
    _common(p, seed=True)
    p.add_argument("--which", choices=("V1", "V2"), default="V1")
    p.add_argument("--points", type=int, default=20)
    p.set_defaults(fn=cmd_gc_expand)

    g = groups.add_parser("pc", help="perfect crystals").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("dump")
    _common(p, level=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=cmd_pc_dump)
    p = g.add_parser("verify-level")
    _common(p, samples=10_000, seed=True, level=True)
    p.set_defaults(fn=cmd_pc_verify_level)

    g = groups.add_parser("ud", help="ultra-discretization and Omega").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, fn in (("verify-iso", cmd_ud_verify_iso), ("cross-check", cmd_ud_cross_check),
                     ("transport", cmd_ud_transport)):
        p = g.add_parser(name)
        _common(p, samples=10_000, seed=True)
        if name == "transport":
            p.add_argument("--corrected", action="store_true",
                           help="use the corrected tables instead of the printed ones")
        p.set_defaults(fn=fn)

    g = groups.add_parser("trop", help="tropicalized operators").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    p = g.add_parser("eval")
    _common(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--x", required=True, help="comma-separated coordinates")
    p.set_defaults(fn=cmd_trop_eval)
    return ap


_VERIFY = {"gc verify", "gc expand", "pc verify-level", "ud verify-iso", "ud cross-check",
           "ud transport"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        rep = args.fn(args)
        rep.wall_time = time.perf_counter() - start
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        # out-of-range ranks, levels and the like
        print(f"affcrystal: {exc}", file=sys.stderr)
        return 2
    if args.json:
        out = rep.to_json(args.timing)
    else:
        out = rep.text
        if args.timing:
            out += f"\n[{rep.wall_time:.3f} s]"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 1 if rep.command in _VERIFY and rep.violations else 0


if __name__ == "__main__":
    sys.exit(main())
