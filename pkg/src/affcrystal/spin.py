"""The spin crystal B(varpi_n) of C_n^(1).

Entries are signed integers: k stands for k and -k for k-bar.  The total order
1 < 2 < ... < n < n-bar < ... < 1-bar is realised by ``_key``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .cartan import cartan_matrix, eps_to_lambda

MAX_RANK = 10


class InvalidArcs(ValueError):
    pass


def _key(n: int, x: int) -> int:
    return x if x > 0 else 2 * n + 1 + x


def alphabet(n: int) -> list:
    return list(range(1, n + 1)) + list(range(-n, 0))


def entry_str(x: int) -> str:
    return str(x) if x > 0 else f"{-x}bar"


def is_valid(n: int, t: Sequence[int]) -> bool:
    if len(t) != n:
        return False
    if any(not isinstance(x, int) or x == 0 or abs(x) > n for x in t):
        return False
    keys = [_key(n, x) for x in t]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        return False
    pos = {x: i + 1 for i, x in enumerate(t)}
    for p in range(1, n + 1):
        if p in pos and -p in pos:
            k, l = pos[p], pos[-p]
            if k + (n - l + 1) > p:
                return False
    return True


def enumerate_crystal(n: int) -> list:
    """All tableaux in lexicographic order of their positions in the alphabet."""
    if not 1 <= n <= MAX_RANK:
        raise ValueError(f"rank {n} outside 1..{MAX_RANK}")
    alpha = alphabet(n)
    out = []
    for combo in combinations(alpha, n):
        if is_valid(n, combo):
            out.append(tuple(combo))
    return out


def dimension(n: int) -> int:
    return comb(2 * n, n) - (comb(2 * n, n - 2) if n >= 2 else 0)


def weight_eps(n: int, t: Sequence[int]) -> tuple:
    w = [0] * n
    for x in t:
        w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


def weight(n: int, t: Sequence[int]) -> tuple:
    """Level-zero weight in Lambda-coordinates."""
    return eps_to_lambda(weight_eps(n, t), level=0)


def _f_classical(n: int, k: int, t: tuple) -> Optional[tuple]:
    kb, k1, k1b = -k, k + 1, -(k + 1)
    for j, x in enumerate(t):
        nxt = t[j + 1] if j + 1 < n else None
        if x == k and nxt != k1:
            later = [l for l in range(j + 1, n) if t[l] == kb]
            if not later or any(t[l - 1] == k1b for l in later):
                return t[:j] + (k1,) + t[j + 1:]
        if x == k1b and nxt != kb:
            earlier = [l for l in range(j) if t[l] == k]
            if not earlier or any(l + 1 < n and t[l + 1] == k1 for l in earlier):
                return t[:j] + (kb,) + t[j + 1:]
    return None


def _e_classical(n: int, k: int, t: tuple) -> Optional[tuple]:
    kb, k1, k1b = -k, k + 1, -(k + 1)
    for j, x in enumerate(t):
        prv = t[j - 1] if j > 0 else None
        if x == k1 and prv != k:
            later = [l for l in range(j + 1, n) if t[l] == kb]
            if not later or any(t[l - 1] == k1b for l in later):
                return t[:j] + (k,) + t[j + 1:]
        if x == kb and prv != k1b:
            # mirror of the f-side guard; see decisions ledger for the printed variant
            earlier = [l for l in range(j) if t[l] == k]
            if not earlier or any(l + 1 < n and t[l + 1] == k1 for l in earlier):
                return t[:j] + (k1b,) + t[j + 1:]
    return None


def f_tilde(n: int, k: int, t: Sequence[int]) -> Optional[tuple]:
    t = tuple(t)
    if k == 0:
        return (1,) + t[:-1] if t[-1] == -1 else None
    if k == n:
        for j, x in enumerate(t):
            if x == n and (j + 1 >= n or t[j + 1] != -n):
                return t[:j] + (-n,) + t[j + 1:]
        return None
    if 1 <= k < n:
        return _f_classical(n, k, t)
    raise IndexError(f"node {k} out of range 0..{n}")


def e_tilde(n: int, k: int, t: Sequence[int]) -> Optional[tuple]:
    t = tuple(t)
    if k == 0:
        return t[1:] + (-1,) if t[0] == 1 else None
    if k == n:
        for j, x in enumerate(t):
            if x == -n and (j == 0 or t[j - 1] != n):
                return t[:j] + (n,) + t[j + 1:]
        return None
    if 1 <= k < n:
        return _e_classical(n, k, t)
    raise IndexError(f"node {k} out of range 0..{n}")


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def singles_of(mu_eps: Sequence[int]) -> tuple:
    """Signed single entries forced by an epsilon-weight."""
    return tuple(sorted(((i + 1) if v > 0 else -(i + 1) for i, v in enumerate(mu_eps) if v),
                        key=lambda x: (x < 0, x if x > 0 else -x)))


def weight_multiplicity(n: int, mu_eps: Sequence[int]) -> int:
    """|B(varpi_n)_mu| from the arc count; 0 if mu is not a weight."""
    if len(mu_eps) != n or any(v not in (-1, 0, 1) for v in mu_eps):
        return 0
    m = sum(1 for v in mu_eps if v)
    if (n - m) % 2:
        return 0
    return catalan((n - m) // 2)


def brute_multiplicity(n: int, mu_eps: Sequence[int]) -> int:
    target = tuple(mu_eps)
    return sum(1 for t in enumerate_crystal(n) if weight_eps(n, t) == target)


@dataclass(frozen=True)
class ArcDiagram:
    """Noncrossing perfect matching; arcs are 1-based positions among ``nodes``."""

    nodes: tuple
    arcs: tuple

    @classmethod
    def from_values(cls, nodes: Iterable[int], arcs: Iterable) -> "ArcDiagram":
        nodes = tuple(sorted(nodes))
        index = {v: i + 1 for i, v in enumerate(nodes)}
        try:
            pos = tuple(sorted((index[a], index[b]) for a, b in arcs))
        except KeyError as exc:
            raise InvalidArcs(f"arc endpoint {exc.args[0]} is not a node") from None
        return cls(nodes, pos)

    def value_arcs(self) -> tuple:
        return tuple(sorted((self.nodes[a - 1], self.nodes[b - 1]) for a, b in self.arcs))


def _check_diagram(d: ArcDiagram) -> None:
    size = len(d.nodes)
    seen = []
    for a, b in d.arcs:
        if not 1 <= a < b <= size:
            raise InvalidArcs(f"bad arc {(a, b)} on {size} nodes")
        seen.extend((a, b))
    if sorted(seen) != list(range(1, size + 1)):
        raise InvalidArcs("arcs must cover every node exactly once")
    for (a, b), (c, d2) in combinations(d.arcs, 2):
        if a < c < b < d2 or c < a < d2 < b:
            raise InvalidArcs(f"arcs {(a, b)} and {(c, d2)} cross")


def _assemble(n: int, singles: Iterable[int], pairs: Iterable[int]) -> tuple:
    entries = set(singles)
    for p in pairs:
        entries.add(p)
        entries.add(-p)
    return tuple(sorted(entries, key=lambda x: _key(n, x)))


def arcs_to_tableau(n: int, singles: Iterable[int], diagram: ArcDiagram) -> tuple:
    singles = tuple(singles)
    _check_diagram(diagram)
    expected = tuple(sorted(set(range(1, n + 1)) - {abs(s) for s in singles}))
    if tuple(diagram.nodes) != expected:
        raise InvalidArcs(f"nodes {diagram.nodes} do not match singles {singles}")
    pairs = [diagram.nodes[b - 1] for _, b in diagram.arcs]
    t = _assemble(n, singles, pairs)
    if not is_valid(n, t):
        raise InvalidArcs(f"arc diagram yields an inadmissible tableau {t}")
    return t


def tableau_to_arcs(n: int, t: Sequence[int]) -> tuple:
    """Return (singles, ArcDiagram) for a valid tableau."""
    t = tuple(t)
    if not is_valid(n, t):
        raise InvalidArcs(f"{t} is not in B(varpi_{n})")
    present = set(t)
    pairs = {p for p in range(1, n + 1) if p in present and -p in present}
    singles = tuple(x for x in t if abs(x) not in pairs)
    nodes = tuple(sorted(set(range(1, n + 1)) - {abs(s) for s in singles}))
    index = {v: i + 1 for i, v in enumerate(nodes)}
    # each pair value (a right endpoint) closes on the nearest open absent value
    stack = []
    arcs = []
    for v in nodes:
        if v in pairs:
            if not stack:
                raise InvalidArcs(f"pair {v} has no free node on its left")
            arcs.append((index[stack.pop()], index[v]))
        else:
            stack.append(v)
    if stack:
        raise InvalidArcs("unmatched nodes remain")
    return singles, ArcDiagram(nodes, tuple(sorted(arcs)))


def noncrossing_matchings(size: int) -> list:
    """All noncrossing perfect matchings of positions 1..size."""
    def rec(lo, hi):
        if lo > hi:
            return [()]
        out = []
        for mid in range(lo + 1, hi + 1, 2):
            for inner in rec(lo + 1, mid - 1):
                for outer in rec(mid + 1, hi):
                    out.append(((lo, mid),) + inner + outer)
        return out
    return [tuple(sorted(m)) for m in rec(1, size)]


def tableaux_of_weight(n: int, mu_eps: Sequence[int]) -> list:
    """Constructive listing of B(varpi_n)_mu through arc diagrams."""
    singles = singles_of(mu_eps)
    nodes = tuple(sorted(set(range(1, n + 1)) - {abs(s) for s in singles}))
    if len(nodes) % 2:
        return []
    out = [arcs_to_tableau(n, singles, ArcDiagram(nodes, m))
           for m in noncrossing_matchings(len(nodes))]
    return sorted(out, key=lambda t: [_key(n, x) for x in t])


def weight_shift_ok(n: int, k: int, t: tuple, s: tuple) -> bool:
    """weight(s) == weight(t) - alpha_k, the test used for operator checks."""
    cd = cartan_matrix("Cn1", n)
    alpha = cd.root(k)
    return all(a == b - c for a, b, c in zip(weight(n, s), weight(n, t), alpha))


def to_dot(n: int) -> str:
    """Crystal graph with an edge labelled k for every defined f_k."""
    elems = enumerate_crystal(n)
    lines = [f"digraph B_varpi_{n} {{"]
    ident = {t: i for i, t in enumerate(elems)}
    for t, i in ident.items():
        label = ",".join(entry_str(x) for x in t)
        lines.append(f'  v{i} [label="({label})"];')
    for t, i in ident.items():
        for k in range(n + 1):
            s = f_tilde(n, k, t)
            if s is not None:
                lines.append(f'  v{i} -> v{ident[s]} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
