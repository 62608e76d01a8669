"""Cartan data for C_n^(1) and its Langlands dual D_{n+1}^(2).

Weights live in P_cl and are plain integer tuples (lam_0, ..., lam_n) over the
fundamental weights.  The delta component is never tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

ALGEBRAS = ("Cn1", "Dn1_2_dual")

Weight = tuple


class InvalidRank(ValueError):
    pass


class NotAffine(ValueError):
    pass


@dataclass(frozen=True)
class CartanData:
    algebra: str
    n: int
    matrix: tuple
    marks: tuple
    comarks: tuple

    def entry(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def level(self, lam: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.comarks, lam))

    def root(self, k: int) -> tuple:
        """alpha_k in Lambda-coordinates: column k of the matrix."""
        return tuple(self.matrix[i][k] for i in range(self.n + 1))


def _cn1_matrix(n: int) -> list:
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2
    for j in range(1, n):
        a[j][j + 1] = -1
        a[j + 1][j] = -1
    a[1][0] = -2
    a[n - 1][n] = -2
    a[0][1] = -1
    a[n][n - 1] = -1
    return a


def cartan_matrix(algebra: str, n: int) -> CartanData:
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}")
    if not isinstance(n, int) or n < 2:
        raise InvalidRank(f"rank must be an integer >= 2, got {n!r}")
    a = _cn1_matrix(n)
    if algebra == "Dn1_2_dual":
        a = [list(row) for row in zip(*a)]
    marks, comarks = kac_labels(a)
    return CartanData(algebra, n, tuple(tuple(r) for r in a), marks, comarks)


def _null_vector(rows: list) -> tuple:
    """Primitive positive integer generator of a one-dimensional kernel."""
    m = [[Fraction(x) for x in r] for r in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise NotAffine(f"kernel has dimension {len(free)}, expected 1")
    f = free[0]
    v = [Fraction(0)] * ncols
    v[f] = Fraction(1)
    for row_idx, c in enumerate(pivots):
        v[c] = -m[row_idx][f]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise NotAffine("kernel vector is not positive")
    return tuple(ints)


def kac_labels(matrix: Sequence[Sequence[int]]) -> tuple:
    """Return (marks, comarks): kernel of A and of A^T respectively."""
    rows = [list(r) for r in matrix]
    marks = _null_vector(rows)
    comarks = _null_vector([list(c) for c in zip(*rows)])
    return marks, comarks


def _check_node(i: int, n: int) -> None:
    if not 0 <= i <= n:
        raise IndexError(f"node {i} out of range 0..{n}")


def reflect(i: int, lam: Sequence[int]) -> tuple:
    """Simple reflection s_i on Lambda-coordinates of C_n^(1)."""
    n = len(lam) - 1
    _check_node(i, n)
    out = list(lam)
    li = lam[i]
    out[i] = -li
    if i == 0:
        out[1] += 2 * li
    elif i == n:
        out[n - 1] += 2 * li
    else:
        out[i - 1] += li
        out[i + 1] += li
    return tuple(out)


def apply_sigma(lam: Sequence[int]) -> tuple:
    return tuple(reversed(tuple(lam)))


def translation_word(which: str, n: int) -> list:
    """Reflection indices of the translation word, in written (left to right) order.

    The Dynkin automorphism sits in front of the word and is applied last.
    """
    word = []
    if which == "varpi":
        for start in range(n, 0, -1):
            word.extend(range(start, n + 1))
    elif which == "varpi_check":
        for top in range(0, n):
            word.extend(range(top, -1, -1))
    else:
        raise ValueError(f"unknown translation {which!r}")
    return word


def apply_translation(which: str, lam: Sequence[int]) -> tuple:
    n = len(lam) - 1
    out = tuple(lam)
    for i in reversed(translation_word(which, n)):
        out = reflect(i, out)
    return apply_sigma(out)


def translation_closed_form(which: str, lam: Sequence[int]) -> tuple:
    n = len(lam) - 1
    lvl = sum(lam)
    sign = 1 if which == "varpi" else -1
    out = list(lam)
    out[n] += sign * lvl
    out[0] -= sign * lvl
    return tuple(out)


def eps_to_lambda(eps: Sequence[int], level: int = 0) -> tuple:
    """Classical C_n weight in epsilon-coordinates to Lambda-coordinates.

    The Lambda_0 coefficient is fixed by the requested level (comarks are all 1).
    """
    n = len(eps)
    fin = [eps[i] - eps[i + 1] for i in range(n - 1)] + [eps[n - 1]]
    return (level - sum(fin),) + tuple(fin)


def lambda_to_eps(lam: Sequence[int]) -> tuple:
    """Inverse of eps_to_lambda on the classical part (lam_0 is ignored)."""
    n = len(lam) - 1
    eps = [0] * n
    eps[n - 1] = lam[n]
    for i in range(n - 2, -1, -1):
        eps[i] = eps[i + 1] + lam[i + 1]
    return tuple(eps)
