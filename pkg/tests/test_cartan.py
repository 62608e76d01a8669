import itertools
import random

import pytest
from hypothesis import given, strategies as st

from affcrystal.cartan import (
    InvalidRank, NotAffine, apply_sigma, apply_translation, cartan_matrix, eps_to_lambda,
    kac_labels, lambda_to_eps, reflect, translation_closed_form, translation_word,
)


def _kernel_by_search(matrix, bound=4):
    # independent oracle: smallest positive integer vector killed by the matrix
    size = len(matrix)
    for vec in itertools.product(range(1, bound + 1), repeat=size):
        if all(sum(r[j] * vec[j] for j in range(size)) == 0 for r in matrix):
            return vec
    return None


def test_c2_matrix_rows():
    assert cartan_matrix("Cn1", 2).matrix == ((2, -1, 0), (-2, 2, -2), (0, -1, 2))


def test_c3_matrix_entries():
    a = cartan_matrix("Cn1", 3).matrix
    assert (a[0][1], a[1][0], a[1][2], a[2][1], a[2][3], a[3][2]) == (-1, -2, -1, -1, -2, -1)
    assert a[0][2] == a[0][3] == a[1][3] == 0


def test_dual_is_transpose_with_labels_swapped():
    c = cartan_matrix("Cn1", 2)
    d = cartan_matrix("Dn1_2_dual", 2)
    assert d.matrix == tuple(zip(*c.matrix))
    assert (d.marks, d.comarks) == ((1, 1, 1), (1, 2, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_marks_and_comarks(n):
    c = cartan_matrix("Cn1", n)
    assert c.marks == (1,) + (2,) * (n - 1) + (1,)
    assert c.comarks == (1,) * (n + 1)
    a = c.matrix
    assert all(sum(a[i][j] * c.marks[j] for j in range(n + 1)) == 0 for i in range(n + 1))
    assert all(sum(c.comarks[i] * a[i][j] for i in range(n + 1)) == 0 for j in range(n + 1))
    assert all(a[i][i] == 2 for i in range(n + 1))
    assert all(a[i][j] <= 0 for i in range(n + 1) for j in range(n + 1) if i != j)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kac_labels_match_search(n):
    a = cartan_matrix("Cn1", n).matrix
    marks, comarks = kac_labels(a)
    assert marks == _kernel_by_search(a)
    assert comarks == _kernel_by_search([list(c) for c in zip(*a)])


def test_rank_and_affinity_errors():
    with pytest.raises(InvalidRank):
        cartan_matrix("Cn1", 1)
    with pytest.raises(NotAffine):
        kac_labels([[2, -1], [-1, 2]])


def test_reflection_examples():
    assert reflect(0, (1, 0, 0)) == (-1, 2, 0)
    assert reflect(2, (0, 0, 1)) == (0, 2, -1)
    assert reflect(1, (0, 0, 0)) == (0, 0, 0)
    with pytest.raises(IndexError):
        reflect(3, (0, 0, 0))


def test_sigma():
    assert apply_sigma((1, 2, 3, 4)) == (4, 3, 2, 1)
    assert apply_sigma((1, 0, 0)) == (0, 0, 1)


def test_translation_examples():
    assert apply_translation("varpi", (1, 0, 0)) == (0, 0, 1)
    assert apply_translation("varpi", (0, 0, 0, 0)) == (0, 0, 0, 0)
    assert apply_translation("varpi", (1, 1, 1, 1, 1)) == (-4, 1, 1, 1, 6)
    # the n=4 word has 1 + 10 letters counting sigma
    assert len(translation_word("varpi", 4)) == 10


weights = st.integers(2, 8).flatmap(
    lambda n: st.lists(st.integers(-10, 10), min_size=n + 1, max_size=n + 1))


@given(weights, st.data())
def test_reflections_are_level_preserving_involutions(lam, data):
    n = len(lam) - 1
    i = data.draw(st.integers(0, n))
    c = cartan_matrix("Cn1", n)
    assert reflect(i, reflect(i, lam)) == tuple(lam)
    assert c.level(reflect(i, lam)) == c.level(lam)
    # s_i(lam) = lam - lam_i alpha_i
    alpha = c.root(i)
    assert reflect(i, lam) == tuple(x - lam[i] * a for x, a in zip(lam, alpha))


@given(weights)
def test_translations_match_closed_form(lam):
    n = len(lam) - 1
    lvl = sum(lam)
    want = list(lam)
    want[n] += lvl
    want[0] -= lvl
    assert apply_translation("varpi", lam) == tuple(want)
    want_check = list(lam)
    want_check[n] -= lvl
    want_check[0] += lvl
    assert apply_translation("varpi_check", lam) == tuple(want_check)
    assert translation_closed_form("varpi", lam) == tuple(want)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=8), st.integers(-3, 3))
def test_eps_lambda_round_trip(eps, level):
    lam = eps_to_lambda(eps, level)
    assert lambda_to_eps(lam) == tuple(eps)
    assert sum(lam) == level


def test_translation_random_thousand():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(2, 8)
        lam = tuple(rng.randint(-10, 10) for _ in range(n + 1))
        assert apply_translation("varpi", lam) == translation_closed_form("varpi", lam)
